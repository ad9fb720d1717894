"""Nakajima monomials and their single-step crystal operators.

A monomial is a weight together with a finite exponent map on the
parity-respecting grid: points (i, c) with i a Dynkin vertex and c an
integer of the same parity as i.  The crystal operators act by
multiplication with the auxiliary monomials

    z_{i,k} = e^{alpha_i} * y_{i,k} * y_{i,k+2} * prod_{j ~ i} y_{j,k+1}^{-1}

as  f_i(p) = p * z_{i, F_i(p)-2}^{-1}  and  e_i(p) = p * z_{i, E_i(p)},
where F_i (resp. E_i) is the largest (smallest) position maximising the
upper (negated lower) column sum.  This convention reproduces the crystal
graphs of the small SL_3 examples edge by edge; see the tests.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cartan import RootDatum, Weight, w_add, w_scale, weight_str

LatticePoint = tuple[int, int]


def is_lattice_point(datum: RootDatum, i: int, c: int) -> bool:
    return i in datum.neighbours and datum.parity[i] == c % 2


def require_lattice_point(datum: RootDatum, i: int, c: int) -> None:
    if i not in datum.neighbours:
        raise ValueError(f"vertex {i} not in diagram")
    if datum.parity[i] != c % 2:
        raise ValueError(f"point ({i},{c}) violates parity: "
                         f"vertex {i} has parity {datum.parity[i]}")


@dataclass(frozen=True, order=True)
class Monomial:
    """An element of the monomial crystal: e^weight * prod y_{i,c}^{e}."""

    weight: Weight
    exponents: tuple[tuple[LatticePoint, int], ...]  # sorted, values nonzero

    def exponent(self, i: int, c: int) -> int:
        for (pi, pc), ex in self.exponents:
            if (pi, pc) == (i, c):
                return ex
        return 0

    def column(self, i: int) -> list[tuple[int, int]]:
        """[(c, exponent)] for column i, by c ascending (the exponent tuple
        is sorted by point, so the column comes out in order)."""
        return [(pc, ex) for (pi, pc), ex in self.exponents if pi == i]

    def support(self) -> tuple[LatticePoint, ...]:
        return tuple(pt for pt, _ in self.exponents)

    def is_one(self) -> bool:
        return not self.exponents and not any(self.weight)

    def __str__(self):
        if not self.exponents:
            return f"e{weight_str(self.weight)}"
        ys = "*".join(
            f"y[{i},{c}]" if ex == 1 else f"y[{i},{c}]^{ex}"
            for (i, c), ex in self.exponents
        )
        return f"e{weight_str(self.weight)}*{ys}"

    def to_json(self) -> dict:
        return {
            "weight": list(self.weight),
            "exponents": [{"i": i, "c": c, "e": ex} for (i, c), ex in self.exponents],
        }


def make_monomial(weight: Weight, exponents: dict[LatticePoint, int]) -> Monomial:
    return Monomial(tuple(weight),
                    tuple(sorted((pt, ex) for pt, ex in exponents.items() if ex != 0)))


def monomial_from_json(data: dict) -> Monomial:
    exps = {(d["i"], d["c"]): d["e"] for d in data["exponents"]}
    return make_monomial(tuple(data["weight"]), exps)


def one(datum: RootDatum) -> Monomial:
    return Monomial(datum.zero, ())


def y_monomial(datum: RootDatum, i: int, c: int, n: int = 1) -> Monomial:
    """e^{n w_i} y_{i,c}^n, the highest-weight seed of a fundamental
    subcrystal."""
    require_lattice_point(datum, i, c)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return one(datum)
    return make_monomial(w_scale(n, datum.fundamentals[i]), {(i, c): n})


def _z_monomial_cached(datum: RootDatum, i: int, k: int, power: int) -> Monomial:
    cache = datum.__dict__.setdefault("_z_cache", {})
    key = (i, k, power)
    out = cache.get(key)
    if out is None:
        require_lattice_point(datum, i, k)
        exps: dict[LatticePoint, int] = {(i, k): power, (i, k + 2): power}
        for j in datum.neighbours[i]:
            exps[(j, k + 1)] = exps.get((j, k + 1), 0) - power
        out = make_monomial(w_scale(power, datum.alphas[i]), exps)
        cache[key] = out
    return out


def z_monomial(datum: RootDatum, i: int, k: int) -> Monomial:
    return _z_monomial_cached(datum, i, k, 1)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    # both exponent tuples are sorted by point: merge, do not re-sort
    ea, eb = a.exponents, b.exponents
    la, lb = len(ea), len(eb)
    out = []
    ia = ib = 0
    while ia < la and ib < lb:
        pa, va = ea[ia]
        pb, vb = eb[ib]
        if pa == pb:
            v = va + vb
            if v:
                out.append((pa, v))
            ia += 1
            ib += 1
        elif pa < pb:
            out.append(ea[ia])
            ia += 1
        else:
            out.append(eb[ib])
            ib += 1
    out.extend(ea[ia:])
    out.extend(eb[ib:])
    return Monomial(w_add(a.weight, b.weight), tuple(out))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return Monomial((0,) * len(a.weight), ())
    return Monomial(w_scale(k, a.weight),
                    tuple((pt, k * ex) for pt, ex in a.exponents))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return mono_mul(a, mono_pow(b, -1))


def validate_monomial(datum: RootDatum, p: Monomial) -> None:
    """Check the two membership conditions of the monomial crystal."""
    for (i, c), _ in p.exponents:
        require_lattice_point(datum, i, c)
    for i in datum.vertices:
        col = sum(ex for (pi, _), ex in p.exponents if pi == i)
        if datum.pairing(i, p.weight) != col:
            raise ValueError(
                f"weight/exponent mismatch in column {i}: "
                f"<a_{i}^v, wt> = {datum.pairing(i, p.weight)} but column sums to {col}")


def column_stats(p: Monomial, i: int) -> tuple[int, int, int | None, int | None]:
    """Return (phi_i, eps_i, F_i, E_i) for the monomial p.

    phi_i is the largest upper column sum max_k sum_{l >= k} p[i,l] and
    eps_i the largest negated lower column sum, both at least 0 (the empty
    tail/head attains 0).  F_i is the largest k maximising the upper sum
    (None when phi_i = 0); E_i the smallest k maximising the negated lower
    sum (None when eps_i = 0).
    """
    col = p.column(i)
    if not col:
        return 0, 0, None, None
    phi = 0
    best_f = None
    running = 0
    for c, ex in reversed(col):  # descending c; running = sum_{l >= c}
        running += ex
        if running > phi:
            phi = running
            best_f = c
    eps = 0
    best_e = None
    running = 0
    for c, ex in col:  # ascending c; running = sum_{l <= c}
        running += ex
        if -running > eps:
            eps = -running
            best_e = c
    return phi, eps, best_f, best_e


def f_op(datum: RootDatum, p: Monomial, i: int) -> Monomial | None:
    phi, _, best_f, _ = column_stats(p, i)
    if phi == 0:
        return None
    return mono_mul(p, _z_monomial_cached(datum, i, best_f - 2, -1))


def e_op(datum: RootDatum, p: Monomial, i: int) -> Monomial | None:
    _, eps, _, best_e = column_stats(p, i)
    if eps == 0:
        return None
    return mono_mul(p, _z_monomial_cached(datum, i, best_e, 1))
