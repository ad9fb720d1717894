"""Root data and Weyl-group combinatorics for simply-laced types and GL_n.

Weights are plain integer tuples.  For the semisimple kinds (A, D, E6, E7,
E8) a weight is stored in fundamental-weight coordinates, so that the
pairing <alpha_i^vee, w> is simply ``w[i-1]`` and dominance is a
nonnegativity check.  For GL the epsilon-basis of rank n is used instead:
``w = (w_1, ..., w_n)`` means ``w_1 eps_1 + ... + w_n eps_n``, the pairing
is ``w[i-1] - w[i]`` and dominance means weakly decreasing.

Every vertex set is 1-based.  The two-colouring ("parity") of the Dynkin
diagram is fixed once per kind: for A and GL, ``parity(i) = i mod 2``; for
D and E, the parity of a vertex is its graph distance from vertex 1, mod 2.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

Weight = tuple[int, ...]

KINDS = ("A", "D", "E6", "E7", "E8", "GL")


def w_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b, strict=True))


def w_sub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b, strict=True))


def w_scale(k: int, a: Weight) -> Weight:
    return tuple(k * x for x in a)


def weight_str(w: Weight) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def _edge_list(kind: str, rank: int) -> list[tuple[int, int]]:
    if kind == "A":
        return [(i, i + 1) for i in range(1, rank)]
    if kind == "GL":
        return [(i, i + 1) for i in range(1, rank - 1)]
    if kind == "D":
        return [(i, i + 1) for i in range(1, rank - 1)] + [(rank - 2, rank)]
    if kind in ("E6", "E7", "E8"):
        chain = [1, 3, 4, 5, 6, 7, 8][: rank - 1]
        return [(a, b) for a, b in zip(chain, chain[1:])] + [(2, 4)]
    raise ValueError(f"unknown kind {kind!r}")


class RootDatum:
    """A based root datum with everything precomputed at construction.

    Instances are immutable in practice (nothing mutates them after
    ``__init__``) and are shared via the lru_cache on
    :func:`build_root_datum`, so they are safe to use from several threads.
    """

    def __init__(self, kind: str, rank: int):
        if kind not in KINDS:
            raise ValueError(f"unknown Cartan kind {kind!r}; expected one of {KINDS}")
        if kind == "A" and rank < 1:
            raise ValueError("type A needs rank >= 1")
        if kind == "GL" and rank < 1:
            raise ValueError("GL needs rank >= 1")
        if kind == "D" and rank < 4:
            raise ValueError("type D needs rank >= 4")
        if kind in ("E6", "E7", "E8") and rank != int(kind[1]):
            raise ValueError(f"type {kind} has fixed rank {kind[1]}")

        self.kind = kind
        self.rank = rank
        # number of Dynkin vertices and the rank of the weight lattice
        self.num_vertices = rank - 1 if kind == "GL" else rank
        self.lattice_rank = rank
        self.vertices: tuple[int, ...] = tuple(range(1, self.num_vertices + 1))

        edges = _edge_list(kind, rank)
        nbrs: dict[int, list[int]] = {i: [] for i in self.vertices}
        for a, b in edges:
            nbrs[a].append(b)
            nbrs[b].append(a)
        self.neighbours: dict[int, tuple[int, ...]] = {
            i: tuple(sorted(v)) for i, v in nbrs.items()
        }
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(edges))

        self.dist = self._all_distances()
        if kind in ("A", "GL"):
            self.parity: dict[int, int] = {i: i % 2 for i in self.vertices}
        else:
            self.parity = {i: self.dist[1, i] % 2 for i in self.vertices}
        for a, b in self.edges:
            assert self.parity[a] != self.parity[b], "two-colouring failed"

        if kind == "GL":
            n = rank
            self.alphas = {
                i: tuple(1 if j == i - 1 else -1 if j == i else 0 for j in range(n))
                for i in self.vertices
            }
            self.fundamentals = {
                i: tuple(1 if j < i else 0 for j in range(n)) for i in self.vertices
            }
            self.det: Weight | None = (1,) * n
            self.rho: Weight = tuple(range(n - 1, -1, -1))
        else:
            m = self.num_vertices
            self.alphas = {
                i: tuple(self._cartan_entry(j, i) for j in self.vertices)
                for i in self.vertices
            }
            self.fundamentals = {
                i: tuple(1 if j == i else 0 for j in self.vertices)
                for i in self.vertices
            }
            self.det = None
            self.rho = (1,) * m
            self._cartan_inverse = _invert_integer_matrix(
                [[self._cartan_entry(i, j) for j in self.vertices] for i in self.vertices]
            )

        self.zero: Weight = (0,) * self.lattice_rank
        self.longest_word: tuple[int, ...] = self._greedy_descent_word()
        self.positive_roots = self._close_positive_roots()
        assert len(self.positive_roots) == len(self.longest_word)
        self._irr_cache: dict[Weight, object] = {}

    # -- basic structure ---------------------------------------------------

    def _cartan_entry(self, i: int, j: int) -> int:
        if i == j:
            return 2
        return -1 if j in self.neighbours[i] else 0

    def _all_distances(self) -> dict[tuple[int, int], int]:
        dist: dict[tuple[int, int], int] = {}
        for src in self.vertices:
            seen = {src: 0}
            frontier = [src]
            while frontier:
                nxt = []
                for v in frontier:
                    for u in self.neighbours[v]:
                        if u not in seen:
                            seen[u] = seen[v] + 1
                            nxt.append(u)
                frontier = nxt
            if len(seen) != len(self.vertices) and self.vertices:
                raise ValueError("Dynkin diagram must be connected")
            for v, d in seen.items():
                dist[src, v] = d
        return dist

    def __repr__(self):
        return f"RootDatum({self.kind}, {self.rank})"

    # -- pairings and reflections ------------------------------------------

    def pairing(self, i: int, w: Weight) -> int:
        """<alpha_i^vee, w>."""
        if i not in self.neighbours:
            raise ValueError(f"vertex {i} not in diagram")
        if self.kind == "GL":
            return w[i - 1] - w[i]
        return w[i - 1]

    def reflect(self, i: int, w: Weight) -> Weight:
        """s_i(w) = w - <alpha_i^vee, w> alpha_i."""
        return w_sub(w, w_scale(self.pairing(i, w), self.alphas[i]))

    def is_dominant(self, w: Weight) -> bool:
        return all(self.pairing(i, w) >= 0 for i in self.vertices)

    def weight_of_mults(self, mults: dict[int, int], det: int = 0) -> Weight:
        """The weight sum(mults[i] * fundamental_i) (+ det * det_n for GL)."""
        w = self.zero
        for i, m in mults.items():
            w = w_add(w, w_scale(m, self.fundamentals[i]))
        if det:
            if self.det is None:
                raise ValueError("det component only exists for GL")
            w = w_add(w, w_scale(det, self.det))
        return w

    def root_coords(self, w: Weight) -> tuple[int, ...] | None:
        """Coordinates of w in the simple-root basis, or None if w is not
        in the root lattice."""
        if self.kind == "GL":
            if sum(w) != 0:
                return None
            out, acc = [], 0
            for x in w[:-1]:
                acc += x
                out.append(acc)
            return tuple(out)
        coords = []
        for row in self._cartan_inverse:
            val = sum(r * x for r, x in zip(row, w))
            if val.denominator != 1:
                return None
            coords.append(int(val))
        return tuple(coords)

    # -- Weyl group ---------------------------------------------------------

    def dominant_representative(self, w: Weight) -> tuple[Weight, tuple[int, ...]]:
        """Return (w+, word) with w+ dominant and
        w = s_{word[0]} s_{word[1]} ... s_{word[-1]} (w+).

        Greedy ascent: repeatedly reflect at the smallest vertex pairing
        negatively.  Each step strictly increases w in the positive-root
        order, so the word has minimal length.
        """
        word = []
        cur = w
        while True:
            for i in self.vertices:
                if self.pairing(i, cur) < 0:
                    cur = self.reflect(i, cur)
                    word.append(i)
                    break
            else:
                return cur, tuple(word)

    def _greedy_descent_word(self) -> tuple[int, ...]:
        # Descend from rho to the antidominant chamber; the recorded word is
        # reduced of length #positive-roots, and w_o being an involution it
        # is a reduced word for w_o itself.
        word = []
        cur = self.rho
        while True:
            for i in self.vertices:
                if self.pairing(i, cur) > 0:
                    cur = self.reflect(i, cur)
                    word.append(i)
                    break
            else:
                return tuple(word)

    def _close_positive_roots(self) -> tuple[tuple[tuple[int, ...], Weight], ...]:
        """All positive roots as (simple-root coordinates, weight vector),
        computed by closing the simple roots under all reflections."""
        m = self.num_vertices
        seen: dict[Weight, tuple[int, ...]] = {}
        frontier = []
        for idx, i in enumerate(self.vertices):
            coords = tuple(1 if k == idx else 0 for k in range(m))
            seen[self.alphas[i]] = coords
            frontier.append(self.alphas[i])
        while frontier:
            nxt = []
            for root in frontier:
                coords = seen[root]
                for i in self.vertices:
                    refl = self.reflect(i, root)
                    if refl in seen:
                        continue
                    pair = sum(
                        c * self._cartan_entry(i, j)
                        for c, j in zip(coords, self.vertices)
                    )
                    new_coords = list(coords)
                    new_coords[i - 1] -= pair
                    seen[refl] = tuple(new_coords)
                    nxt.append(refl)
            frontier = nxt
        pos = sorted(
            (coords, root)
            for root, coords in seen.items()
            if all(c >= 0 for c in coords)
        )
        return tuple(pos)

    def weyl_dimension(self, w: Weight) -> int:
        """Weyl dimension formula; an oracle independent of any character
        computation."""
        if not self.is_dominant(w):
            raise ValueError(f"{w} is not dominant")
        num = Fraction(1)
        shifted = w_add(w, self.rho)
        for coords, _root in self.positive_roots:
            pair_l = sum(c * self.pairing(i, shifted) for c, i in zip(coords, self.vertices))
            pair_r = sum(c * self.pairing(i, self.rho) for c, i in zip(coords, self.vertices))
            num *= Fraction(pair_l, pair_r)
        assert num.denominator == 1
        return int(num)


def _invert_integer_matrix(mat: list[list[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(mat)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(mat)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        scale = aug[col][col]
        aug[col] = [x / scale for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


@lru_cache(maxsize=None)
def build_root_datum(kind: str, rank: int) -> RootDatum:
    """Construct (and cache) the root datum for the given kind and rank.

    ``rank`` counts Dynkin vertices for the semisimple kinds and the size n
    for GL_n (so GL_n has n-1 vertices).
    """
    return RootDatum(kind, rank)
