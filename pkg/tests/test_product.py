import random

import pytest

from pmcrystal.cartan import build_root_datum
from pmcrystal.crystal import (check_crystal_axioms, e_of, f_of,
                               highest_weights)
from pmcrystal.monomial import mono_mul, one, y_monomial
from pmcrystal.product import (NotExpressibleError, PointMultiset, decompose, expand_label,
                               fundamental_crystal, multiset,
                               multiset_from_pairs, product_crystal, r_support,
                               s_label, weight_of_multiset, y_of_multiset)
from pmcrystal.truncation import up_closure
from conftest import random_multiset


def test_fundamental_sizes(a2, a3):
    assert len(fundamental_crystal(a2, 1, 1, 1)) == 3
    assert len(fundamental_crystal(a2, 1, 1, 0)) == 1
    assert len(fundamental_crystal(a3, 2, 0, 1)) == 6  # |B(w2)| = C(4,2)


def test_product_crystal_sl3_small_cases(a2):
    assert len(product_crystal(a2, multiset({}))) == 1
    g = product_crystal(a2, multiset({(1, 1): 2}))
    assert len(g) == 6
    assert highest_weights(g) == (y_monomial(a2, 1, 1, 2),)


def test_product_equals_elementwise_product(a2):
    r = multiset({(1, 1): 1, (2, 0): 1})
    g = product_crystal(a2, r)
    f1 = fundamental_crystal(a2, 1, 1, 1).elements
    f2 = fundamental_crystal(a2, 2, 0, 1).elements
    assert set(g.elements) == {mono_mul(p, q) for p in f1 for q in f2}


def test_product_closure_random():
    rng = random.Random(10)
    for kind, rank in [("A", 2), ("A", 3), ("D", 4), ("GL", 4)]:
        datum = build_root_datum(kind, rank)
        for _ in range(4):
            r = random_multiset(rng, datum, max_points=4, max_mult=2, cap=2500)
            g = product_crystal(datum, r)  # graph_over asserts e/f closure
            check_crystal_axioms(g)


def test_product_rejects_parity_violation(a2):
    with pytest.raises(ValueError):
        product_crystal(a2, PointMultiset((((1, 0), 1),)))


def test_s_label_of_trivial_monomial(a3):
    r = multiset({(1, 1): 1, (3, 5): 1})
    s = s_label(a3, r, one(a3))
    assert dict(s.points) == {(1, 1): 1, (2, 2): 1, (3, 3): 1}
    assert r_support(a3, r, one(a3)) == {(1, 1), (2, 2), (3, 3), (3, 5)}


def test_s_label_trivial(a3):
    r = multiset({(1, 3): 1, (3, 1): 1})
    y = y_of_multiset(a3, r)
    assert s_label(a3, r, y).is_empty()
    assert r_support(a3, r, y) == set(r.support())


def test_s_label_tracks_f_steps(a3):
    rng = random.Random(11)
    r = multiset({(1, 3): 1, (3, 1): 1, (3, 3): 1})
    g = product_crystal(a3, r)
    for _ in range(30):
        p = rng.choice(g.elements)
        i = rng.choice(a3.vertices)
        q = f_of(a3, p, i)
        if q is None:
            continue
        before = dict(s_label(a3, r, p).points)
        after = dict(s_label(a3, r, q).points)
        gained = {pt: after.get(pt, 0) - before.get(pt, 0)
                  for pt in set(before) | set(after)}
        gained = {pt: v for pt, v in gained.items() if v}
        assert len(gained) == 1 and set(gained.values()) == {1}
        assert next(iter(gained))[0] == i


def test_s_label_bijective_on_crystal(a2):
    r = multiset({(1, 1): 2, (2, 0): 1})
    g = product_crystal(a2, r)
    labels = {s_label(a2, r, p) for p in g.elements}
    assert len(labels) == len(g)
    for p in g.elements:
        assert expand_label(a2, r, s_label(a2, r, p)) == p


def test_s_label_rejects_foreign_monomials(a2):
    r = multiset({(1, 1): 1})
    with pytest.raises(NotExpressibleError):
        s_label(a2, r, y_monomial(a2, 2, 0))
    with pytest.raises(NotExpressibleError):
        s_label(a2, r, y_monomial(a2, 1, 3))


def test_fundamental_support_bound(a3):
    from pmcrystal.truncation import down_closure
    for (i, c, n) in [(1, 1, 2), (2, 0, 1), (3, 3, 2)]:
        r = multiset({(i, c): n})
        down = down_closure(a3, [(i, c - 2)])
        for p in fundamental_crystal(a3, i, c, n).elements:
            s = s_label(a3, r, p)
            assert all(down.contains(j, k) for (j, k) in s.support())


def test_minimal_support_raising(a3):
    # if (i,k) is minimal in Supp_R(p) and not in Supp R, the top of the
    # i-string drops it from the support
    from pmcrystal.crystal import eps_of
    r = multiset({(1, 3): 1, (3, 3): 2})
    g = product_crystal(a3, r)
    checked = 0
    for p in g.elements:
        supp = r_support(a3, r, p)
        for (i, k) in supp:
            if (i, k) in r.support():
                continue
            below = any((j, l) != (i, k) and k - l >= a3.dist[j, i]
                        for (j, l) in supp)
            if below:
                continue
            n = eps_of(a3, p, i)
            assert n > 0
            q = p
            for _ in range(n):
                q = e_of(a3, q, i)
            assert (i, k) not in r_support(a3, r, q)
            checked += 1
    assert checked > 0


def test_highest_weight_support_in_up_closure(a3):
    rng = random.Random(13)
    for _ in range(5):
        r = random_multiset(rng, a3)
        g = product_crystal(a3, r)
        j = up_closure(a3, r.support())
        for p in highest_weights(g):
            assert j.contains_all(r_support(a3, r, p))


def test_decompose_trichotomy_example(a3):
    assert decompose(a3, multiset({(2, 2): 2})) == {(0, 2, 0): 1}
    two = decompose(a3, multiset({(2, 0): 1, (2, 2): 1}))
    assert two == {(0, 2, 0): 1, (1, 0, 1): 1}


def test_decompose_compute_truncation_example(a3):
    r = multiset_from_pairs([[1, 3, 1], [3, 1, 1], [3, 3, 1]])
    assert decompose(a3, r) == {(1, 0, 2): 1, (1, 1, 0): 1}


def test_multiset_json(a3):
    r = multiset_from_pairs([[1, 3, 1], [3, 1, 2]])
    assert r.to_json() == [[1, 3, 1], [3, 1, 2]]
    assert weight_of_multiset(a3, r) == (1, 0, 2)


def test_fundamental_sizes_exceptional_types():
    # dimension checks across the supported kinds: D_4, D_5 and E_6 vectors
    d4 = build_root_datum("D", 4)
    assert len(fundamental_crystal(d4, 1, d4.parity[1], 1)) == 8
    d5 = build_root_datum("D", 5)
    assert len(fundamental_crystal(d5, 1, d5.parity[1], 1)) == 10
    e6 = build_root_datum("E6", 6)
    assert len(fundamental_crystal(e6, 1, e6.parity[1], 1)) == 27
    assert len(fundamental_crystal(e6, 1, e6.parity[1], 1)) == \
        e6.weyl_dimension(e6.fundamentals[1])


def test_truncation_elements_are_the_primitives(a3):
    from pmcrystal.truncation import truncate, up_closure
    r = multiset({(1, 3): 1, (3, 1): 1, (3, 3): 1})
    g = product_crystal(a3, r)
    trunc = truncate(a3, r, up_closure(a3, r.support()), graph=g)
    assert set(highest_weights(g)) == set(trunc)
