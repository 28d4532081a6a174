import random
from math import lcm

import pytest

from epglab.gf import field
from epglab.groups import (CapExceeded, CentralElementMismatch, MatrixSpace,
                           MixedDegree, NotNormal, PermSpace, central_product,
                           check_compatible, direct_product, enumerate_group,
                           is_normal, quotient, subgroup_closure,
                           two_generated_cyclic)
from epglab.zoo import (alternating, cyclic, dihedral, elementary_abelian,
                        quaternion8, special_linear, symmetric)


def s5():
    sp = PermSpace(5)
    return enumerate_group(sp, [sp.pack([1, 2, 3, 4, 0]),
                                sp.pack([1, 0, 2, 3, 4])], cap=1000)


def test_enumerate_s5():
    G = s5()
    assert G.order == 120
    assert G.elements[0] == G.space.identity


def test_enumerate_identity_only():
    sp = PermSpace(5)
    G = enumerate_group(sp, [sp.identity], cap=10)
    assert G.order == 1


def test_cap_exceeded():
    sp = PermSpace(5)
    with pytest.raises(CapExceeded):
        enumerate_group(sp, [sp.pack([1, 2, 3, 4, 0]), sp.pack([1, 0, 2, 3, 4])],
                        cap=50)


def test_mixed_degree_detected():
    sp = PermSpace(5)
    with pytest.raises(MixedDegree):
        check_compatible(sp, [sp.identity, PermSpace(4).identity])


def test_element_orders():
    G = s5()
    assert G.element_order(0) == 1
    # a 4-cycle times a disjoint transposition has order 4 (lcm of 4 and 2)
    sp = PermSpace(7)
    H = enumerate_group(sp, [sp.pack([1, 2, 3, 0, 5, 4, 6])], cap=10)
    assert H.order == 4
    assert H.element_order(H.generator_ids[0]) == 4
    for g in range(G.order):
        assert G.order % G.element_order(g) == 0  # Lagrange spot check


def test_sl3_diagonal_element_order():
    # Diag(w, w^-2, w) has order q - 1 in SL3(q)
    for q in (3, 5):
        F = field(q)
        G = special_linear(3, q)
        sp: MatrixSpace = G.space
        w = F.generator
        x = sp.pack([[w, 0, 0], [0, F.pow(w, -2 % (q - 1)), 0], [0, 0, w]])
        assert G.element_order(G.index[x]) == q - 1


def test_group_axioms_random_triples():
    rng = random.Random(11)
    for G in (s5(), quaternion8(), dihedral(16)):
        n = G.order
        for _ in range(1000):
            a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
            ab = G.compose(a, b)
            assert G.compose(ab, c) == G.compose(a, G.compose(b, c))
            assert G.inverse(ab) == G.compose(G.inverse(b), G.inverse(a))
        assert all(G.compose(0, g) == g for g in range(n))
        assert all(G.compose(g, G.inverse(g)) == 0 for g in range(n))


def test_commutes():
    A7 = alternating(7)
    sp = A7.space
    a = A7.index[sp.pack([0, 1, 2, 3, 5, 6, 4])]       # (5 6 7)
    x = A7.index[sp.pack([1, 2, 3, 0, 5, 4, 6])]       # (1 2 3 4)(5 6)
    disj1 = A7.index[sp.pack([1, 2, 0, 3, 4, 5, 6])]   # (1 2 3)
    disj2 = A7.index[sp.pack([0, 1, 2, 4, 5, 3, 6])]   # (4 5 6)
    assert A7.commutes(a, a)
    assert A7.commutes(disj1, disj2)
    assert not A7.commutes(a, x)  # x conjugates a to its inverse


def _tgc_oracle(G, x, y):
    members = subgroup_closure(G, [x, y])
    size = len(members)
    return any(G.element_order(m) == size for m in members)


@pytest.mark.parametrize("builder", [
    lambda: cyclic(12),
    lambda: quaternion8(),
    lambda: elementary_abelian(2, 3),
    lambda: dihedral(16),
    lambda: symmetric(4),
    lambda: special_linear(2, 3),
    lambda: direct_product(direct_product(cyclic(2), cyclic(2)), cyclic(3)),
    lambda: direct_product(elementary_abelian(2, 2), elementary_abelian(3, 2)),
    lambda: alternating(5),
    lambda: direct_product(cyclic(5), cyclic(25)),
])
def test_two_generated_cyclic_against_closure_oracle(builder):
    G = builder()
    assert G.order <= 200
    for x in range(G.order):
        for y in range(x, G.order):
            got, gen = two_generated_cyclic(G, x, y)
            assert got == _tgc_oracle(G, x, y), (G.name, x, y)
            if got:
                want = lcm(G.element_order(x), G.element_order(y))
                assert G.element_order(gen) == want


def test_subgroup_closure_examples():
    A7 = alternating(7)
    sp = A7.space
    assert subgroup_closure(A7, [0]) == [0]
    a = A7.index[sp.pack([0, 1, 2, 3, 5, 6, 4])]
    x = A7.index[sp.pack([1, 2, 3, 0, 5, 4, 6])]
    y = A7.index[sp.pack([1, 0, 3, 2, 4, 5, 6])]
    assert len(subgroup_closure(A7, [a, x, y])) == 24
    three = A7.index[sp.pack([1, 2, 0, 3, 4, 5, 6])]
    assert len(subgroup_closure(A7, [three])) == 3


def test_is_normal_and_quotient():
    S3 = symmetric(3)
    rot = next(g for g in range(6) if S3.element_order(g) == 3)
    ref = next(g for g in range(6) if S3.element_order(g) == 2)
    N = subgroup_closure(S3, [rot])
    assert is_normal(S3, N)
    assert not is_normal(S3, subgroup_closure(S3, [ref]))
    with pytest.raises(NotNormal):
        quotient(S3, subgroup_closure(S3, [ref]))
    Q, proj = quotient(S3, N)
    assert Q.order * len(N) == S3.order
    assert proj(0) == 0
    # trivial quotient: isomorphic order
    Q2, _ = quotient(S3, [0])
    assert Q2.order == 6


def test_quotient_q8_by_center():
    Q8 = quaternion8()
    center = [x for x in range(8) if all(Q8.commutes(x, g) for g in Q8.generator_ids)]
    z = [x for x in center if Q8.element_order(x) == 2]
    Q, _ = quotient(Q8, subgroup_closure(Q8, z))
    assert Q.order == 4
    assert all(Q.element_order(g) <= 2 for g in range(4))


def test_direct_product_orders():
    C6 = direct_product(cyclic(2), cyclic(3))
    assert C6.order == 6
    assert sorted(C6.element_order(g) for g in range(6)) == [1, 2, 3, 3, 6, 6]
    A4S3 = direct_product(alternating(4), symmetric(3))
    assert A4S3.order == 72


def test_central_products():
    SL23 = special_linear(2, 3)
    Q8 = quaternion8()
    z1 = next(x for x in range(SL23.order)
              if SL23.element_order(x) == 2 and
              all(SL23.commutes(x, g) for g in SL23.generator_ids))
    z2 = next(x for x in range(8)
              if Q8.element_order(x) == 2 and
              all(Q8.commutes(x, g) for g in Q8.generator_ids))
    CP = central_product(SL23, Q8, z1, z2)
    assert CP.order == 24 * 8 // 2
    with pytest.raises(CentralElementMismatch):
        central_product(SL23, Q8, z1, next(
            x for x in range(8) if Q8.element_order(x) == 4))
