import pytest

from epglab.groups import subgroup_closure, two_generated_cyclic
from epglab.zoo import (OrderMismatch, UnknownSpec, UnsupportedQ, build_named,
                        dihedral, elementary_abelian, k_a7,
                        projective_special_unitary3, psl3_witnesses, psl_order,
                        sporadic, suzuki, _load_gens, _load_manifest)

EXPECTED_ORDERS = {
    ("PSL", (2, 4)): 60, ("PSL", (2, 5)): 60, ("PSL", (2, 7)): 168,
    ("PSL", (2, 8)): 504, ("PSL", (2, 9)): 360, ("PSL", (2, 11)): 660,
    ("PSL", (2, 13)): 1092, ("PSL", (3, 4)): 20160,
    ("Sz", (8,)): 29120, ("M11", ()): 7920, ("M12", ()): 95040,
    ("A", (7,)): 2520,
}


@pytest.mark.parametrize("name,args", sorted(EXPECTED_ORDERS, key=str))
def test_catalog_orders(name, args):
    G = build_named(name, args)
    assert G.order == EXPECTED_ORDERS[(name, args)]


def test_psl_order_formula():
    assert psl_order(2, 7) == 7 * 48 // 2 == 168
    assert psl_order(3, 4) == 20160


def test_unknown_spec():
    with pytest.raises(UnknownSpec):
        build_named("XYZ")


def test_dihedral_naming():
    # D(2n) is the dihedral group OF ORDER 2n
    assert dihedral(8).order == 8
    assert dihedral(4).order == 4
    with pytest.raises(UnknownSpec):
        dihedral(7)


def test_suzuki_unsupported():
    with pytest.raises(UnsupportedQ):
        suzuki(4)  # even exponent is not a Suzuki field


def test_psu3_small():
    G = projective_special_unitary3(3)
    assert G.order == 6048


def test_k_a7_witnesses():
    K, wit = k_a7()
    assert K.order == 24
    a, x, y = wit["a"], wit["x"], wit["y"]
    assert K.element_order(a) == 3 and K.element_order(x) == 4 and K.element_order(y) == 2
    # a^x = a^-1, a^y = a, x^y = x^-1 (the defining relations)
    assert K.conjugate(a, x) == K.inverse(a)
    assert K.conjugate(a, y) == a
    assert K.conjugate(x, y) == K.inverse(x)


@pytest.mark.parametrize("q", [3, 5])
def test_psl3_witnesses(q):
    G, wit = psl3_witnesses(q)
    from math import gcd
    d = gcd(3, q - 1)
    p = 3 if q == 3 else 5
    assert G.element_order(wit["x"]) == (q - 1) // d
    assert G.element_order(wit["a"]) == p
    ok, gen = two_generated_cyclic(G, wit["a"], wit["x"])
    assert ok and G.element_order(gen) == p * (q - 1) // d
    # x and b are distinct, both commute with a, and <a,x> != <a,b>
    assert wit["x"] != wit["b"]
    assert G.commutes(wit["a"], wit["x"]) and G.commutes(wit["a"], wit["b"])
    ax = set(subgroup_closure(G, [wit["a"], wit["x"]]))
    ab = set(subgroup_closure(G, [wit["a"], wit["b"]]))
    assert ax != ab and wit["b"] not in ax


def test_psl3_witnesses_unsupported():
    with pytest.raises(UnsupportedQ):
        psl3_witnesses(4)


def test_sporadic_checksums_current():
    man = _load_manifest()
    for name in ("M11", "M12", "M22", "J1"):
        degree, gens = _load_gens(name)
        assert f"{name}.gens" in man
        assert all(sorted(g) == list(range(degree)) for g in gens)
    assert _load_gens("M11")[0] == 11
    assert _load_gens("J1")[0] == 266


def test_manifest_tamper_detection(monkeypatch):
    import epglab.zoo as zoo
    real = zoo._load_manifest

    def fake():
        m = dict(real())
        m["M11.gens"] = "0" * 64
        return m

    monkeypatch.setattr(zoo, "_load_manifest", fake)
    with pytest.raises(OrderMismatch):
        zoo._load_gens("M11")


def test_m11_loads_and_gates():
    G = sporadic("M11")
    assert G.order == 7920
    orders = {G.element_order(g) for g in range(0, G.order, 97)}
    assert orders <= {1, 2, 3, 4, 5, 6, 8, 11}


def test_elementary_abelian():
    E = elementary_abelian(3, 2)
    assert E.order == 9
    assert all(E.element_order(g) in (1, 3) for g in range(9))
