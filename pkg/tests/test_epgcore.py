import itertools
import random

import pytest

from epglab import graphs as ga
from epglab.epgcore import (ABConfiguration, InvalidConfiguration, ab_to_c4,
                            build_enhanced_power_graph, build_power_graph,
                            c4_to_ab, c4_witness_search, clique_number,
                            cograph_by_chains, cograph_triples_naive,
                            cyc_quotient, epg_oracle_graph, is_eppo,
                            max_cyclic_catalog, partition_by_cyclics,
                            partition_equivalents, power_oracle_graph,
                            prime_intersection_check, reductions,
                            validate_general_lemma)
from epglab.groups import direct_product, two_generated_cyclic
from epglab.zoo import (alternating, cyclic, dihedral, elementary_abelian,
                        k_a7, projective_special_linear, quaternion8,
                        special_linear, symmetric)

SMALL_BUILDERS = {
    "C12": lambda: cyclic(12),
    "C2xC2xC3": lambda: direct_product(
        direct_product(cyclic(2), cyclic(2)), cyclic(3)),
    "Q8": lambda: quaternion8(),
    "D16": lambda: dihedral(16),
    "E3^2": lambda: elementary_abelian(3, 2),
    "A4": lambda: alternating(4),
    "S4": lambda: symmetric(4),
    "SL(2,3)": lambda: special_linear(2, 3),
    "A5": lambda: alternating(5),
    "C2^2xC3^2": lambda: direct_product(
        elementary_abelian(2, 2), elementary_abelian(3, 2)),
    "C3xC9": lambda: direct_product(cyclic(3), cyclic(9)),
    "K_A7": lambda: k_a7()[0],
    "PSL(2,5)": lambda: projective_special_linear(2, 5),
    "S5": lambda: symmetric(5),
}


@pytest.fixture(scope="module")
def small_groups():
    out = {}
    for name, b in SMALL_BUILDERS.items():
        G = b()
        out[name] = (G, max_cyclic_catalog(G))
    return out


def test_catalog_c12(small_groups):
    G, cat = small_groups["C12"]
    assert len(cat.subgroups) == 1
    assert cat.cyc == tuple(range(12))
    assert len(cat.simplicial) == 12
    assert clique_number(cat) == 12


def test_catalog_c2c2c3(small_groups):
    G, cat = small_groups["C2xC2xC3"]
    assert len(cat.subgroups) == 3
    assert all(s.size == 6 for s in cat.subgroups)
    assert len(cat.maximal_elements) == 6
    assert len(cat.simplicial) == 9
    assert len(cat.cyc) == 3


def test_catalog_q8(small_groups):
    G, cat = small_groups["Q8"]
    assert len(cat.cyc) == 2


def test_catalog_structure_invariants(small_groups):
    for name, (G, cat) in small_groups.items():
        covered = set()
        member_sets = [set(s.members) for s in cat.subgroups]
        for ms in member_sets:
            covered |= ms
        assert covered == set(range(G.order)), name
        for a, b in itertools.combinations(member_sets, 2):
            assert not a <= b and not b <= a, name
        if cat.is_cyclic_group:
            assert G.element_order(cat.subgroups[0].generator) == G.order
        else:
            assert len(cat.subgroups) >= 3, name  # non-cyclic needs >= 3
        assert cat.maximal_elements <= cat.simplicial, name
        inter = set(cat.subgroups[0].members)
        for s in cat.subgroups[1:]:
            inter &= set(s.members)
        assert inter == set(cat.cyc), name


def test_epg_equals_pairwise_oracle(small_groups):
    for name, (G, cat) in small_groups.items():
        epg = build_enhanced_power_graph(G, cat)
        assert epg.graph.rows == epg_oracle_graph(G).rows, name
        pg = build_power_graph(G, cat)
        assert pg.graph.rows == power_oracle_graph(G).rows, name
        # power graph spans a subgraph of the enhanced graph
        assert all(p & ~e == 0 for p, e in zip(pg.graph.rows, epg.graph.rows)), name


def test_star_and_simplicial_identities(small_groups):
    for name, (G, cat) in small_groups.items():
        epg = build_enhanced_power_graph(G, cat)
        assert set(ga.bits(ga.star_vertices(epg.graph))) == set(cat.cyc), name
        assert set(ga.bits(ga.simplicial_vertices(epg.graph))) == set(cat.simplicial), name
        # N[x] = <x> exactly for the maximal elements
        for x in range(G.order):
            closed = cat.neighborhood(x) | {x}
            is_own = closed == set(G.cyclic_members(x))
            assert is_own == (x in cat.maximal_elements), (name, x)


def test_clique_duality(small_groups):
    for name, (G, cat) in small_groups.items():
        epg = build_enhanced_power_graph(G, cat)
        cliques = set(ga.maximal_cliques(epg.graph))
        assert cliques == {s.members for s in cat.subgroups}, name


def test_chains_equal_naive_and_cotree(small_groups):
    for name, (G, cat) in small_groups.items():
        fast, viol = cograph_by_chains(cat)
        naive, _ = cograph_triples_naive(cat)
        assert fast == naive, name
        epg = build_enhanced_power_graph(G, cat)
        assert fast == ga.is_cograph(epg.graph)[0], name
        if viol is not None:
            subs = cat.subgroups
            a = set(subs[viol.a].members)
            b = set(subs[viol.b].members)
            c = set(subs[viol.c].members)
            assert not (a & b <= a & c) and not (a & c <= a & b), name


def test_c4_route_agreement(small_groups):
    for name, (G, cat) in small_groups.items():
        cfg = c4_witness_search(G, cat)
        epg = build_enhanced_power_graph(G, cat)
        got = ga.has_induced_c4(epg.graph)
        assert (cfg is None) == (got is None), name
        if cfg is not None:
            w = ab_to_c4(G, cfg)
            assert ga.verify_witness(epg.graph, w), name
            back = c4_to_ab(G, w.vertices)
            ab_to_c4(G, back)  # round trip must stay valid


def test_c4_to_ab_rejects_degenerate(small_groups):
    G, cat = small_groups["C2^2xC3^2"]
    with pytest.raises(InvalidConfiguration):
        c4_to_ab(G, (0, 1, 2, 3))
    cfg = c4_witness_search(G, cat)
    bad = ABConfiguration(a1=cfg.a1, a2=cfg.a1, b1=cfg.b1, b2=cfg.b2)
    with pytest.raises(InvalidConfiguration):
        ab_to_c4(G, bad)


def test_prime_intersection(small_groups):
    G, cat = small_groups["C2xC2xC3"]
    assert not prime_intersection_check(cat, 2)  # the three C6s share a C3
    Gq, catq = small_groups["Q8"]
    assert prime_intersection_check(catq, 2)
    Ge, cate = small_groups["E3^2"]
    assert prime_intersection_check(cate, 3)
    # when the p-intersection check passes, chains must pass too
    assert cograph_by_chains(catq)[0]
    assert cograph_by_chains(cate)[0]


def test_reductions(small_groups):
    G, cat = small_groups["C12"]
    plan = reductions(G, cat, "chordal")
    assert plan.residual == ()  # cyclic: everything is simplicial
    Gk, catk = small_groups["K_A7"]
    plan = reductions(Gk, catk, "cograph")
    assert set(plan.delete) == set(catk.cyc)
    epg_full = build_enhanced_power_graph(Gk, catk)
    epg_red = build_enhanced_power_graph(Gk, catk, keep=plan.residual)
    assert ga.is_cograph(epg_full.graph)[0] == ga.is_cograph(epg_red.graph)[0]
    plan = reductions(Gk, catk, "chordal")
    epg_red = build_enhanced_power_graph(Gk, catk, keep=plan.residual)
    assert ga.is_chordal(epg_full.graph)[0] == ga.is_chordal(epg_red.graph)[0]
    with pytest.raises(ValueError):
        reductions(Gk, catk, "planar")


def test_partition_outcomes(small_groups):
    G, cat = small_groups["PSL(2,5)"]
    assert isinstance(partition_by_cyclics(cat), list)
    Gq, catq = small_groups["Q8"]
    assert partition_by_cyclics(catq) is None
    E8 = elementary_abelian(2, 3)
    cat8 = max_cyclic_catalog(E8)
    part = partition_by_cyclics(cat8)
    assert part is not None and len(part) == 7
    assert partition_by_cyclics(max_cyclic_catalog(cyclic(6))) == "cyclic"


def test_partition_equivalents_agree(small_groups):
    for name, (G, cat) in small_groups.items():
        epg = build_enhanced_power_graph(G, cat)
        rep = partition_equivalents(G, cat, epg)
        assert len(set(rep.values())) == 1, (name, rep)


def test_eppo():
    assert is_eppo(projective_special_linear(3, 4))
    assert not is_eppo(cyclic(6))
    assert is_eppo(projective_special_linear(2, 8))


def test_clique_number_examples(small_groups):
    assert clique_number(small_groups["C12"][1]) == 12
    A7 = alternating(7)
    assert clique_number(max_cyclic_catalog(A7)) == 7


def test_general_lemma_rejects_triangles(small_groups):
    G, cat = small_groups["C12"]
    with pytest.raises(ValueError):
        validate_general_lemma(G, cat, (0, 1, 2), "cycle")


def test_cheryl_remark_no_p4_middle_edge_in_power_graph(small_groups):
    """No induced P4 of the enhanced power graph has its middle edge in the
    power graph (checked exhaustively on tiny groups)."""
    for name in ("K_A7", "C2xC2xC3", "S4", "C2^2xC3^2"):
        G, cat = small_groups[name]
        epg = build_enhanced_power_graph(G, cat)
        pg = build_power_graph(G, cat)
        n = G.order
        for vs in itertools.combinations(range(n), 4):
            for perm in itertools.permutations(vs):
                if perm[0] > perm[3]:
                    continue
                w = ga.Witness("p4", perm)
                if ga.verify_witness(epg.graph, w):
                    assert not pg.graph.has_edge(perm[1], perm[2]), (name, perm)


def test_triangle_lemma_random(small_groups):
    """Triangles of the enhanced power graph generate cyclic subgroups."""
    rng = random.Random(5)
    from epglab.groups import subgroup_closure
    for name in ("S4", "A5", "C2^2xC3^2", "D16"):
        G, cat = small_groups[name]
        epg = build_enhanced_power_graph(G, cat)
        tried = 0
        while tried < 1000:
            x = rng.randrange(G.order)
            nbrs = list(ga.bits(epg.graph.rows[x]))
            if len(nbrs) < 2:
                tried += 1
                continue
            y, z = rng.sample(nbrs, 2)
            tried += 1
            if not epg.graph.has_edge(y, z):
                continue
            members = subgroup_closure(G, [x, y, z])
            assert any(G.element_order(m) == len(members) for m in members), name


def test_quotient_edge_transfer(small_groups):
    for name in ("Q8", "C12", "C3xC9", "SL(2,3)"):
        G, cat = small_groups[name]
        if len(cat.cyc) <= 1:
            continue
        Q, proj = cyc_quotient(G, cat)
        assert Q.order * len(cat.cyc) == G.order
        pmap = [proj(x) for x in range(G.order)]
        for x in range(G.order):
            for y in range(x + 1, G.order):
                exy = two_generated_cyclic(G, x, y)[0]
                if pmap[x] != pmap[y]:
                    assert exy == two_generated_cyclic(Q, pmap[x], pmap[y])[0], name
                else:
                    assert exy, name  # multiplying by Cyc elements keeps edges


def test_cycliciser_translates(small_groups):
    """<g,h> cyclic iff <g c1, h c2> cyclic for cycliciser elements c1, c2."""
    for name in ("Q8", "C3xC9"):
        G, cat = small_groups[name]
        for g in range(G.order):
            for h in range(G.order):
                base = two_generated_cyclic(G, g, h)[0] if g != h else True
                for c1 in cat.cyc:
                    for c2 in cat.cyc:
                        gg, hh = G.compose(g, c1), G.compose(h, c2)
                        if gg == hh:
                            continue
                        assert two_generated_cyclic(G, gg, hh)[0] == base, name


def test_alpha_equals_clique_count_on_cograph_subgraphs(small_groups):
    """On cograph groups of order <= 64, independence number = number of
    maximal cliques, on random induced subgraphs too."""
    rng = random.Random(9)
    for name in ("C12", "Q8", "D16", "E3^2", "A5", "C3xC9"):
        G, cat = small_groups[name]
        if G.order > 64:
            continue
        epg = build_enhanced_power_graph(G, cat)
        if not cograph_by_chains(cat)[0]:
            continue
        assert ga.independence_number(epg.graph) == len(ga.maximal_cliques(epg.graph))
        for _ in range(50):
            k = rng.randrange(1, min(40, G.order) + 1)
            vs = rng.sample(range(G.order), k)
            sub, _ = epg.graph.induced_subgraph(vs)
            assert ga.independence_number(sub) == len(ga.maximal_cliques(sub)), name


def test_c1_degenerate():
    G = cyclic(1)
    cat = max_cyclic_catalog(G)
    assert len(cat.subgroups) == 1 and cat.subgroups[0].members == (0,)
    epg = build_enhanced_power_graph(G, cat)
    assert ga.is_cograph(epg.graph)[0]
    assert ga.is_chordal(epg.graph)[0]
    assert ga.is_block_graph(epg.graph)
    rep = partition_equivalents(G, cat, epg)
    assert all(rep.values())


def test_ab_maximal_containment_direction():
    """A configuration inside a subgroup forces one in the whole group."""
    A8 = alternating(8)
    sp = A8.space
    ids = [A8.index[sp.pack(p)] for p in (
        [1, 0, 3, 2, 4, 5, 6, 7], [2, 3, 0, 1, 4, 5, 6, 7],
        [0, 1, 2, 3, 5, 6, 4, 7], [0, 1, 2, 3, 5, 7, 6, 4])]
    from epglab.groups import subgroup_closure
    H = subgroup_closure(A8, ids)
    assert len(H) < A8.order
    cat = max_cyclic_catalog(A8)
    assert c4_witness_search(A8, cat) is not None
