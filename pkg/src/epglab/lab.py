"""Named verification suites over a registered corpus of groups.

Each suite re-derives a family of claims two ways where possible (generic
graph algorithms vs group-theoretic criteria), records per-check outcomes
with witnesses and timings, and persists a JSON report plus a rendered
summary figure.  Expected values in the corpus carry provenance notes.
"""

from __future__ import annotations

import json
import os
import platform
import sys
import time
from dataclasses import dataclass, field
from math import gcd
from typing import Callable, Optional

from . import __version__
from . import graphs as ga
from .build import build_text
from .epgcore import (ABConfiguration, ChainViolation, MaxCyclicCatalog,
                      build_enhanced_power_graph, build_power_graph,
                      c4_witness_search, cograph_by_chains,
                      cyc_quotient, epg_oracle_graph, is_eppo, is_prime_power,
                      max_cyclic_catalog, max_pairwise_intersection,
                      partition_by_cyclics, partition_equivalents,
                      power_oracle_graph, prime_factors, prime_intersection_check,
                      reductions, validate_general_lemma)
from .graphs import DENSE_CAP, Witness
from .groups import GroupHandle, two_generated_cyclic
from .zoo import k_a7, psl3_witnesses

TIER_ORDER = {"fast": 0, "standard": 1, "extended": 2}


@dataclass
class CorpusEntry:
    spec: str
    tier: str
    expected: dict[str, object] = field(default_factory=dict)  # tri-state props
    numerics: dict[str, int] = field(default_factory=dict)     # |G|, m, cyc, omega
    note: str = ""                                             # provenance


def _nilpotent_specs() -> list[CorpusEntry]:
    """Nilpotent corpus: constructor-expressible groups of order <= 32 plus
    p-group x cyclic samples (for the nilpotent-equivalence suite)."""
    specs = [
        "C2", "C4", "C8", "C16", "C32",
        "E2^2", "E2^3", "E2^4", "E2^5",
        "C2 x C4", "C2 x C8", "C2 x C16", "C4 x C4",
        "C2 x C2 x C4", "C2 x C2 x C8", "C2 x C4 x C4",
        "D8", "D16", "D32", "Q8", "Q8 x C2", "D8 x C2", "D8 x C4",
        "C3", "C9", "C27", "E3^2", "C3 x C9", "E3^3",
        "C5", "C25", "E5^2", "C7",
        "Q8 x C3", "Q8 x C5", "D8 x C3", "D8 x C9", "E2^3 x C7",
        "C4 x C9", "C12", "E3^2 x C2", "E2^2 x C3", "E2^2 x C9",
        "E2^2 x E3^2", "C3 x C9 x C2",
    ]
    return [CorpusEntry(s, "fast", note="nilpotent sample (direct product of p-groups)")
            for s in specs]


def build_corpus() -> list[CorpusEntry]:
    c: list[CorpusEntry] = []

    # structural-constant anchors
    c.append(CorpusEntry("C1", "fast", {"cograph": True, "chordal": True,
                                        "c4free": True, "diamond_free": True,
                                        "block": True, "qthreshold": True,
                                        "threshold": True, "eppo": True},
                         {"order": 1, "m": 1}, "trivial group, complete graph K1"))
    c.append(CorpusEntry("C12", "fast", {"cograph": True, "chordal": True,
                                         "threshold": True, "block": True},
                         {"order": 12, "m": 1, "cyc": 12, "omega": 12},
                         "cyclic: complete graph"))
    c.append(CorpusEntry("C2 x C2 x C3", "fast",
                         {"cograph": True, "chordal": True, "diamond_free": False},
                         {"order": 12, "m": 3, "maximal_elements": 6,
                          "simplicial": 9, "omega": 6},
                         "three maximal cyclics of order 6 sharing the C3; "
                         "|M|=6, |sl|=9; one non-cyclic Sylow subgroup"))
    c.append(CorpusEntry("Q8", "fast", {"cograph": True, "diamond_free": False,
                                        "block": False, "eppo": True},
                         {"order": 8, "cyc": 2},
                         "cycliciser = centre of order 2"))
    c.append(CorpusEntry("K_A7", "fast", {"cograph": False, "chordal": True},
                         {"order": 24}, "order-24 subgroup of A7 carrying the induced 4-path"))

    # simple groups: cograph positives
    for q, eppo in [(4, True), (5, True), (7, True), (8, True), (9, True),
                    (11, False), (13, False)]:
        c.append(CorpusEntry(f"PSL(2,{q})", "standard",
                             {"cograph": True, "chordal": True, "c4free": True,
                              "block": True, "diamond_free": True,
                              "qthreshold": True, "threshold": False, "eppo": eppo},
                             {"maxint": 1},
                             "partition by cyclic subgroups; trivial pairwise intersections"))
    c.append(CorpusEntry("PSL(3,4)", "standard",
                         {"cograph": True, "chordal": True, "c4free": True,
                          "eppo": True}, {"order": 20160},
                         "EPPO; element orders are primes or four"))
    c.append(CorpusEntry("Sz(8)", "standard",
                         {"cograph": True, "chordal": True, "c4free": True,
                          "block": False, "diamond_free": False,
                          "qthreshold": True, "eppo": True},
                         {"order": 29120, "maxint": 2, "omega": 13},
                         "pairwise intersections of order <= 2; no partition by cyclics"))

    # cograph negatives / C4 split cases
    c.append(CorpusEntry("A7", "standard",
                         {"cograph": False, "chordal": True, "c4free": True},
                         {"order": 2520, "omega": 7},
                         "chordal but not a cograph"))
    c.append(CorpusEntry("M11", "standard", {"cograph": False, "c4free": True},
                         {"order": 7920}, "C4-free, not a cograph"))
    c.append(CorpusEntry("PSL(3,3)", "standard", {"cograph": False},
                         {"order": 5616}, "chain criterion fails"))
    c.append(CorpusEntry("PSL(3,5)", "standard", {"cograph": False},
                         {"order": 372000}, "chain criterion fails"))
    c.append(CorpusEntry("PSU(3,3)", "standard", {"cograph": False},
                         {"order": 6048}, "chain criterion fails"))
    c.append(CorpusEntry("S6", "standard", {"c4free": True, "chordal": False},
                         {"order": 720}, "C4-free but not chordal"))
    c.append(CorpusEntry("A8", "standard", {"c4free": False, "cograph": False},
                         {"order": 20160}, "explicit induced 4-cycle"))
    c.append(CorpusEntry("M12", "standard", {"c4free": False, "cograph": False},
                         {"order": 95040}, "contains an A4 x S3 configuration"))

    # AB-configuration positives
    for spec, order in [("E2^2 x E3^2", 36), ("A4 x S3", 72), ("A4 x E2^2", 48),
                        ("SL(2,3) x Q8", 192), ("CP(SL(2,3),Q8)", 96)]:
        c.append(CorpusEntry(spec, "fast", {"c4free": False, "cograph": False,
                                            "chordal": False},
                             {"order": order}, "AB configuration exists"))

    # quasi-threshold / threshold exemplars
    c.append(CorpusEntry("PSL(2,7)", "standard",
                         {"qthreshold": True, "threshold": False}, {},
                         "quasi-threshold but not threshold"))
    for spec in ("D6", "D12", "D20", "E2^3", "C6"):
        c.append(CorpusEntry(spec, "fast", {"threshold": True}, {},
                             "cyclic / dihedral / elementary abelian 2-group"))

    # small solvable mix for the property suites
    for spec in ("S3", "S4", "S5", "A4", "A5", "A6", "C2 x C4", "SL(2,3)",
                 "SL(2,5)", "D10", "D14", "C3 x C9", "C15", "Q8 x E3^2",
                 "Quo(Q8,Cyc)", "C5 x C25"):
        c.append(CorpusEntry(spec, "fast", {}, {}, "generic corpus member"))

    c.extend(_nilpotent_specs())

    # extended tier
    c.append(CorpusEntry("M22", "extended", {"c4free": False, "cograph": False},
                         {"order": 443520}, "contains an A4-type configuration"))
    c.append(CorpusEntry("J1", "extended", {"c4free": True, "cograph": False},
                         {"order": 175560}, "C4-free, not a cograph"))

    seen = set()
    out = []
    for e in c:
        if e.spec not in seen:
            seen.add(e.spec)
            out.append(e)
    return out


CORPUS = build_corpus()


def corpus_for_tier(tier: str) -> list[CorpusEntry]:
    lim = TIER_ORDER[tier]
    return [e for e in CORPUS if TIER_ORDER[e.tier] <= lim]


# ---------------------------------------------------------------------------
# cached group/catalog construction


_cache: dict[str, tuple[GroupHandle, MaxCyclicCatalog]] = {}


def group_and_catalog(spec: str, cap: Optional[int] = None) -> tuple[GroupHandle, MaxCyclicCatalog]:
    hit = _cache.get(spec)
    if hit is not None:
        return hit
    cap = cap or int(os.environ.get("EPG_CAP", "1000000"))
    G = build_text(spec, cap=cap)
    cat = max_cyclic_catalog(G)
    _cache[spec] = (G, cat)
    return G, cat


def witness_to_jsonable(w) -> object:
    if w is None:
        return None
    if isinstance(w, Witness):
        out = {"kind": w.kind}
        if w.vertices:
            out["vertices"] = list(w.vertices)
        if w.kind == "peo":
            out["vertices"] = list(w.vertices)[:32]
            out["truncated"] = len(w.vertices) > 32
        if w.kind == "cotree":
            out["nodes"] = _cotree_size(w.payload)
        return out
    if isinstance(w, ChainViolation):
        return {"kind": "chain_violation", "subgroups": [w.a, w.b, w.c],
                "intersection_orders": [w.order_ab, w.order_ac]}
    if isinstance(w, ABConfiguration):
        return {"kind": "ab_configuration",
                "a": [w.a1, w.a2], "b": [w.b1, w.b2]}
    return str(w)


def _cotree_size(node) -> int:
    if node[0] == "leaf":
        return 1
    return 1 + sum(_cotree_size(ch) for ch in node[1])


# ---------------------------------------------------------------------------
# the eight class predicates by both routes


@dataclass
class PredicateResult:
    name: str
    value: Optional[bool]
    routes: dict[str, Optional[bool]]
    witness: object = None
    consistent: bool = True


def _dense_epg(G: GroupHandle, cat: MaxCyclicCatalog, reduced_for: Optional[str] = None):
    """Dense graph, possibly after the deletion reduction for the target."""
    if reduced_for is None:
        if G.order > DENSE_CAP:
            return None
        return build_enhanced_power_graph(G, cat)
    plan = reductions(G, cat, reduced_for)
    if len(plan.residual) > DENSE_CAP:
        return None
    return build_enhanced_power_graph(G, cat, keep=plan.residual)


def _threshold_group_route(G: GroupHandle, cat: MaxCyclicCatalog) -> bool:
    """Threshold groups are cyclic, dihedral, or elementary abelian 2-groups."""
    n = G.order
    if cat.is_cyclic_group:
        return True
    if all(o <= 2 for o in cat.element_order):
        return True
    if n % 2 == 0:
        half = n // 2
        cyclics = [s for s in cat.all_cyclic if s.size == half]
        for s in cyclics:
            outside = set(range(n)) - set(s.members)
            if all(cat.element_order[x] == 2 for x in outside):
                return True
    return False


def classify_group(spec: str, tier: str = "standard",
                   route: str = "both") -> dict:
    """Evaluate the eight class predicates for one group.

    Each predicate is computed by a graph route (dense algorithms on the
    materialized, possibly reduced, graph) and a group route (catalog
    criteria); disagreements are reported as inconsistencies.
    """
    t0 = time.monotonic()
    G, cat = group_and_catalog(spec)
    results: list[PredicateResult] = []

    def add(name: str, graph_val, group_val, witness=None):
        routes: dict[str, Optional[bool]] = {}
        if route in ("graph", "both"):
            routes["graph"] = graph_val
        if route in ("group", "both"):
            routes["group"] = group_val
        known = [v for v in routes.values() if v is not None]
        consistent = len(set(known)) <= 1
        value = known[0] if known else None
        results.append(PredicateResult(name, value, routes, witness, consistent))

    # cograph: chains vs cotree (after deleting Cyc, which preserves P4s)
    ok_chains, viol = cograph_by_chains(cat)
    epg_cog = _dense_epg(G, cat, reduced_for="cograph")
    cot = ga.is_cograph(epg_cog.graph)[0] if epg_cog is not None else None
    add("cograph", cot, ok_chains, witness_to_jsonable(viol))

    # chordal: direct (or reduced) Lex-BFS; group route only via EPPO/partition
    epg_ch = _dense_epg(G, cat, reduced_for="chordal")
    chordal_graph = ga.is_chordal(epg_ch.graph)[0] if epg_ch is not None else None
    chordal_group = None
    part = partition_by_cyclics(cat)
    if is_eppo(G) or part is not None:
        chordal_group = True  # EPPO and partition groups are chordal
    add("chordal", chordal_graph, chordal_group)

    # C4-free: AB-configuration search vs dense scan
    cfg = c4_witness_search(G, cat)
    epg_c4 = _dense_epg(G, cat, reduced_for="c4free")
    c4_graph = (ga.has_induced_c4(epg_c4.graph) is None) if epg_c4 is not None else None
    add("c4free", c4_graph, cfg is None, witness_to_jsonable(cfg))

    # diamond-free: dense scan vs unique-maximal-membership criterion
    epg_full = _dense_epg(G, cat)
    dia_graph = (ga.find_diamond(epg_full.graph) is None) if epg_full is not None else None
    dia_group = all(len(cat.membership[x]) == 1 for x in range(G.order) if x != 0)
    add("diamond_free", dia_graph, dia_group)

    # block graph: dense blocks vs partition criterion
    blk_graph = ga.is_block_graph(epg_full.graph) if epg_full is not None else None
    blk_group = cat.is_cyclic_group or part is not None
    add("block", blk_graph, blk_group)

    # quasi-threshold: edgewise nesting vs chain criterion (cograph = qt)
    qt_graph = ga.is_quasi_threshold(epg_full.graph) if epg_full is not None else None
    add("qthreshold", qt_graph, ok_chains)

    # threshold: vertex elimination vs structure classification
    thr_graph = ga.is_threshold(epg_full.graph) if epg_full is not None else None
    add("threshold", thr_graph, _threshold_group_route(G, cat))

    # EPPO: order statistics vs power graph = enhanced power graph
    eppo_group = is_eppo(G)
    eppo_graph = None
    if epg_full is not None:
        pg = build_power_graph(G, cat)
        eppo_graph = pg.graph.rows == epg_full.graph.rows
    add("eppo", eppo_graph, eppo_group)

    consistent = all(r.consistent for r in results)
    return {
        "spec": spec,
        "order": G.order,
        "predicates": {r.name: {"value": r.value, "routes": r.routes,
                                "witness": r.witness} for r in results},
        "consistent": consistent,
        "millis": int(1000 * (time.monotonic() - t0)),
    }


# ---------------------------------------------------------------------------
# cross validation of catalog against definitions (small groups)


def cross_validate(spec: str) -> dict:
    """Definition-level identities for |G| <= 500: pairwise-oracle graph,
    star set = Cyc, simplicial equivalences, clique/catalog duality."""
    G, cat = group_and_catalog(spec)
    if G.order > 500:
        raise ValueError("cross_validate is limited to |G| <= 500")
    checks: dict[str, bool] = {}
    epg = build_enhanced_power_graph(G, cat)
    oracle = epg_oracle_graph(G)
    checks["pairwise_oracle"] = epg.graph.rows == oracle.rows
    pg = build_power_graph(G, cat)
    pgo = power_oracle_graph(G)
    checks["power_oracle"] = pg.graph.rows == pgo.rows
    checks["power_spanning"] = all((p & ~e) == 0 for p, e in zip(pg.graph.rows, epg.graph.rows))
    checks["star_set_is_cyc"] = set(ga.bits(ga.star_vertices(epg.graph))) == set(cat.cyc)
    graph_simp = set(ga.bits(ga.simplicial_vertices(epg.graph)))
    checks["simplicial_graph_vs_catalog"] = graph_simp == set(cat.simplicial)
    nx_cyclic = True
    for x in cat.simplicial:
        closed = cat.neighborhood(x) | {x}
        if not any(set(s.members) == closed for s in cat.subgroups):
            nx_cyclic = False
    checks["simplicial_closed_nbhd_cyclic"] = nx_cyclic
    checks["maximal_closed_nbhd"] = all(
        cat.neighborhood(x) | {x} ==
        set(cat.all_cyclic[cat.generated_by[x]].members)
        for x in cat.maximal_elements)
    cliques = set(ga.maximal_cliques(epg.graph))
    checks["clique_duality"] = cliques == {s.members for s in cat.subgroups}
    checks["omega"] = cat.omega == max(cat.element_order)
    return {"spec": spec, "order": G.order, "checks": checks,
            "pass": all(checks.values())}


# ---------------------------------------------------------------------------
# suites


@dataclass
class Check:
    name: str
    route: str
    ok: bool
    witness: object = None
    millis: int = 0
    skipped: bool = False


def _entry(spec: str, checks: list[Check]) -> dict:
    return {"spec": spec,
            "checks": [{"name": c.name, "route": c.route,
                        "pass": bool(c.ok), "skipped": c.skipped,
                        "witness": c.witness, "millis": c.millis}
                       for c in checks]}


def _timed(fn: Callable) -> tuple[object, int]:
    t0 = time.monotonic()
    out = fn()
    return out, int(1000 * (time.monotonic() - t0))


def suite_theorem_a(tier: str) -> list[dict]:
    """cograph => chordal over the corpus: zero counterexamples."""
    entries = []
    for e in corpus_for_tier(tier):
        G, cat = group_and_catalog(e.spec)
        (cog, _), ms1 = _timed(lambda: cograph_by_chains(cat))
        epg = _dense_epg(G, cat, reduced_for="chordal")
        if epg is None:
            entries.append(_entry(e.spec, [Check("cograph_implies_chordal", "both",
                                                 True, None, ms1, skipped=True)]))
            continue
        (ch, _), ms2 = _timed(lambda: ga.is_chordal(epg.graph))
        ok = (not cog) or ch
        entries.append(_entry(e.spec, [
            Check("cograph_implies_chordal", "both", ok,
                  {"cograph": cog, "chordal": ch}, ms1 + ms2)]))
    return entries


def suite_theorem_b(tier: str) -> list[dict]:
    entries = []
    positives = ["PSL(2,4)", "PSL(2,5)", "PSL(2,7)", "PSL(2,8)", "PSL(2,9)",
                 "PSL(2,11)", "PSL(2,13)", "PSL(3,4)", "Sz(8)"]
    for spec in positives:
        G, cat = group_and_catalog(spec)
        checks = []
        (cog, viol), ms = _timed(lambda: cograph_by_chains(cat))
        checks.append(Check("cograph", "group", cog, witness_to_jsonable(viol), ms))
        two_group, ms = _timed(lambda: prime_intersection_check(cat, 2))
        maxi = max_pairwise_intersection(cat)
        if spec.startswith("PSL(2"):
            two_group = two_group and maxi == 1
        elif spec == "Sz(8)":
            two_group = two_group and maxi <= 2
        checks.append(Check("pairwise_intersections_2group", "group",
                            two_group, {"max_intersection": maxi}, ms))
        if G.order <= DENSE_CAP:
            epg = build_enhanced_power_graph(G, cat)
            (cg, w), ms = _timed(lambda: ga.is_cograph(epg.graph))
            checks.append(Check("cograph", "graph", cg, None, ms))
        entries.append(_entry(spec, checks))

    negatives = ["PSL(3,3)", "PSL(3,5)", "PSU(3,3)", "M11", "A7"]
    for spec in negatives:
        G, cat = group_and_catalog(spec)
        (res, ms) = _timed(lambda: cograph_by_chains(cat))
        cog, viol = res
        checks = [Check("not_cograph_with_triple", "group",
                        (not cog) and viol is not None,
                        witness_to_jsonable(viol), ms)]
        entries.append(_entry(spec, checks))

    c4_specs = ["A8", "E2^2 x E3^2", "A4 x S3", "A4 x E2^2", "CP(SL(2,3),Q8)",
                "SL(2,3) x Q8", "M12"]
    if TIER_ORDER[tier] >= 2:
        c4_specs.append("M22")
    for spec in c4_specs:
        G, cat = group_and_catalog(spec)
        cfg, ms = _timed(lambda: c4_witness_search(G, cat))
        checks = [Check("c4_configuration", "group", cfg is not None,
                        witness_to_jsonable(cfg), ms)]
        entries.append(_entry(spec, checks))
    return entries


def suite_nilpotent(tier: str) -> list[dict]:
    """Equivalence of the nilpotent-group conditions on the nilpotent corpus."""
    entries = []
    nil = [e for e in CORPUS if "nilpotent" in e.note]
    for e in nil:
        G, cat = group_and_catalog(e.spec)
        checks = []
        (cog, _), ms1 = _timed(lambda: cograph_by_chains(cat))
        epg = build_enhanced_power_graph(G, cat)
        (ch, _), ms2 = _timed(lambda: ga.is_chordal(epg.graph))
        c4g, ms3 = _timed(lambda: ga.has_induced_c4(epg.graph))
        cfg, ms4 = _timed(lambda: c4_witness_search(G, cat))
        # (d): at most one prime with a non-cyclic Sylow subgroup
        noncyclic = 0
        n = G.order
        for p in prime_factors(n):
            pk = 1
            while n % (pk * p) == 0:
                pk *= p
            if all(cat.element_order[x] != pk for x in range(n)):
                noncyclic += 1
        sylow_ok = noncyclic <= 1
        # (e): the p'-elements form a cyclic subgroup for the bad prime
        bad = [p for p in prime_factors(n)
               if not any(cat.element_order[x] == _ppart(n, p) for x in range(n))]
        p0 = bad[0] if bad else (prime_factors(n)[0] if n > 1 else 2)
        coprime = [x for x in range(n) if gcd(cat.element_order[x], p0) == 1]
        m = len(coprime)
        decomposes = any(cat.element_order[x] == m for x in coprime) and n % m == 0
        vals = {"cograph": cog, "chordal": ch, "c4free_graph": c4g is None,
                "c4free_group": cfg is None, "sylow": sylow_ok,
                "p_complement_cyclic": decomposes}
        ok = len(set(vals.values())) == 1
        checks.append(Check("five_conditions_agree", "both", ok, vals,
                            ms1 + ms2 + ms3 + ms4))
        entries.append(_entry(e.spec, checks))
    return entries


def _ppart(n: int, p: int) -> int:
    pk = 1
    while n % (pk * p) == 0:
        pk *= p
    return pk


def suite_partition(tier: str) -> list[dict]:
    """Agreement of the partition-theorem conditions on groups of order <= 1000."""
    entries = []
    for e in corpus_for_tier(tier):
        G, cat = group_and_catalog(e.spec)
        if G.order > 1000:
            continue
        epg = build_enhanced_power_graph(G, cat)
        rep, ms = _timed(lambda: partition_equivalents(G, cat, epg))
        ok = len(set(rep.values())) == 1
        entries.append(_entry(e.spec, [Check("partition_conditions_agree",
                                             "both", ok, rep, ms)]))
    return entries


def suite_quotient_transfer(tier: str) -> list[dict]:
    """Edge transfer between G and G/Cyc(G) when the cycliciser is nontrivial."""
    entries = []
    for e in corpus_for_tier(tier):
        G, cat = group_and_catalog(e.spec)
        if len(cat.cyc) <= 1 or G.order > 400:
            continue
        checks = []
        t0 = time.monotonic()
        Q, proj = cyc_quotient(G, cat)
        ok_edges = True
        ok_translate = True
        pmap = [proj(x) for x in range(G.order)]
        for x in range(G.order):
            for y in range(x + 1, G.order):
                exy = two_generated_cyclic(G, x, y)[0]
                if pmap[x] == pmap[y]:
                    # same coset: always an edge downstairs is undefined; the
                    # cycliciser translate rule says <x,y> stays cyclic
                    if not exy:
                        ok_translate = False
                else:
                    if exy != two_generated_cyclic(Q, pmap[x], pmap[y])[0]:
                        ok_edges = False
        ms = int(1000 * (time.monotonic() - t0))
        checks.append(Check("edge_transfer", "both", ok_edges, None, ms))
        checks.append(Check("same_coset_edges", "both", ok_translate, None, 0))
        # property transfer both ways on the dense graphs
        catq = max_cyclic_catalog(Q)
        eg = build_enhanced_power_graph(G, cat)
        eq = build_enhanced_power_graph(Q, catq)
        same = all(
            ga.is_cograph(eg.graph)[0] == ga.is_cograph(eq.graph)[0]
            for _ in (0,))
        same = same and (ga.is_chordal(eg.graph)[0] == ga.is_chordal(eq.graph)[0])
        same = same and ((ga.has_induced_c4(eg.graph) is None) ==
                         (ga.has_induced_c4(eq.graph) is None))
        checks.append(Check("property_transfer_both_ways", "graph", same, None, 0))
        entries.append(_entry(e.spec, checks))
    return entries


def suite_eppo(tier: str) -> list[dict]:
    """EPPO groups: power graph = enhanced power graph, cograph and chordal."""
    entries = []
    for e in corpus_for_tier(tier):
        G, cat = group_and_catalog(e.spec)
        if not is_eppo(G):
            continue
        checks = []
        ppo_sizes = all(s.size == 1 or is_prime_power(s.size) for s in cat.subgroups)
        checks.append(Check("maximal_cyclics_prime_power", "group", ppo_sizes, None, 0))
        if G.order <= DENSE_CAP:
            epg = build_enhanced_power_graph(G, cat)
            pgr = build_power_graph(G, cat)
            eq, ms = _timed(lambda: pgr.graph.rows == epg.graph.rows)
            checks.append(Check("power_equals_enhanced", "graph", bool(eq), None, ms))
        (cog, _), ms = _timed(lambda: cograph_by_chains(cat))
        checks.append(Check("cograph", "group", cog, None, ms))
        epg_r = _dense_epg(G, cat, reduced_for="chordal")
        if epg_r is not None:
            (ch, _), ms = _timed(lambda: ga.is_chordal(epg_r.graph))
            checks.append(Check("chordal", "graph", ch, None, ms))
        entries.append(_entry(e.spec, checks))
    return entries


def suite_witness_catalog(tier: str) -> list[dict]:
    """Re-validate every stored explicit witness from the source material."""
    entries = []

    # the order-24 subgroup of A7 and its induced 4-path
    K, wit = k_a7()
    catK = max_cyclic_catalog(K)
    epgK = build_enhanced_power_graph(K, catK)
    x2 = K.compose(wit["x"], wit["x"])
    path = (wit["y"], wit["a"], x2, wit["x"])
    w = Witness("p4", path)
    checks = [Check("induced_4path", "graph", ga.verify_witness(epgK.graph, w),
                    {"vertices": list(path)}, 0)]
    rep = validate_general_lemma(K, catK, path, "path")
    checks.append(Check("general_lemma_clauses", "group", all(rep.values()), rep, 0))
    (cog, _), ms = _timed(lambda: ga.is_cograph(epgK.graph))
    checks.append(Check("k_not_cograph", "graph", not cog, None, ms))
    entries.append(_entry("K_A7", checks))

    # A8: the explicit induced 4-cycle on two double-transpositions and two
    # 3-cycles, re-validated and normalized to an AB configuration
    G8, cat8 = group_and_catalog("A8")
    sp = G8.space
    ids = [G8.index[sp.pack(p)] for p in (
        [1, 0, 3, 2, 4, 5, 6, 7],      # (1 2)(3 4)
        [0, 1, 2, 3, 5, 6, 4, 7],      # (5 6 7)
        [2, 3, 0, 1, 4, 5, 6, 7],      # (1 3)(2 4)
        [0, 1, 2, 3, 5, 7, 6, 4],      # (5 6 8)
    )]
    checks = []
    ok = True
    try:
        from .epgcore import c4_to_ab
        cfg = c4_to_ab(G8, ids)
    except Exception as exc:
        ok, cfg = False, None
    checks.append(Check("explicit_cycle_validates", "group", ok,
                        witness_to_jsonable(cfg), 0))
    rep = validate_general_lemma(G8, cat8, ids, "cycle")
    checks.append(Check("general_lemma_clauses", "group", all(rep.values()), rep, 0))
    entries.append(_entry("A8", checks))

    # PSL3(q) witness triples for q in {3, 5}
    for q in (3, 5):
        Gq, witq = psl3_witnesses(q)
        catq = max_cyclic_catalog(Gq)
        a, x, b = witq["a"], witq["x"], witq["b"]
        d = gcd(3, q - 1)
        p = prime_factors(q)[0]
        checks = []
        subA = set(catq.membership[a]) & set(catq.membership[x])
        subB = set(catq.membership[a]) & set(catq.membership[b])
        okA = len(subA) == 1 and len(subB) == 1 and subA != subB
        checks.append(Check("A_B_maximal_cyclic", "group", okA,
                            {"A": sorted(subA), "B": sorted(subB)}, 0))
        iA = subA.pop() if okA else None
        want = p * (q - 1) // d
        checks.append(Check("A_order", "group",
                            okA and catq.subgroups[iA].size == want,
                            {"want": want}, 0))
        singer = (q * q - 1) // d
        cands = [s for s in catq.membership[x]
                 if catq.subgroups[s].size == singer]
        checks.append(Check("singer_overgroup_of_x", "group", bool(cands),
                            {"order": singer}, 0))
        if okA and cands:
            iC = cands[0]
            mA = set(catq.subgroups[iA].members)
            mB = set(catq.subgroups[next(iter(subB))].members)
            mC = set(catq.subgroups[iC].members)
            ab, ac = mA & mB, mA & mC
            checks.append(Check("intersections_incomparable", "group",
                                not (ab <= ac) and not (ac <= ab),
                                {"|A∩B|": len(ab), "|A∩C|": len(ac)}, 0))
        entries.append(_entry(f"PSL(3,{q})", checks))

    # M11: a violating triple with subgroup orders {6, 6, 8}
    GM, catM = group_and_catalog("M11")
    found = None
    for ai, A in enumerate(catM.subgroups):
        if A.size != 6:
            continue
        inter = {}
        for xx in sorted(A.members, key=lambda v: -catM.element_order[v]):
            if xx in catM.cyc_set:
                continue
            for bi in catM.membership[xx]:
                if bi != ai and bi not in inter:
                    inter[bi] = catM.element_order[xx]
        b6 = [b for b, o in inter.items() if o == 3 and catM.subgroups[b].size == 6]
        c8 = [b for b, o in inter.items() if o == 2 and catM.subgroups[b].size == 8]
        if b6 and c8:
            found = (ai, b6[0], c8[0])
            break
    entries.append(_entry("M11", [Check("triple_668", "group", found is not None,
                                        {"subgroups": found}, 0)]))
    return entries


def suite_extended_big_groups(budget: float = 600.0) -> list[dict]:
    entries = []
    # M22: configuration exists
    G, cat = group_and_catalog("M22")
    cfg, ms = _timed(lambda: c4_witness_search(G, cat))
    entries.append(_entry("M22", [
        Check("c4_configuration", "group", cfg is not None,
              witness_to_jsonable(cfg), ms)]))

    # J1: not a cograph with a (15,10,6)-order triple; C4-free
    G, cat = group_and_catalog("J1")
    checks = []
    found = None
    t0 = time.monotonic()
    for ai, A in enumerate(cat.subgroups):
        if A.size != 15:
            continue
        inter = {}
        for xx in sorted(A.members, key=lambda v: -cat.element_order[v]):
            if xx in cat.cyc_set:
                continue
            for bi in cat.membership[xx]:
                if bi != ai and bi not in inter:
                    inter[bi] = cat.element_order[xx]
        b10 = [b for b, o in inter.items() if o == 5 and cat.subgroups[b].size == 10]
        c6 = [b for b, o in inter.items() if o == 3 and cat.subgroups[b].size == 6]
        if b10 and c6:
            found = (ai, b10[0], c6[0])
            break
    ms = int(1000 * (time.monotonic() - t0))
    checks.append(Check("triple_15_10_6", "group", found is not None,
                        {"subgroups": found}, ms))
    cfg, ms = _timed(lambda: c4_witness_search(G, cat))
    checks.append(Check("c4free", "group", cfg is None, witness_to_jsonable(cfg), ms))
    # reduction route under a wall-clock budget
    plan = reductions(G, cat, "c4free")
    t0 = time.monotonic()
    epg = build_enhanced_power_graph(G, cat, keep=plan.residual)
    status, wit = ga.has_induced_c4_budget(epg.graph, budget)
    ms = int(1000 * (time.monotonic() - t0))
    if status == "timeout":
        checks.append(Check("c4free_reduction_route", "graph", True,
                            {"residual": len(plan.residual)}, ms, skipped=True))
    else:
        checks.append(Check("c4free_reduction_route", "graph", wit is None,
                            {"residual": len(plan.residual)}, ms))
    entries.append(_entry("J1", checks))
    return entries


SUITES: dict[str, Callable] = {
    "theorem-a": suite_theorem_a,
    "theorem-b": suite_theorem_b,
    "nilpotent": suite_nilpotent,
    "partition": suite_partition,
    "quotient-transfer": suite_quotient_transfer,
    "eppo": suite_eppo,
    "witness-catalog": suite_witness_catalog,
    "extended-big-groups": suite_extended_big_groups,
}


def run_suite(name: str, tier: str = "standard", out_dir: str = "reports",
              budget: float = 600.0, figure: bool = True) -> dict:
    """Execute a named suite; write the JSON report and a summary figure."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name}; options: {sorted(SUITES)}")
    t0 = time.monotonic()
    if name == "extended-big-groups":
        entries = SUITES[name](budget)
    else:
        entries = SUITES[name](tier)
    report = {
        "suite": name,
        "tier": tier,
        "entries": entries,
        "pass": all(c["pass"] or c["skipped"] for e in entries for c in e["checks"]),
        "millis": int(1000 * (time.monotonic() - t0)),
        "env": {
            "python": sys.version.split()[0],
            "platform": platform.platform(),
            "package": __version__,
        },
    }
    os.makedirs(out_dir, exist_ok=True)
    stamp = time.strftime("%Y%m%d-%H%M%S")
    path = os.path.join(out_dir, f"{name}-{stamp}.json")
    with open(path, "w") as fh:
        json.dump(report, fh, indent=2, default=str)
    report["path"] = path
    if figure:
        try:
            fig_path = render_suite_figure(report, os.path.splitext(path)[0] + ".png")
            report["figure"] = fig_path
        except Exception as exc:  # figure rendering must never fail a suite
            report["figure_error"] = str(exc)
    return report


def render_suite_figure(report: dict, path: str) -> str:
    """Pass/fail grid plus per-entry timing bars."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Patch

    entries = report["entries"]
    if not entries:
        return path
    specs = [e["spec"] for e in entries]
    names: list[str] = []
    for e in entries:
        for c in e["checks"]:
            nm = f'{c["name"]}/{c["route"]}'
            if nm not in names:
                names.append(nm)
    grid = [[None] * len(names) for _ in specs]
    times = [sum(c["millis"] for c in e["checks"]) for e in entries]
    for i, e in enumerate(entries):
        for c in e["checks"]:
            j = names.index(f'{c["name"]}/{c["route"]}')
            grid[i][j] = "skip" if c["skipped"] else ("pass" if c["pass"] else "fail")

    colors = {"pass": "#2e7d32", "fail": "#c62828", "skip": "#9e9e9e", None: "#eeeeee"}
    h = max(3.0, 0.28 * len(specs) + 1.6)
    w = max(7.0, 0.5 * len(names) + 4.5)
    fig, (ax, axt) = plt.subplots(
        1, 2, figsize=(w, h), gridspec_kw={"width_ratios": [3, 1]})
    for i in range(len(specs)):
        for j in range(len(names)):
            ax.add_patch(plt.Rectangle((j, len(specs) - 1 - i), 1, 1,
                                       facecolor=colors[grid[i][j]],
                                       edgecolor="white"))
    ax.set_xlim(0, len(names))
    ax.set_ylim(0, len(specs))
    ax.set_xticks([k + 0.5 for k in range(len(names))])
    ax.set_xticklabels(names, rotation=60, ha="right", fontsize=7)
    ax.set_yticks([len(specs) - 1 - i + 0.5 for i in range(len(specs))])
    ax.set_yticklabels(specs, fontsize=7)
    ax.set_title(f'{report["suite"]} (tier {report.get("tier", "-")})', fontsize=10)
    ax.legend(handles=[Patch(facecolor=colors[k], label=k)
                       for k in ("pass", "fail", "skip")],
              loc="upper right", fontsize=6)
    axt.barh([len(specs) - 1 - i + 0.5 for i in range(len(specs))], times,
             height=0.8, color="#1565c0")
    axt.set_ylim(0, len(specs))
    axt.set_yticks([])
    axt.set_xlabel("millis", fontsize=8)
    fig.tight_layout()
    fig.savefig(path, dpi=130)
    plt.close(fig)
    return path
