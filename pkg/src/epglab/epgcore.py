"""Enhanced-power-graph machinery: catalogs, graphs, and group criteria.

The catalog of maximal cyclic subgroups drives everything: the enhanced
power graph is the union of cliques over the catalog's member sets, star
vertices are the cycliciser (the intersection of all maximal cyclic
subgroups), simplicial vertices are the elements lying in a unique maximal
cyclic subgroup, and the cograph / C4-free decisions reduce to intersection
patterns among the subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from .graphs import DENSE_CAP, DenseGraph, GraphTooLarge, Witness
from .groups import GroupHandle, QuotientMap, quotient, subgroup_closure, two_generated_cyclic


def is_prime_power(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


@dataclass
class CyclicSubgroup:
    generator: int            # minimum id among generators
    members: tuple[int, ...]  # sorted element ids
    size: int


@dataclass
class MaxCyclicCatalog:
    group: GroupHandle
    subgroups: list[CyclicSubgroup]          # exactly the maximal cyclic subgroups
    membership: list[tuple[int, ...]]        # element id -> subgroup indices
    cyc: tuple[int, ...]                     # Cyc(G), sorted ids
    maximal_elements: frozenset[int]         # elements generating a maximal cyclic
    simplicial: frozenset[int]               # elements in a unique maximal cyclic
    omega: int                               # max subgroup size = max element order
    element_order: list[int]
    generated_by: list[int]                  # element id -> index into all_cyclic
    all_cyclic: list[CyclicSubgroup]         # every distinct cyclic subgroup
    cyc_set: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        self.cyc_set = frozenset(self.cyc)

    @property
    def is_cyclic_group(self) -> bool:
        return len(self.subgroups) == 1

    def members_of(self, idx: int) -> tuple[int, ...]:
        return self.subgroups[idx].members

    def adjacent(self, x: int, y: int) -> bool:
        """Edge test in the enhanced power graph via shared maximal cyclics."""
        if x == y:
            return False
        mx, my = self.membership[x], self.membership[y]
        if len(mx) > len(my):
            mx, my = my, mx
        ms = set(mx)
        return any(s in ms for s in my)

    def neighborhood(self, x: int) -> set[int]:
        """Open neighborhood of x in the enhanced power graph."""
        out: set[int] = set()
        for s in self.membership[x]:
            out.update(self.subgroups[s].members)
        out.discard(x)
        return out


def max_cyclic_catalog(G: GroupHandle) -> MaxCyclicCatalog:
    n = G.order
    generated_by = [-1] * n
    all_cyclic: list[CyclicSubgroup] = []
    orders = [0] * n
    for g in range(n):
        if generated_by[g] >= 0:
            continue
        walk = G.cyclic_members(g)      # [identity, g, g^2, ...]
        o = len(walk)
        members = tuple(sorted(walk))
        idx = len(all_cyclic)
        gens = [walk[k] for k in range(1, o) if gcd(k, o) == 1] or [0]
        for k in range(1, o):
            if gcd(k, o) == 1:
                generated_by[walk[k]] = idx
                orders[walk[k]] = o
        if o == 1:
            generated_by[0] = idx
            orders[0] = 1
        all_cyclic.append(CyclicSubgroup(generator=min(gens), members=members, size=o))

    full_membership: list[list[int]] = [[] for _ in range(n)]
    for idx, sub in enumerate(all_cyclic):
        for m in sub.members:
            full_membership[m].append(idx)

    maximal_idx = []
    for idx, sub in enumerate(all_cyclic):
        if all(all_cyclic[t].size <= sub.size for t in full_membership[sub.generator]):
            maximal_idx.append(idx)
    # deterministic ordering by member tuples
    maximal_idx.sort(key=lambda i: all_cyclic[i].members)
    remap = {old: new for new, old in enumerate(maximal_idx)}
    subgroups = [all_cyclic[i] for i in maximal_idx]

    membership: list[tuple[int, ...]] = [()] * n
    for x in range(n):
        membership[x] = tuple(sorted(remap[t] for t in full_membership[x] if t in remap))
    if any(not m for m in membership):
        raise AssertionError("element missing from every maximal cyclic subgroup")

    cyc = set(subgroups[0].members)
    for sub in subgroups[1:]:
        cyc &= set(sub.members)
        if len(cyc) == 1:
            break
    maximal_elements = frozenset(x for x in range(n) if generated_by[x] in remap)
    simplicial = frozenset(x for x in range(n) if len(membership[x]) == 1)
    omega = max(sub.size for sub in subgroups)
    return MaxCyclicCatalog(
        group=G,
        subgroups=subgroups,
        membership=membership,
        cyc=tuple(sorted(cyc)),
        maximal_elements=maximal_elements,
        simplicial=simplicial,
        omega=omega,
        element_order=orders,
        generated_by=generated_by,
        all_cyclic=all_cyclic,
    )


@dataclass
class EpgGraph:
    """Dense materialization of the enhanced (or plain) power graph."""

    graph: DenseGraph
    vertex_ids: list[int]               # graph vertex -> group element id
    order_label: list[int]
    prime_power_label: list[bool]
    member_count: list[int]

    @property
    def n(self) -> int:
        return self.graph.n


def build_enhanced_power_graph(G: GroupHandle, catalog: MaxCyclicCatalog,
                               keep: Optional[Sequence[int]] = None,
                               cap: int = DENSE_CAP) -> EpgGraph:
    """Union of cliques over the catalog member sets.

    `keep` restricts to an induced subgraph on those element ids (used by the
    deletion reductions); vertex v of the result is element vertex_ids[v].
    """
    ids = list(range(G.order)) if keep is None else sorted(keep)
    if len(ids) > cap:
        raise GraphTooLarge(f"{len(ids)} vertices exceeds cap {cap}; reduce first")
    pos = {e: i for i, e in enumerate(ids)}
    g = DenseGraph(len(ids), cap=max(len(ids), 1))
    for sub in catalog.subgroups:
        mask = 0
        inside = []
        for m in sub.members:
            i = pos.get(m)
            if i is not None:
                mask |= 1 << i
                inside.append(i)
        for i in inside:
            g.rows[i] |= mask & ~(1 << i)
    return EpgGraph(
        graph=g,
        vertex_ids=ids,
        order_label=[catalog.element_order[e] for e in ids],
        prime_power_label=[is_prime_power(catalog.element_order[e]) for e in ids],
        member_count=[len(catalog.membership[e]) for e in ids],
    )


def build_power_graph(G: GroupHandle, catalog: MaxCyclicCatalog,
                      keep: Optional[Sequence[int]] = None,
                      cap: int = DENSE_CAP) -> EpgGraph:
    """Edges between x and y when one is a power of the other."""
    ids = list(range(G.order)) if keep is None else sorted(keep)
    if len(ids) > cap:
        raise GraphTooLarge(f"{len(ids)} vertices exceeds cap {cap}; reduce first")
    pos = {e: i for i, e in enumerate(ids)}
    g = DenseGraph(len(ids), cap=max(len(ids), 1))
    for idx, sub in enumerate(catalog.all_cyclic):
        inside_members = [pos[m] for m in sub.members if m in pos]
        mask = 0
        for i in inside_members:
            mask |= 1 << i
        gen_positions = [pos[x] for x in sub.members
                         if catalog.generated_by[x] == idx and x in pos]
        gen_mask = 0
        for i in gen_positions:
            g.rows[i] |= mask & ~(1 << i)
            gen_mask |= 1 << i
        for i in inside_members:
            g.rows[i] |= gen_mask & ~(1 << i)
    return EpgGraph(
        graph=g,
        vertex_ids=ids,
        order_label=[catalog.element_order[e] for e in ids],
        prime_power_label=[is_prime_power(catalog.element_order[e]) for e in ids],
        member_count=[len(catalog.membership[e]) for e in ids],
    )


def epg_oracle_graph(G: GroupHandle) -> DenseGraph:
    """Pairwise-test construction of the enhanced power graph (small groups)."""
    g = DenseGraph(G.order, cap=max(G.order, 1))
    for x in range(G.order):
        for y in range(x + 1, G.order):
            if two_generated_cyclic(G, x, y)[0]:
                g.add_edge(x, y)
    return g


def power_oracle_graph(G: GroupHandle) -> DenseGraph:
    g = DenseGraph(G.order, cap=max(G.order, 1))
    for x in range(G.order):
        members = G.cyclic_members(x)
        for y in members:
            if y != x:
                g.add_edge(x, y)
    return g


# ---------------------------------------------------------------------------
# cograph criterion: per-subgroup divisibility chains


@dataclass
class ChainViolation:
    """Maximal cyclic subgroups A, B, C with incomparable A∩B, A∩C."""

    a: int
    b: int
    c: int
    order_ab: int
    order_ac: int

    def subgroup_orders(self, catalog: MaxCyclicCatalog) -> tuple[int, int, int]:
        s = catalog.subgroups
        return (s[self.a].size, s[self.b].size, s[self.c].size)


def _intersection_orders(catalog: MaxCyclicCatalog, a: int) -> dict[int, int]:
    """|A ∩ B| for every B sharing an element outside Cyc with A = subgroup a."""
    out: dict[int, int] = {}
    members = sorted(catalog.subgroups[a].members,
                     key=lambda x: -catalog.element_order[x])
    for x in members:
        if x in catalog.cyc_set:
            continue
        for b in catalog.membership[x]:
            if b != a and b not in out:
                out[b] = catalog.element_order[x]
    return out


def cograph_by_chains(catalog: MaxCyclicCatalog) -> tuple[bool, Optional[ChainViolation]]:
    """Cograph test: for each maximal cyclic A the orders |A ∩ B| must form a
    divisibility chain.  Subgroups of a cyclic group are unique per order, so
    comparability of intersections inside A is divisibility of their orders.
    """
    for a in range(len(catalog.subgroups)):
        inter = _intersection_orders(catalog, a)
        if len(inter) < 2:
            continue
        by_order: dict[int, int] = {}
        for b, o in sorted(inter.items()):
            by_order.setdefault(o, b)
        orders = sorted(by_order)
        for lo, hi in zip(orders, orders[1:]):
            if hi % lo:
                return False, ChainViolation(a=a, b=by_order[lo], c=by_order[hi],
                                             order_ab=lo, order_ac=hi)
    return True, None


def cograph_triples_naive(catalog: MaxCyclicCatalog) -> tuple[bool, Optional[ChainViolation]]:
    """Cubic triple-loop oracle for the chain criterion (validation only)."""
    subs = catalog.subgroups
    sets = [set(s.members) for s in subs]
    for a in range(len(subs)):
        for b in range(len(subs)):
            if b == a:
                continue
            ab = sets[a] & sets[b]
            for c in range(b + 1, len(subs)):
                if c == a:
                    continue
                ac = sets[a] & sets[c]
                if not (ab <= ac or ac <= ab):
                    return False, ChainViolation(a=a, b=b, c=c,
                                                 order_ab=len(ab), order_ac=len(ac))
    return True, None


def prime_intersection_check(catalog: MaxCyclicCatalog, p: int) -> bool:
    """All pairwise intersections of distinct maximal cyclics have p-power order."""
    if catalog.is_cyclic_group:
        raise ValueError("prime intersection check needs a non-cyclic group")

    def p_power(n: int) -> bool:
        while n % p == 0:
            n //= p
        return n == 1

    if not p_power(len(catalog.cyc)):
        return False
    seen: set[tuple[int, int]] = set()
    order_of = catalog.element_order
    for x in range(catalog.group.order):
        if x in catalog.cyc_set or len(catalog.membership[x]) < 2:
            continue
        if not p_power(order_of[x]):
            # x lies in two distinct maximal cyclics, so some |A∩B| is a
            # multiple of |x| and cannot be a p-power
            return False
    return True


def max_pairwise_intersection(catalog: MaxCyclicCatalog) -> int:
    """max |A ∩ B| over distinct maximal cyclic subgroups."""
    best = len(catalog.cyc)
    for x in range(catalog.group.order):
        if len(catalog.membership[x]) >= 2:
            best = max(best, catalog.element_order[x])
    return best


# ---------------------------------------------------------------------------
# induced C4 search via AB configurations


@dataclass
class ABConfiguration:
    a1: int
    a2: int
    b1: int
    b2: int

    def as_cycle(self) -> tuple[int, int, int, int]:
        return (self.a1, self.b1, self.a2, self.b2)


class InvalidConfiguration(ValueError):
    pass


def validate_ab(G: GroupHandle, cfg: ABConfiguration,
                orders: Optional[list[int]] = None) -> None:
    """Re-validate an AB configuration against the group itself."""
    ids = (cfg.a1, cfg.a2, cfg.b1, cfg.b2)
    if len(set(ids)) != 4:
        raise InvalidConfiguration("vertices not distinct")
    o = {x: (orders[x] if orders else G.element_order(x)) for x in ids}
    for x in ids:
        if not is_prime_power(o[x]):
            raise InvalidConfiguration(f"|{x}| = {o[x]} is not a prime power")
    for a in (cfg.a1, cfg.a2):
        for b in (cfg.b1, cfg.b2):
            if gcd(o[a], o[b]) != 1:
                raise InvalidConfiguration("cross orders are not coprime")
            if not G.commutes(a, b):
                raise InvalidConfiguration("sides do not centralise each other")
    if two_generated_cyclic(G, cfg.a1, cfg.a2)[0]:
        raise InvalidConfiguration("<a1,a2> is cyclic")
    if two_generated_cyclic(G, cfg.b1, cfg.b2)[0]:
        raise InvalidConfiguration("<b1,b2> is cyclic")


def c4_witness_search(G: GroupHandle, catalog: MaxCyclicCatalog) -> Optional[ABConfiguration]:
    """An AB configuration iff the enhanced power graph has an induced C4.

    The search is restricted to non-simplicial, non-cycliciser vertices of
    prime-power order, organized by coprime prime pairs (p, r) ascending:
    whenever an induced C4 exists, one exists whose opposite pairs are
    p-elements and r-elements for two distinct primes (if every pair of
    p-elements of the side subgroup A generated a cyclic group, for all p,
    then every Sylow subgroup of A would be cyclic and normal and A itself
    would be cyclic).  Validated against the generic C4 detector on the
    corpus.
    """
    orders = catalog.element_order
    cands_by_prime: dict[int, list[int]] = {}
    for x in range(G.order):
        if x in catalog.simplicial or x in catalog.cyc_set:
            continue
        o = orders[x]
        if not is_prime_power(o):
            continue
        p = prime_factors(o)[0]
        cands_by_prime.setdefault(p, []).append(x)
    primes = sorted(cands_by_prime)

    def r_neighbors(a: int, rset: set[int]) -> set[int]:
        out: set[int] = set()
        for s in catalog.membership[a]:
            out.update(m for m in catalog.subgroups[s].members if m in rset)
        return out

    for i, p in enumerate(primes):
        for r in primes[i + 1 :]:
            pc, rc = cands_by_prime[p], cands_by_prime[r]
            rset = set(rc)
            pset = set(pc)
            cache: dict[int, set[int]] = {}
            for b1 in rc:
                a_side = sorted(r_neighbors(b1, pset))
                if len(a_side) < 2:
                    continue
                nb1 = catalog.neighborhood(b1)
                for j, a1 in enumerate(a_side):
                    na1 = cache.get(a1)
                    if na1 is None:
                        na1 = cache[a1] = r_neighbors(a1, rset)
                    for a2 in a_side[j + 1 :]:
                        if catalog.adjacent(a1, a2):
                            continue
                        na2 = cache.get(a2)
                        if na2 is None:
                            na2 = cache[a2] = r_neighbors(a2, rset)
                        commons = (na1 & na2) - nb1 - {b1}
                        if commons:
                            b2 = min(commons)
                            cfg = ABConfiguration(a1=a1, a2=a2, b1=b1, b2=b2)
                            validate_ab(G, cfg, orders)
                            return cfg
    return None


def ab_to_c4(G: GroupHandle, cfg: ABConfiguration) -> Witness:
    """The induced 4-cycle (a1, b1, a2, b2) determined by a configuration."""
    validate_ab(G, cfg)
    return Witness("c4", cfg.as_cycle())


def c4_to_ab(G: GroupHandle, cycle: Sequence[int],
             catalog: Optional[MaxCyclicCatalog] = None) -> ABConfiguration:
    """Normalize an induced C4 of the enhanced power graph to an AB
    configuration: vertices of composite order are replaced by prime-power
    parts that stay non-adjacent to the opposite vertex."""
    cyc = list(cycle)
    if len(cyc) != 4 or len(set(cyc)) != 4:
        raise InvalidConfiguration("need four distinct vertices")

    def adjacent(x: int, y: int) -> bool:
        return two_generated_cyclic(G, x, y)[0]

    for i in range(4):
        if not adjacent(cyc[i], cyc[(i + 1) % 4]):
            raise InvalidConfiguration("cycle edge missing in the graph")
    if adjacent(cyc[0], cyc[2]) or adjacent(cyc[1], cyc[3]):
        raise InvalidConfiguration("cycle is not induced")

    changed = True
    while changed:
        changed = False
        for i in range(4):
            o = G.element_order(cyc[i])
            if is_prime_power(o):
                continue
            opposite = cyc[(i + 2) % 4]
            for p in prime_factors(o):
                m = o
                while m % p == 0:
                    m //= p
                y = G.power(cyc[i], m)  # the p-part of the vertex
                if not adjacent(y, opposite):
                    cyc[i] = y
                    changed = True
                    break
            else:
                raise InvalidConfiguration("no prime part keeps the cycle induced")
    cfg = ABConfiguration(a1=cyc[0], a2=cyc[2], b1=cyc[1], b2=cyc[3])
    validate_ab(G, cfg)
    return cfg


# ---------------------------------------------------------------------------
# reductions and partitions


@dataclass
class ReductionPlan:
    target: str
    delete: tuple[int, ...]          # vertex ids to remove
    residual: tuple[int, ...]        # remaining vertex ids
    quotient_by_cyc: bool            # whether the G/Cyc(G) route is available


def reductions(G: GroupHandle, catalog: MaxCyclicCatalog, target: str) -> ReductionPlan:
    """Vertex deletions preserving the target property's witnesses.

    Induced holes avoid simplicial and star vertices, and induced P4s avoid
    star vertices, so chordal/C4-free targets may delete sl ∪ Cyc while the
    cograph target may delete only Cyc.
    """
    if target in ("chordal", "c4free"):
        dele = set(catalog.simplicial) | catalog.cyc_set
    elif target == "cograph":
        dele = set(catalog.cyc_set)
    else:
        raise ValueError(f"unknown reduction target {target}")
    residual = tuple(x for x in range(G.order) if x not in dele)
    return ReductionPlan(target=target, delete=tuple(sorted(dele)),
                         residual=residual,
                         quotient_by_cyc=len(catalog.cyc) > 1)


def cyc_quotient(G: GroupHandle, catalog: MaxCyclicCatalog) -> tuple[GroupHandle, QuotientMap]:
    return quotient(G, list(catalog.cyc), name=f"{G.name}/Cyc")


PartitionOutcome = Optional[object]


def partition_by_cyclics(catalog: MaxCyclicCatalog):
    """'cyclic' | list of member sets (the partition M(G)) | None."""
    if catalog.is_cyclic_group:
        return "cyclic"
    ok = all(len(catalog.membership[x]) == 1
             for x in range(catalog.group.order) if x != 0)
    if not ok:
        return None
    return [sub.members for sub in catalog.subgroups]


def partition_equivalents(G: GroupHandle, catalog: MaxCyclicCatalog,
                          epg: EpgGraph) -> dict[str, bool]:
    """The partition-theorem conditions, each evaluated independently."""
    from . import graphs as ga

    n = G.order
    out: dict[str, bool] = {}
    out["diamond_free"] = ga.find_diamond(epg.graph) is None
    out["unique_maximal"] = all(len(catalog.membership[x]) == 1
                                for x in range(n) if x != 0)
    out["simplicial_cover"] = all(x in catalog.simplicial for x in range(n) if x != 0)
    out["partition"] = partition_by_cyclics(catalog) is not None
    out["block_graph"] = ga.is_block_graph(epg.graph)
    if catalog.is_cyclic_group:
        out["c_tidy"] = True
    else:
        out["c_tidy"] = len(catalog.cyc) == 1 and all(
            x in catalog.simplicial for x in range(n) if x not in catalog.cyc_set)
    # cyclic-transitive: in the graph minus the identity every vertex is simplicial
    ids = [v for v in range(epg.n) if epg.vertex_ids[v] != 0]
    sub, _ = epg.graph.induced_subgraph(ids)
    out["cyclic_transitive"] = ga.simplicial_vertices(sub) == sub.full_mask()
    return out


def is_eppo(G: GroupHandle) -> bool:
    return all(is_prime_power(o) for o in G.order_of if o > 1)


def clique_number(catalog: MaxCyclicCatalog) -> int:
    return catalog.omega


# ---------------------------------------------------------------------------
# witness validation against the structural lemmas


def validate_general_lemma(G: GroupHandle, catalog: MaxCyclicCatalog,
                           vertices: Sequence[int], kind: str) -> dict[str, bool]:
    """Clause checks for a verified induced path or cycle (length >= 4)."""
    xs = list(vertices)
    m = len(xs)
    if m < 4:
        raise ValueError("witness must have at least 4 vertices")
    if kind not in ("path", "cycle"):
        raise ValueError("kind must be path or cycle")

    def adjacent(x: int, y: int) -> bool:
        return two_generated_cyclic(G, x, y)[0]

    edges = [(i, (i + 1) % m) for i in range(m)] if kind == "cycle" else \
            [(i, i + 1) for i in range(m - 1)]
    edge_set = {frozenset(e) for e in edges}
    for i in range(m):
        for j in range(i + 1, m):
            want = frozenset((i, j)) in edge_set
            if adjacent(xs[i], xs[j]) != want:
                raise ValueError("vertices do not induce the claimed subgraph")

    report: dict[str, bool] = {}
    # (i) cyclic subgroups generated by distinct 2-subsets are distinct
    pair_subs = {}
    ok = True
    for i in range(m):
        for j in range(i + 1, m):
            cycq, _ = two_generated_cyclic(G, xs[i], xs[j])
            if cycq:
                members = tuple(subgroup_closure(G, [xs[i], xs[j]]))
                if members in pair_subs:
                    ok = False
                pair_subs[members] = (i, j)
    report["distinct_generated_pairs"] = ok
    # (ii) pairwise distinct <x_i>
    gens = [catalog.generated_by[x] for x in xs]
    report["distinct_cyclic_subgroups"] = len(set(gens)) == m
    # (iii) no vertex in Cyc(G)
    report["avoids_cycliciser"] = all(x not in catalog.cyc_set for x in xs)
    # (iv) simplicial vertices only at path extremes / none on a cycle
    if kind == "path":
        report["simplicial_at_extremes"] = all(
            xs[i] not in catalog.simplicial for i in range(1, m - 1))
    else:
        report["simplicial_at_extremes"] = all(x not in catalog.simplicial for x in xs)
    # (v) internal vertices in >= 2 maximal cyclic subgroups
    internal = range(1, m - 1) if kind == "path" else range(m)
    report["internal_in_two_maximals"] = all(
        len(catalog.membership[xs[i]]) >= 2 for i in internal)
    # (vi) internal edges outside the power graph
    internal_edges = edges[1:-1] if kind == "path" else edges
    def power_edge(x: int, y: int) -> bool:
        return y in set(G.cyclic_members(x)) or x in set(G.cyclic_members(y))
    report["internal_edges_not_power"] = all(
        not power_edge(xs[i], xs[j]) for i, j in internal_edges)
    # (vii) orders along internal edges do not divide one another
    ok = True
    for i, j in internal_edges:
        a, b = catalog.element_order[xs[i]], catalog.element_order[xs[j]]
        if a % b == 0 or b % a == 0:
            ok = False
    report["orders_nondividing"] = ok
    return report
