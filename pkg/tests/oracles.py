"""Brute-force oracles for small graphs: exhaustive induced-subgraph checks."""

import itertools

from epglab.graphs import DenseGraph


def random_graph(rng, n, p) -> DenseGraph:
    g = DenseGraph(n)
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                g.add_edge(u, v)
    return g


def has_induced_path4(g: DenseGraph) -> bool:
    want = {(0, 1), (1, 2), (2, 3)}
    for vs in itertools.combinations(range(g.n), 4):
        for perm in itertools.permutations(vs):
            if perm[0] > perm[3]:
                continue
            if all(g.has_edge(perm[i], perm[j]) == ((i, j) in want)
                   for i in range(4) for j in range(i + 1, 4)):
                return True
    return False


def has_induced_cycle(g: DenseGraph, length: int) -> bool:
    want = {(i, (i + 1) % length) for i in range(length)}
    want |= {(b, a) for a, b in want}
    for vs in itertools.combinations(range(g.n), length):
        for perm in itertools.permutations(vs[1:]):
            cyc = (vs[0],) + perm
            if all(g.has_edge(cyc[i], cyc[j]) == ((i, j) in want)
                   for i in range(length) for j in range(i + 1, length)):
                return True
    return False


def is_chordal_brute(g: DenseGraph) -> bool:
    """Dirac: chordal iff every induced subgraph has a simplicial vertex."""
    n = g.n
    for mask in range(1, 1 << n):
        vs = [v for v in range(n) if mask >> v & 1]
        found = False
        for v in vs:
            nbrs = [w for w in vs if w != v and g.has_edge(v, w)]
            if all(g.has_edge(a, b) for i, a in enumerate(nbrs)
                   for b in nbrs[i + 1:]):
                found = True
                break
        if not found:
            return False
    return True


def has_diamond_brute(g: DenseGraph) -> bool:
    for vs in itertools.combinations(range(g.n), 4):
        edges = sum(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2))
        if edges == 5:
            return True
    return False


def has_2k2_brute(g: DenseGraph) -> bool:
    for vs in itertools.combinations(range(g.n), 4):
        sub = [(a, b) for a, b in itertools.combinations(vs, 2) if g.has_edge(a, b)]
        if len(sub) == 2 and len({*sub[0], *sub[1]}) == 4:
            return True
    return False


def independence_brute(g: DenseGraph) -> int:
    for k in range(g.n, 0, -1):
        for vs in itertools.combinations(range(g.n), k):
            if all(not g.has_edge(a, b) for a, b in itertools.combinations(vs, 2)):
                return k
    return 0


def maximal_cliques_brute(g: DenseGraph) -> set:
    out = set()
    for k in range(1, g.n + 1):
        for vs in itertools.combinations(range(g.n), k):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(vs, 2)):
                if not any(all(g.has_edge(x, w) for x in vs)
                           for w in range(g.n) if w not in vs):
                    out.add(vs)
    return out


def blocks_brute(g: DenseGraph) -> set:
    """Maximal 2-connected vertex sets, by exhaustive subset check."""

    def connected(sub):
        sub = list(sub)
        if not sub:
            return False
        seen = {sub[0]}
        stack = [sub[0]]
        inside = set(sub)
        while stack:
            v = stack.pop()
            for w in inside:
                if w not in seen and g.has_edge(v, w):
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(sub)

    def two_connected(sub):
        if len(sub) < 2:
            return False
        if len(sub) == 2:
            return g.has_edge(*sub)
        return connected(sub) and all(connected(set(sub) - {v}) for v in sub)

    cands = set()
    for k in range(2, g.n + 1):
        for vs in itertools.combinations(range(g.n), k):
            if two_connected(vs):
                cands.add(frozenset(vs))
    return {c for c in cands if not any(c < d for d in cands)}
