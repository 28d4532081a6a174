"""Group-agnostic graph recognition with certificates.

DenseGraph stores one Python int per vertex as an adjacency bitset, which
keeps the recognizers simple and fast up to a few thousand vertices.  Every
recognizer returns a certificate (cotree, elimination ordering, block list)
or an explicit witness (induced P4 / hole / C4 / diamond), and witnesses are
re-verified against the adjacency matrix before being returned.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


class GraphTooLarge(ValueError):
    pass


DENSE_CAP = 20_000


def bits(x: int) -> Iterator[int]:
    while x:
        b = x & -x
        yield b.bit_length() - 1
        x ^= b


def popcount(x: int) -> int:
    return bin(x).count("1")


class DenseGraph:
    """Undirected graph on range(n) with bitset adjacency rows."""

    def __init__(self, n: int, cap: int = DENSE_CAP):
        if n > cap:
            raise GraphTooLarge(f"{n} vertices exceeds dense cap {cap}")
        self.n = n
        self.rows = [0] * n
        self.labels: dict[int, str] = {}
        self._closed: Optional[list[int]] = None

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            return
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u
        self._closed = None

    def add_clique(self, vs: Sequence[int]) -> None:
        mask = 0
        for v in vs:
            mask |= 1 << v
        for v in vs:
            self.rows[v] |= mask & ~(1 << v)
        self._closed = None

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    @property
    def closed_rows(self) -> list[int]:
        if self._closed is None:
            self._closed = [r | (1 << v) for v, r in enumerate(self.rows)]
        return self._closed

    def degree(self, v: int) -> int:
        return popcount(self.rows[v])

    def edge_count(self) -> int:
        return sum(popcount(r) for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.n):
            high = self.rows[u] >> (u + 1) << (u + 1)
            for v in bits(high):
                yield (u, v)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def induced_subgraph(self, vs: Sequence[int]) -> tuple["DenseGraph", list[int]]:
        """Subgraph on vs (kept order); returns (graph, original-vertex list)."""
        vs = list(vs)
        pos = {v: i for i, v in enumerate(vs)}
        g = DenseGraph(len(vs), cap=max(len(vs), 1))
        for i, v in enumerate(vs):
            row = 0
            for w in bits(self.rows[v]):
                j = pos.get(w)
                if j is not None:
                    row |= 1 << j
            g.rows[i] = row
        return g, vs

    def complement(self) -> "DenseGraph":
        g = DenseGraph(self.n, cap=max(self.n, 1))
        full = self.full_mask()
        for v in range(self.n):
            g.rows[v] = full & ~self.rows[v] & ~(1 << v)
        return g


def from_edges(n: int, edges: Sequence[tuple[int, int]]) -> DenseGraph:
    g = DenseGraph(n, cap=max(n, DENSE_CAP))
    for u, v in edges:
        g.add_edge(u, v)
    return g


# ---------------------------------------------------------------------------
# witnesses


@dataclass
class Witness:
    """Tagged induced-subgraph witness or structural certificate."""

    kind: str  # p4 | hole | c4 | diamond | ab | peo | cotree
    vertices: tuple[int, ...] = ()
    payload: object = None

    def __repr__(self) -> str:
        return f"Witness({self.kind}, {self.vertices})"


class InvalidWitness(ValueError):
    pass


def verify_witness(g: DenseGraph, w: Witness) -> bool:
    vs = w.vertices
    if len(set(vs)) != len(vs):
        return False
    if w.kind == "p4":
        if len(vs) != 4:
            return False
        want = {(0, 1), (1, 2), (2, 3)}
        return all(
            g.has_edge(vs[i], vs[j]) == ((i, j) in want)
            for i in range(4) for j in range(i + 1, 4)
        )
    if w.kind in ("hole", "c4"):
        k = len(vs)
        if k < 4 or (w.kind == "c4" and k != 4):
            return False
        want = {(i, (i + 1) % k) for i in range(k)}
        want |= {(b, a) for a, b in want}
        return all(
            g.has_edge(vs[i], vs[j]) == ((i, j) in want)
            for i in range(k) for j in range(i + 1, k)
        )
    if w.kind == "diamond":
        if len(vs) != 4:
            return False
        u, v, a, b = vs  # all edges present except {a, b}
        return (g.has_edge(u, v) and g.has_edge(u, a) and g.has_edge(u, b)
                and g.has_edge(v, a) and g.has_edge(v, b) and not g.has_edge(a, b))
    if w.kind == "peo":
        return verify_peo(g, list(vs))
    if w.kind == "cotree":
        return cotree_rebuild(w.payload, g.n) == g.rows
    raise InvalidWitness(f"unknown witness kind {w.kind}")


# ---------------------------------------------------------------------------
# cograph recognition (complement-connectivity recursion)


def _components(g: DenseGraph, mask: int) -> list[int]:
    comps = []
    rest = mask
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v] & mask & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rest &= ~comp
    return comps


def _co_components(g: DenseGraph, mask: int) -> list[int]:
    # components of the complement, without materializing it
    comps = []
    rest = mask
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        rest ^= start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                reach = rest & ~g.rows[v]
                nxt |= reach
                rest &= ~reach
            comp |= nxt
            frontier = nxt
        comps.append(comp)
    return comps


def _find_p4(g: DenseGraph, mask: int) -> Optional[tuple[int, int, int, int]]:
    """An induced P4 inside mask, scanning middle edges with private ends."""
    for b in bits(mask):
        row_b = g.rows[b] & mask
        for c in bits(row_b):
            a_side = row_b & ~g.rows[c] & ~(1 << c)
            if not a_side:
                continue
            d_side = g.rows[c] & mask & ~g.rows[b] & ~(1 << b)
            if not d_side:
                continue
            for a in bits(a_side):
                t = d_side & ~g.rows[a] & ~(1 << a)
                if t:
                    d = (t & -t).bit_length() - 1
                    return (a, b, c, d)
    return None


def is_cograph(g: DenseGraph) -> tuple[bool, Witness]:
    """Cotree on success; verified induced P4 on failure."""
    if g.n == 0:
        return True, Witness("cotree", payload=("union", []))

    def build(mask: int):
        if popcount(mask) == 1:
            return ("leaf", mask.bit_length() - 1)
        comps = _components(g, mask)
        if len(comps) > 1:
            subs = []
            for c in comps:
                sub = build(c)
                if isinstance(sub, Witness):
                    return sub
                subs.append(sub)
            return ("union", subs)
        cocomps = _co_components(g, mask)
        if len(cocomps) > 1:
            subs = []
            for c in cocomps:
                sub = build(c)
                if isinstance(sub, Witness):
                    return sub
                subs.append(sub)
            return ("join", subs)
        p4 = _find_p4(g, mask)
        if p4 is None:
            raise AssertionError("connected, co-connected graph must contain a P4")
        return Witness("p4", p4)

    out = build(g.full_mask())
    if isinstance(out, Witness):
        if not verify_witness(g, out):
            raise InvalidWitness(f"unverified P4 {out.vertices}")
        return False, out
    tree = Witness("cotree", payload=out)
    return True, tree


def cotree_rebuild(tree, n: int) -> list[int]:
    """Adjacency rows of the graph a cotree evaluates to."""
    rows = [0] * n

    def walk(node) -> int:
        kind = node[0]
        if kind == "leaf":
            return 1 << node[1]
        masks = [walk(ch) for ch in node[1]]
        total = 0
        for m in masks:
            total |= m
        if kind == "join":
            for i, m in enumerate(masks):
                others = total & ~m
                for v in bits(m):
                    rows[v] |= others
        return total

    walk(tree)
    return rows


# ---------------------------------------------------------------------------
# chordality (Lex-BFS + elimination check)


def lex_bfs(g: DenseGraph) -> list[int]:
    """Lexicographic BFS order, lowest vertex id first among ties."""
    order = []
    blocks = [g.full_mask()] if g.n else []
    while blocks:
        head = blocks[0]
        v = (head & -head).bit_length() - 1
        order.append(v)
        rest = head & ~(1 << v)
        new_blocks = []
        for b in ([rest] if rest else []) + blocks[1:]:
            hit = b & g.rows[v]
            miss = b & ~g.rows[v]
            if hit:
                new_blocks.append(hit)
            if miss:
                new_blocks.append(miss)
        blocks = new_blocks
    return order


def verify_peo(g: DenseGraph, order: Sequence[int]) -> bool:
    if sorted(order) != list(range(g.n)):
        return False
    return _peo_violation(g, list(order)) is None


def _peo_violation(g: DenseGraph, order: list[int]) -> Optional[tuple[int, int, int]]:
    """(v, u, w): u, w are later neighbors of v with u the earliest, u !~ w."""
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    masks_after = [0] * g.n
    later = 0
    for i in range(g.n - 1, -1, -1):
        masks_after[order[i]] = later
        later |= 1 << order[i]
    for v in order:
        succ = g.rows[v] & masks_after[v]
        if not succ:
            continue
        u = min(bits(succ), key=lambda x: pos[x])
        t = succ & ~(1 << u) & ~g.rows[u]
        if t:
            w = (t & -t).bit_length() - 1
            return (v, u, w)
    return None


def _hole_from_triple(g: DenseGraph, v: int, u: int, w: int) -> Optional[Witness]:
    """Induced cycle through v given u, w in N(v), u !~ w: shortest u-w path
    avoiding N[v] internally; a shortest path is induced, so the cycle is."""
    closed_v = g.closed_rows[v]
    allowed = g.full_mask() & ~closed_v | (1 << u) | (1 << w)
    prev = {u: None}
    frontier = [u]
    seen = 1 << u
    found = False
    while frontier and not found:
        nxt = []
        for x in frontier:
            for y in bits(g.rows[x] & allowed & ~seen):
                prev[y] = x
                seen |= 1 << y
                if y == w:
                    found = True
                    break
                nxt.append(y)
            if found:
                break
        frontier = nxt
    if not found:
        return None
    path = []
    cur: Optional[int] = w
    while cur is not None:
        path.append(cur)
        cur = prev[cur]
    path.append(v)  # cycle: u ... w v
    cand = Witness("hole", tuple(reversed(path)))
    # shortest paths are induced within `allowed`, but re-verify regardless
    return cand if verify_witness(g, cand) else None


def find_hole(g: DenseGraph) -> Optional[Witness]:
    """Some induced cycle of length >= 4, or None if chordal."""
    order = lex_bfs(g)
    peo = list(reversed(order))
    tri = _peo_violation(g, peo)
    if tri is None:
        return None
    hole = _hole_from_triple(g, *tri)
    if hole is not None:
        return hole
    # conservative fallback: search all (v, u, w) triples; must succeed when
    # the graph is not chordal
    for v in range(g.n):
        row = g.rows[v]
        for u in bits(row):
            t = row & ~g.rows[u] & ~(1 << u)
            t >>= u + 1
            t <<= u + 1
            for w in bits(t):
                hole = _hole_from_triple(g, v, u, w)
                if hole is not None:
                    return hole
    raise AssertionError("PEO violated but no hole found")


def is_chordal(g: DenseGraph) -> tuple[bool, Witness]:
    """Perfect elimination ordering on success, induced hole on failure."""
    order = lex_bfs(g)
    peo = list(reversed(order))
    if _peo_violation(g, peo) is None:
        return True, Witness("peo", tuple(peo))
    hole = find_hole(g)
    assert hole is not None
    return False, hole


# ---------------------------------------------------------------------------
# small forbidden subgraphs


def star_vertices(g: DenseGraph) -> int:
    full = g.full_mask()
    out = 0
    for v in range(g.n):
        if g.closed_rows[v] == full:
            out |= 1 << v
    return out


def simplicial_vertices(g: DenseGraph) -> int:
    """Bitmask of vertices whose closed neighborhood is a clique."""
    out = 0
    closed = g.closed_rows
    for v in range(g.n):
        ok = True
        for w in bits(g.rows[v]):
            if closed[v] & ~closed[w]:
                ok = False
                break
        if ok:
            out |= 1 << v
    return out


def _nonclique_pair(g: DenseGraph, mask: int) -> Optional[tuple[int, int]]:
    closed = g.closed_rows
    for w in bits(mask):
        t = mask & ~closed[w]
        if t:
            return w, (t & -t).bit_length() - 1
    return None


def has_induced_c4(g: DenseGraph) -> Optional[Witness]:
    """An induced 4-cycle, or None.

    Vertices on an induced C4 are neither simplicial nor star vertices, so
    the pair scan is restricted to the remaining candidates.
    """
    cands = g.full_mask() & ~simplicial_vertices(g) & ~star_vertices(g)
    cand_list = list(bits(cands))
    for i, u in enumerate(cand_list):
        row_u = g.rows[u]
        for v in cand_list[i + 1 :]:
            if row_u >> v & 1:
                continue
            common = row_u & g.rows[v] & cands
            if popcount(common) < 2:
                continue
            pair = _nonclique_pair(g, common)
            if pair:
                w, z = pair
                wit = Witness("c4", (u, w, v, z))
                if not verify_witness(g, wit):
                    raise InvalidWitness(f"bad C4 {wit.vertices}")
                return wit
    return None


def has_induced_c4_budget(g: DenseGraph, budget_seconds: float) -> tuple[str, Optional[Witness]]:
    """Induced-C4 scan with a wall-clock budget for large graphs.

    Returns ("done", witness-or-None) or ("timeout", None).  The pair scan is
    the same as has_induced_c4 but blocks of rows are prefiltered with numpy
    popcounts before any exact clique test runs.
    """
    import time

    import numpy as np

    t0 = time.monotonic()
    cands = g.full_mask() & ~simplicial_vertices(g) & ~star_vertices(g)
    cand_list = list(bits(cands))
    k = len(cand_list)
    if k < 4:
        return "done", None
    words = (g.n + 63) // 64
    nbytes = words * 8
    A = np.zeros((k, words), dtype=np.uint64)
    cand_pos = np.zeros(k, dtype=np.int64)
    for i, v in enumerate(cand_list):
        A[i] = np.frombuffer((g.rows[v] & cands).to_bytes(nbytes, "little"), dtype=np.uint64)
        cand_pos[i] = v
    block = max(1, min(256, 64_000_000 // max(1, k * words * 8)))
    closed = g.closed_rows
    for start in range(0, k, block):
        if time.monotonic() - t0 > budget_seconds:
            return "timeout", None
        stop = min(start + block, k)
        tail = A[start + 1 :]
        if tail.shape[0] == 0:
            break
        # common-neighbor counts of all pairs (u in block, v > u)
        for bi in range(start, stop):
            sub = A[bi + 1 :] & A[bi]
            cnt = np.bitwise_count(sub).sum(axis=1, dtype=np.int64)
            hits = np.nonzero(cnt >= 2)[0]
            if hits.size == 0:
                continue
            u = cand_list[bi]
            row_u = g.rows[u]
            for off in hits:
                v = cand_list[bi + 1 + int(off)]
                if row_u >> v & 1:
                    continue
                common = row_u & g.rows[v] & cands
                pair = _nonclique_pair(g, common)
                if pair:
                    w, z = pair
                    wit = Witness("c4", (u, w, v, z))
                    if not verify_witness(g, wit):
                        raise InvalidWitness(f"bad C4 {wit.vertices}")
                    return "done", wit
            if time.monotonic() - t0 > budget_seconds:
                return "timeout", None
    return "done", None


def find_diamond(g: DenseGraph) -> Optional[Witness]:
    """A diamond (K4 minus one edge), or None."""
    for u, v in g.edges():
        common = g.rows[u] & g.rows[v]
        if popcount(common) < 2:
            continue
        pair = _nonclique_pair(g, common)
        if pair:
            w, z = pair
            wit = Witness("diamond", (u, v, w, z))
            if not verify_witness(g, wit):
                raise InvalidWitness(f"bad diamond {wit.vertices}")
            return wit
    return None


def is_diamond_free(g: DenseGraph) -> tuple[bool, Optional[Witness]]:
    w = find_diamond(g)
    return (w is None), w


def has_2k2(g: DenseGraph) -> Optional[Witness]:
    """An induced 2K2 (two disjoint edges, no cross edges), or None."""
    edges = list(g.edges())
    for i, (a, b) in enumerate(edges):
        blocked = g.closed_rows[a] | g.closed_rows[b]
        for c, d in edges[i + 1 :]:
            if (blocked >> c & 1) or (blocked >> d & 1):
                continue
            return Witness("2k2", (a, b, c, d))
    return None


# ---------------------------------------------------------------------------
# blocks (biconnected components)


@dataclass
class BlockDecomposition:
    blocks: list[tuple[int, ...]]
    cut_vertices: tuple[int, ...]
    isolated: tuple[int, ...]


def blocks(g: DenseGraph) -> BlockDecomposition:
    """DFS lowpoint biconnected components; blocks as vertex tuples."""
    n = g.n
    num = [-1] * n
    low = [0] * n
    parent = [-1] * n
    out_blocks: list[tuple[int, ...]] = []
    cut = set()
    counter = 0
    edge_stack: list[tuple[int, int]] = []
    isolated = tuple(v for v in range(n) if not g.rows[v])

    for root in range(n):
        if num[root] >= 0 or not g.rows[root]:
            continue
        stack = [(root, iter(bits(g.rows[root])))]
        num[root] = low[root] = counter
        counter += 1
        root_children = 0
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if num[w] < 0:
                    parent[w] = v
                    edge_stack.append((v, w))
                    num[w] = low[w] = counter
                    counter += 1
                    stack.append((w, iter(bits(g.rows[w]))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                elif w != parent[v] and num[w] < num[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], num[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                u = stack[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= num[u]:
                    # u is a cut vertex (or root); pop one block
                    comp = set()
                    while edge_stack:
                        a, b = edge_stack[-1]
                        if num[a] >= num[v] or (a == u and b == v):
                            edge_stack.pop()
                            comp.add(a)
                            comp.add(b)
                            if (a, b) == (u, v):
                                break
                        else:
                            break
                    if comp:
                        out_blocks.append(tuple(sorted(comp)))
                    if u != root or root_children > 1:
                        cut.add(u)
    return BlockDecomposition(out_blocks, tuple(sorted(cut)), isolated)


def is_block_graph(g: DenseGraph) -> bool:
    """Every block induces a clique."""
    for blk in blocks(g).blocks:
        mask = 0
        for v in blk:
            mask |= 1 << v
        for v in blk:
            if mask & ~g.closed_rows[v]:
                return False
    return True


# ---------------------------------------------------------------------------
# threshold family


def is_quasi_threshold(g: DenseGraph) -> bool:
    """Edgewise nesting of closed neighborhoods."""
    closed = g.closed_rows
    for u, v in g.edges():
        a, b = closed[u], closed[v]
        ab = a | b
        if ab != a and ab != b:
            return False
    return True


def is_threshold(g: DenseGraph) -> bool:
    """Repeated removal of isolated or dominating vertices."""
    remaining = g.full_mask()
    k = g.n
    while k > 0:
        progress = False
        for v in bits(remaining):
            row = g.rows[v] & remaining
            if row == 0 or row == remaining & ~(1 << v):
                remaining &= ~(1 << v)
                k -= 1
                progress = True
                break
        if not progress:
            return False
    return True


# ---------------------------------------------------------------------------
# cliques, independence, twins


def maximal_cliques(g: DenseGraph) -> list[tuple[int, ...]]:
    """Bron-Kerbosch with pivoting; intended for validation-sized graphs."""
    if g.n > 2000:
        raise GraphTooLarge("maximal_cliques is capped at 2000 vertices")
    out: list[tuple[int, ...]] = []
    rows = g.rows

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(bits(r)))
            return
        pivot_pool = p | x
        pivot = max(bits(pivot_pool), key=lambda u: popcount(rows[u] & p))
        for v in bits(p & ~rows[pivot]):
            expand(r | (1 << v), p & rows[v], x & rows[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, g.full_mask(), 0)
    return sorted(out)


def independence_number(g: DenseGraph) -> int:
    """Exact maximum stable set size; branch and bound, n <= 64."""
    if g.n > 64:
        raise GraphTooLarge("independence_number is capped at 64 vertices")
    rows = g.rows
    best = 0

    def bb(mask: int, size: int) -> None:
        nonlocal best
        if size + popcount(mask) <= best:
            return
        if not mask:
            best = max(best, size)
            return
        # branch on a highest-degree-in-mask vertex
        v = max(bits(mask), key=lambda u: popcount(rows[u] & mask))
        bb(mask & ~(1 << v) & ~rows[v], size + 1)   # take v
        bb(mask & ~(1 << v), size)                  # skip v

    bb(g.full_mask(), 0)
    return best


def closed_twins(g: DenseGraph) -> list[tuple[int, int]]:
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.closed_rows[v], []).append(v)
    out = []
    for vs in groups.values():
        for i, a in enumerate(vs):
            for b in vs[i + 1 :]:
                out.append((a, b))
    return sorted(out)
