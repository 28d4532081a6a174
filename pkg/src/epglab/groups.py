"""Generic finite-group engine.

A group is enumerated once from generators by breadth-first closure and then
handled through integer element ids (0 = identity, ids in discovery order).
Backends supply the raw element representation: permutations of a fixed
degree (packed into bytes, 1 or 2 bytes per point) or square matrices over a
finite field (packed into bytes of field-element indices).  Element ids are
only meaningful within one GroupHandle.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass, field as dataclass_field
from math import gcd, lcm
from typing import Iterable, Optional, Sequence

from .gf import FieldTable


class GroupError(Exception):
    pass


class CapExceeded(GroupError):
    """Raised when a closure would exceed the enumeration cap."""


class MixedDegree(GroupError):
    """Raised when generators live in incompatible backends."""


class NotNormal(GroupError):
    pass


class CentralElementMismatch(GroupError):
    pass


DEFAULT_CAP = 1_000_000


class PermSpace:
    """Permutations of range(degree), packed as bytes.

    Composition is (a * b)(i) = a[b[i]] (apply b first).  Degrees above 255
    use two little-endian bytes per point.
    """

    def __init__(self, degree: int):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        self.wide = degree > 255
        if self.wide:
            self.identity = array("H", range(degree)).tobytes()
        else:
            self.identity = bytes(range(degree))

    def pack(self, images: Sequence[int]) -> bytes:
        if len(images) != self.degree or sorted(images) != list(range(self.degree)):
            raise ValueError("not a permutation of range(degree)")
        if self.wide:
            return array("H", images).tobytes()
        return bytes(images)

    def unpack(self, elem: bytes) -> tuple[int, ...]:
        if self.wide:
            return tuple(memoryview(elem).cast("H"))
        return tuple(elem)

    def compose(self, a: bytes, b: bytes) -> bytes:
        if self.wide:
            av = memoryview(a).cast("H")
            bv = memoryview(b).cast("H")
            return array("H", [av[x] for x in bv]).tobytes()
        return bytes(map(a.__getitem__, b))

    def invert(self, a: bytes) -> bytes:
        if self.wide:
            av = memoryview(a).cast("H")
            out = array("H", bytes(2 * self.degree))
            for i, v in enumerate(av):
                out[v] = i
            return out.tobytes()
        out = bytearray(self.degree)
        for i, v in enumerate(a):
            out[v] = i
        return bytes(out)

    def element_order(self, a: bytes) -> int:
        images = self.unpack(a)
        seen = bytearray(self.degree)
        result = 1
        for start in range(self.degree):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = 1
                j = images[j]
                length += 1
            result = lcm(result, length)
        return result

    def render(self, a: bytes) -> str:
        """Cycle notation on 1-based points; 'e' for the identity."""
        images = self.unpack(a)
        seen = bytearray(self.degree)
        parts = []
        for start in range(self.degree):
            if seen[start] or images[start] == start:
                seen[start] = 1
                continue
            cyc = []
            j = start
            while not seen[j]:
                seen[j] = 1
                cyc.append(j + 1)
                j = images[j]
            parts.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(parts) if parts else "e"

    def key(self) -> tuple:
        return ("perm", self.degree)


class MatrixSpace:
    """n x n matrices over GF(q), q <= 256, packed row-major into bytes."""

    def __init__(self, n: int, gf: FieldTable):
        if gf.q > 256:
            raise ValueError("matrix backend requires q <= 256")
        self.n = n
        self.gf = gf
        ident = bytearray(n * n)
        for i in range(n):
            ident[i * n + i] = 1
        self.identity = bytes(ident)

    def pack(self, rows: Sequence[Sequence[int]]) -> bytes:
        n = self.n
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix shape mismatch")
        return bytes(v for row in rows for v in row)

    def unpack(self, elem: bytes) -> tuple[tuple[int, ...], ...]:
        n = self.n
        return tuple(tuple(elem[i * n : (i + 1) * n]) for i in range(n))

    def compose(self, a: bytes, b: bytes) -> bytes:
        n, gf = self.n, self.gf
        mul, add = gf.mul, gf.add
        out = bytearray(n * n)
        for i in range(n):
            ai = a[i * n : (i + 1) * n]
            for j in range(n):
                acc = 0
                for k in range(n):
                    v = ai[k]
                    if v:
                        acc = add(acc, mul(v, b[k * n + j]))
                out[i * n + j] = acc
        return bytes(out)

    def invert(self, a: bytes) -> bytes:
        n, gf = self.n, self.gf
        aug = [list(a[i * n : (i + 1) * n]) + [1 if j == i else 0 for j in range(n)]
               for i in range(n)]
        for col in range(n):
            piv = next((r for r in range(col, n) if aug[r][col]), None)
            if piv is None:
                raise ValueError("singular matrix")
            aug[col], aug[piv] = aug[piv], aug[col]
            inv_p = gf.inv(aug[col][col])
            aug[col] = [gf.mul(inv_p, v) for v in aug[col]]
            for r in range(n):
                if r != col and aug[r][col]:
                    c = aug[r][col]
                    aug[r] = [gf.sub(aug[r][j], gf.mul(c, aug[col][j])) for j in range(2 * n)]
        return bytes(v for row in aug for v in row[n:])

    def element_order(self, a: bytes) -> int:
        k = 1
        cur = a
        while cur != self.identity:
            cur = self.compose(cur, a)
            k += 1
            if k > 10_000_000:
                raise GroupError("runaway element order")
        return k

    def render(self, a: bytes) -> str:
        rows = self.unpack(a)
        return "[" + "; ".join(" ".join(map(str, r)) for r in rows) + "]"

    def key(self) -> tuple:
        return ("mat", self.n, self.gf.p, self.gf.f)


Backend = PermSpace | MatrixSpace


@dataclass
class GroupHandle:
    """An enumerated finite group addressed by element ids."""

    space: Backend
    elements: list[bytes]
    index: dict[bytes, int]
    generator_ids: list[int]
    name: str = ""
    _orders: Optional[list[int]] = dataclass_field(default=None, repr=False)
    _inverses: Optional[list[int]] = dataclass_field(default=None, repr=False)

    @property
    def order(self) -> int:
        return len(self.elements)

    def compose(self, a: int, b: int) -> int:
        return self.index[self.space.compose(self.elements[a], self.elements[b])]

    def inverse(self, a: int) -> int:
        if self._inverses is not None and self._inverses[a] >= 0:
            return self._inverses[a]
        inv = self.index[self.space.invert(self.elements[a])]
        if self._inverses is None:
            self._inverses = [-1] * self.order
        self._inverses[a] = inv
        self._inverses[inv] = a
        return inv

    @property
    def inverse_of(self) -> list[int]:
        if self._inverses is None or any(v < 0 for v in self._inverses):
            self._inverses = [self.index[self.space.invert(e)] for e in self.elements]
        return self._inverses

    @property
    def order_of(self) -> list[int]:
        if self._orders is None:
            self._orders = self._compute_orders()
        return self._orders

    def _compute_orders(self) -> list[int]:
        if isinstance(self.space, PermSpace):
            return [self.space.element_order(e) for e in self.elements]
        # One power-walk per cyclic subgroup: |g^k| = |g| / gcd(|g|, k).
        orders = [0] * self.order
        orders[0] = 1
        for g in range(1, self.order):
            if orders[g]:
                continue
            chain = [g]
            cur = self.compose(g, g)
            while cur != 0:
                chain.append(cur)
                cur = self.compose(cur, g)
            o = len(chain) + 1
            for k, h in enumerate(chain, start=1):
                if not orders[h]:
                    orders[h] = o // gcd(o, k)
        return orders

    def element_order(self, g: int) -> int:
        if self._orders is not None:
            return self._orders[g]
        if isinstance(self.space, PermSpace):
            return self.space.element_order(self.elements[g])
        return self.order_of[g]

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inverse(g), -k
        result = 0
        base = g
        while k:
            if k & 1:
                result = self.compose(result, base)
            base = self.compose(base, base)
            k >>= 1
        return result

    def cyclic_members(self, g: int) -> list[int]:
        """Ids of <g> in power order: [1, g, g^2, ...]."""
        members = [0]
        cur = g
        while cur != 0:
            members.append(cur)
            cur = self.compose(cur, g)
        return members

    def commutes(self, x: int, y: int) -> bool:
        return self.compose(x, y) == self.compose(y, x)

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.compose(self.compose(self.inverse(g), x), g)

    def render(self, g: int) -> str:
        return self.space.render(self.elements[g])


def enumerate_group(
    space: Backend,
    generators: Iterable[bytes],
    cap: int = DEFAULT_CAP,
    name: str = "",
) -> GroupHandle:
    """Breadth-first closure of the generators; ids in discovery order."""
    gens = list(generators)
    if not gens:
        raise GroupError("need at least one generator")
    if cap < 1:
        raise GroupError("cap must be positive")
    elements = [space.identity]
    index = {space.identity: 0}
    frontier = [space.identity]
    while frontier:
        next_frontier = []
        for x in frontier:
            for g in gens:
                y = space.compose(x, g)
                if y not in index:
                    index[y] = len(elements)
                    elements.append(y)
                    if len(elements) > cap:
                        raise CapExceeded(f"closure exceeds cap {cap}")
                    next_frontier.append(y)
        frontier = next_frontier
    handle = GroupHandle(space=space, elements=elements, index=index,
                         generator_ids=[index[g] for g in gens], name=name)
    return handle


def check_compatible(space: Backend, raw: Sequence[bytes]) -> None:
    want = len(space.identity)
    for e in raw:
        if len(e) != want:
            raise MixedDegree("generators have mixed degree/dimension")


def element_order(G: GroupHandle, g: int) -> int:
    return G.element_order(g)


def commutes(G: GroupHandle, x: int, y: int) -> bool:
    return G.commutes(x, y)


def _generator_of_order(G: GroupHandle, x: int, y: int, target: int) -> int:
    """An element of order target=lcm(|x|,|y|) inside <x> <y> (x, y commuting)."""
    ox, oy = G.element_order(x), G.element_order(y)
    result = 0
    m = target
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            pe = d ** e
            src, o = (x, ox) if ox % pe == 0 else (y, oy)
            result = G.compose(result, G.power(src, o // pe))
        d += 1
    if m > 1:
        pe = m
        src, o = (x, ox) if ox % pe == 0 else (y, oy)
        result = G.compose(result, G.power(src, o // pe))
    return result


def two_generated_cyclic(G: GroupHandle, x: int, y: int) -> tuple[bool, Optional[int]]:
    """Decide whether <x, y> is cyclic; return a generator id when it is.

    For commuting x, y the subgroup <x><y> is abelian with exponent
    lcm(|x|,|y|) and order |x||y| / |<x> ∩ <y>|, so it is cyclic exactly when
    the intersection has size gcd(|x|,|y|).  Validated against the
    subgroup-closure oracle in the test suite.
    """
    if x == y:
        return True, x
    ox, oy = G.element_order(x), G.element_order(y)
    powx = set(G.cyclic_members(x))
    if y in powx:
        return True, x
    powy = set(G.cyclic_members(y))
    if x in powy:
        return True, y
    if not G.commutes(x, y):
        return False, None
    g, l = gcd(ox, oy), lcm(ox, oy)
    if g == 1:
        return True, G.compose(x, y)
    if len(powx & powy) == g:
        return True, _generator_of_order(G, x, y, l)
    return False, None


def subgroup_closure(G: GroupHandle, seeds: Sequence[int]) -> list[int]:
    """Smallest subgroup containing the seeds, as a sorted id list."""
    if not seeds:
        raise GroupError("seeds must be nonempty")
    members = {0}
    frontier = [0]
    seeds = list(dict.fromkeys(seeds))
    while frontier:
        nxt = []
        for x in frontier:
            for s in seeds:
                y = G.compose(x, s)
                if y not in members:
                    members.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(members)


def is_subgroup(G: GroupHandle, ids: Sequence[int]) -> bool:
    s = set(ids)
    if 0 not in s:
        return False
    return all(G.compose(a, b) in s for a in s for b in s)


def is_normal(G: GroupHandle, members: Sequence[int]) -> bool:
    s = set(members)
    for g in G.generator_ids:
        ginv = G.inverse(g)
        for x in s:
            if G.compose(G.compose(g, x), ginv) not in s:
                return False
    return True


class QuotientMap:
    """Projection id -> quotient id for quotient(G, N)."""

    def __init__(self, G: GroupHandle, Q: GroupHandle, coset_of: list[int], reps: list[int]):
        self._G = G
        self._Q = Q
        self._coset_of = coset_of
        self._reps = reps
        self._cache: dict[int, int] = {}

    def __call__(self, x: int) -> int:
        hit = self._cache.get(x)
        if hit is not None:
            return hit
        G, coset_of = self._G, self._coset_of
        images = [coset_of[G.compose(x, r)] for r in self._reps]
        qid = self._Q.index[self._Q.space.pack(images)]
        self._cache[x] = qid
        return qid


def quotient(G: GroupHandle, members: Sequence[int], cap: int = DEFAULT_CAP,
             name: str = "") -> tuple[GroupHandle, QuotientMap]:
    """G/N as the permutation action of G on the left cosets of N.

    The action on cosets is the regular representation of G/N, hence always
    faithful for the quotient even when G itself is not faithful there.
    """
    if not is_normal(G, members):
        raise NotNormal("subgroup is not normal")
    nset = set(members)
    coset_of = [-1] * G.order
    reps: list[int] = []
    for x in range(G.order):
        if coset_of[x] >= 0:
            continue
        c = len(reps)
        reps.append(x)
        for n in nset:
            coset_of[G.compose(x, n)] = c
    k = len(reps)
    space = PermSpace(k)
    gen_perms = []
    for g in G.generator_ids:
        gen_perms.append(space.pack([coset_of[G.compose(g, r)] for r in reps]))
    Q = enumerate_group(space, gen_perms, cap=cap, name=name or (G.name + "/N"))
    return Q, QuotientMap(G, Q, coset_of, reps)


def _as_perm_group(G: GroupHandle) -> tuple[PermSpace, list[bytes], list[int]]:
    """A faithful permutation realization of G with its generator images.

    Permutation-backed groups keep their natural domain; matrix-backed groups
    fall back to the regular action on element ids.
    """
    if isinstance(G.space, PermSpace):
        return G.space, [G.elements[g] for g in G.generator_ids], G.generator_ids
    space = PermSpace(G.order)
    gens = []
    for g in G.generator_ids:
        gens.append(space.pack([G.compose(g, x) for x in range(G.order)]))
    return space, gens, G.generator_ids


def direct_product(G1: GroupHandle, G2: GroupHandle, cap: int = DEFAULT_CAP,
                   name: str = "") -> GroupHandle:
    """G1 x G2 acting on the disjoint union of (permutation) domains."""
    s1, gens1, _ = _as_perm_group(G1)
    s2, gens2, _ = _as_perm_group(G2)
    d1, d2 = s1.degree, s2.degree
    space = PermSpace(d1 + d2)
    id1 = list(range(d1))
    id2 = list(range(d1, d1 + d2))
    gens = []
    for g in gens1:
        gens.append(space.pack([s1.unpack(g)[i] for i in range(d1)] + id2))
    for g in gens2:
        gens.append(space.pack(id1 + [d1 + v for v in s2.unpack(g)]))
    G = enumerate_group(space, gens, cap=cap, name=name or f"{G1.name} x {G2.name}")
    if G.order != G1.order * G2.order:
        raise GroupError("direct product order mismatch")
    return G


def embed_in_product(P: GroupHandle, G1: GroupHandle, G2: GroupHandle,
                     a: int, b: int) -> int:
    """Id in the direct product P of the pair (a in G1, b in G2)."""
    s1, _, _ = _as_perm_group(G1)
    s2, _, _ = _as_perm_group(G2)
    d1 = s1.degree

    def perm_of(G: GroupHandle, s: PermSpace, x: int) -> tuple[int, ...]:
        if isinstance(G.space, PermSpace):
            return G.space.unpack(G.elements[x])
        return tuple(G.compose(x, y) for y in range(G.order))

    images = list(perm_of(G1, s1, a)) + [d1 + v for v in perm_of(G2, s2, b)]
    return P.index[P.space.pack(images)]


def central_product(G1: GroupHandle, G2: GroupHandle, z1: int, z2: int,
                    cap: int = DEFAULT_CAP, name: str = "") -> GroupHandle:
    """(G1 x G2) / <(z1, z2^-1)> for central z_i of equal order."""
    if G1.element_order(z1) != G2.element_order(z2):
        raise CentralElementMismatch("central elements have different orders")
    for G, z in ((G1, z1), (G2, z2)):
        if any(not G.commutes(z, g) for g in G.generator_ids):
            raise CentralElementMismatch("element is not central")
    P = direct_product(G1, G2, cap=cap)
    zz = embed_in_product(P, G1, G2, z1, G2.inverse(z2))
    N = subgroup_closure(P, [zz])
    Q, _ = quotient(P, N, cap=cap, name=name or f"{G1.name} o {G2.name}")
    return Q
