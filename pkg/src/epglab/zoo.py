"""Constructors for the named finite groups used across the project.

Every constructor enumerates the group and checks the result against the
expected order; a mismatch aborts the build (OrderMismatch).  Sporadic groups
are loaded from checksummed permutation-generator data files shipped with the
package.  Ids are deterministic: generator lists are fixed in source and
closure is breadth-first.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from importlib import resources
from math import gcd, factorial

from .gf import FieldTable, field
from .groups import (
    DEFAULT_CAP,
    GroupError,
    GroupHandle,
    MatrixSpace,
    PermSpace,
    enumerate_group,
    subgroup_closure,
    two_generated_cyclic,
)


class UnknownSpec(GroupError):
    pass


class OrderMismatch(GroupError):
    """Constructed group order differs from the catalog's expected order."""


class UnsupportedQ(GroupError):
    pass


@dataclass
class WitnessElements:
    """Labeled element ids in a specific group, checked at construction."""

    group: GroupHandle
    labels: dict[str, int] = dataclass_field(default_factory=dict)

    def __getitem__(self, name: str) -> int:
        return self.labels[name]


def _gate(G: GroupHandle, expected: int, what: str) -> GroupHandle:
    if G.order != expected:
        raise OrderMismatch(f"{what}: built order {G.order}, expected {expected}")
    return G


# ---------------------------------------------------------------------------
# elementary constructors


def cyclic(n: int, cap: int = DEFAULT_CAP) -> GroupHandle:
    if n < 1:
        raise UnknownSpec("cyclic order must be >= 1")
    sp = PermSpace(n)
    gen = sp.pack([(i + 1) % n for i in range(n)])
    return _gate(enumerate_group(sp, [gen], cap=cap, name=f"C{n}"), n, f"C{n}")


def elementary_abelian(p: int, k: int, cap: int = DEFAULT_CAP) -> GroupHandle:
    if k < 1:
        raise UnknownSpec("exponent must be >= 1")
    sp = PermSpace(p * k)
    gens = []
    for i in range(k):
        images = list(range(p * k))
        for j in range(p):
            images[i * p + j] = i * p + (j + 1) % p
        gens.append(sp.pack(images))
    G = enumerate_group(sp, gens, cap=cap, name=f"E{p}^{k}")
    return _gate(G, p ** k, f"E{p}^{k}")


def dihedral(order: int, cap: int = DEFAULT_CAP) -> GroupHandle:
    """Dihedral group of the given (even) order; D(2n) notation."""
    if order < 2 or order % 2:
        raise UnknownSpec("dihedral order must be even and >= 2")
    n = order // 2
    if n == 1:
        G = cyclic(2, cap)
    elif n == 2:
        G = elementary_abelian(2, 2, cap)
    else:
        sp = PermSpace(n)
        rot = sp.pack([(i + 1) % n for i in range(n)])
        ref = sp.pack([(n - i) % n for i in range(n)])
        G = enumerate_group(sp, [rot, ref], cap=cap, name=f"D{order}")
    G.name = f"D{order}"
    return _gate(G, order, f"D{order}")


def quaternion8(cap: int = DEFAULT_CAP) -> GroupHandle:
    sp = MatrixSpace(2, field(3))
    i = sp.pack([[0, 2], [1, 0]])
    j = sp.pack([[1, 1], [1, 2]])
    return _gate(enumerate_group(sp, [i, j], cap=cap, name="Q8"), 8, "Q8")


def symmetric(n: int, cap: int = DEFAULT_CAP) -> GroupHandle:
    if n < 1:
        raise UnknownSpec("Sn needs n >= 1")
    sp = PermSpace(max(n, 1))
    if n == 1:
        return enumerate_group(sp, [sp.identity], cap=cap, name="S1")
    cyc = sp.pack([(i + 1) % n for i in range(n)])
    swap = sp.pack([1, 0] + list(range(2, n)))
    G = enumerate_group(sp, [cyc, swap], cap=cap, name=f"S{n}")
    return _gate(G, factorial(n), f"S{n}")


def alternating(n: int, cap: int = DEFAULT_CAP) -> GroupHandle:
    if n < 3:
        raise UnknownSpec("An needs n >= 3")
    sp = PermSpace(n)
    three = sp.pack([1, 2, 0] + list(range(3, n)))
    if n % 2:
        big = sp.pack([(i + 1) % n for i in range(n)])
    else:
        big = sp.pack([0] + [1 + (i + 1) % (n - 1) for i in range(n - 1)])
    G = enumerate_group(sp, [three, big], cap=cap, name=f"A{n}")
    return _gate(G, factorial(n) // 2, f"A{n}")


# ---------------------------------------------------------------------------
# matrix groups and projective actions


def sl_order(n: int, q: int) -> int:
    out = q ** (n * (n - 1) // 2)
    for i in range(2, n + 1):
        out *= q ** i - 1
    return out


def psl_order(n: int, q: int) -> int:
    return sl_order(n, q) // gcd(n, q - 1)


def psu3_order(q: int) -> int:
    return q ** 3 * (q ** 3 + 1) * (q ** 2 - 1) // gcd(3, q + 1)


def sz_order(q: int) -> int:
    return q * q * (q - 1) * (q * q + 1)


def _sl_generators(n: int, F: FieldTable) -> tuple[MatrixSpace, list[bytes]]:
    """Root-subgroup transvections I + w^k E(i,i+1) and I + w^k E(i+1,i)."""
    sp = MatrixSpace(n, F)
    gens = []
    for i in range(n - 1):
        for k in range(F.f):
            v = F.pow(F.generator, k) if F.q > 2 else 1
            for (r, c) in ((i, i + 1), (i + 1, i)):
                rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
                rows[r][c] = v
                gens.append(sp.pack(rows))
    return sp, gens


def special_linear(n: int, q: int, cap: int = DEFAULT_CAP) -> GroupHandle:
    F = field(*_pf(q))
    sp, gens = _sl_generators(n, F)
    G = enumerate_group(sp, gens, cap=cap, name=f"SL({n},{q})")
    return _gate(G, sl_order(n, q), f"SL({n},{q})")


def _pf(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            f = 0
            m = q
            while m % p == 0:
                m //= p
                f += 1
            if m != 1:
                raise UnknownSpec(f"{q} is not a prime power")
            return p, f
    raise UnknownSpec(f"{q} is not a prime power")


def projective_points(F: FieldTable, n: int) -> list[tuple[int, ...]]:
    """1-spaces of F^n as normalized tuples (first nonzero coordinate = 1)."""
    pts: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...]) -> None:
        if len(prefix) == n:
            nz = next((i for i, x in enumerate(prefix) if x), None)
            if nz is not None and prefix[nz] == 1:
                pts.append(prefix)
            return
        for v in range(F.q):
            rec(prefix + (v,))

    rec(())
    return pts


def _apply(F: FieldTable, n: int, M: bytes, v: tuple[int, ...]) -> tuple[int, ...]:
    out = []
    for i in range(n):
        acc = 0
        row = M[i * n : (i + 1) * n]
        for j in range(n):
            if row[j] and v[j]:
                acc = F.add(acc, F.mul(row[j], v[j]))
        out.append(acc)
    return tuple(out)


def _normalize(F: FieldTable, v: tuple[int, ...]) -> tuple[int, ...]:
    nz = next(i for i, x in enumerate(v) if x)
    if v[nz] == 1:
        return v
    c = F.inv(v[nz])
    return tuple(F.mul(c, x) for x in v)


class ProjectiveAction:
    """Action of n x n matrices over F on the projective points of F^n."""

    def __init__(self, F: FieldTable, n: int, points: list[tuple[int, ...]] | None = None):
        self.F = F
        self.n = n
        self.points = points if points is not None else projective_points(F, n)
        self.point_index = {p: i for i, p in enumerate(self.points)}
        self.space = PermSpace(len(self.points))

    def perm_of(self, M: bytes) -> bytes:
        F, n = self.F, self.n
        return self.space.pack(
            [self.point_index[_normalize(F, _apply(F, n, M, p))] for p in self.points]
        )


def projective_special_linear(n: int, q: int, cap: int = DEFAULT_CAP) -> GroupHandle:
    F = field(*_pf(q))
    _, gens = _sl_generators(n, F)
    act = ProjectiveAction(F, n)
    G = enumerate_group(act.space, [act.perm_of(g) for g in gens], cap=cap,
                        name=f"PSL({n},{q})")
    G.projective_action = act  # witness lookups need the same point order
    G.sl_generators = gens
    return _gate(G, psl_order(n, q), f"PSL({n},{q})")


def _su3_generators(q: int) -> tuple[FieldTable, list[bytes]]:
    """Generators of SU3(q) preserving the antidiagonal Gram form."""
    p, f = _pf(q)
    F = field(p, 2 * f)
    sp = MatrixSpace(3, F)
    w = F.generator

    def conj(x: int) -> int:
        return F.pow(x, q)

    def solve_beta(alpha: int) -> int:
        t = F.neg(F.pow(alpha, 1 + q))
        for b in range(F.q):
            if F.add(F.pow(b, q), b) == t:
                return b
        raise UnknownSpec("no beta for unitary unipotent")

    gens = []
    for k in range(F.f):
        alpha = F.pow(w, k)
        beta = solve_beta(alpha)
        gens.append(sp.pack([[1, alpha, beta], [0, 1, F.neg(conj(alpha))], [0, 0, 1]]))
    zeta = next(b for b in range(1, F.q) if F.add(F.pow(b, q), b) == 0)
    gens.append(sp.pack([[1, 0, zeta], [0, 1, 0], [0, 0, 1]]))
    gens.append(sp.pack([[F.pow(w, (-q) % (F.q - 1)), 0, 0],
                         [0, F.pow(w, q - 1), 0],
                         [0, 0, w]]))
    m1 = F.neg(1)
    if q % 2:
        gens.append(sp.pack([[0, 0, m1], [0, m1, 0], [m1, 0, 0]]))
    else:
        gens.append(sp.pack([[0, 0, 1], [0, 1, 0], [1, 0, 0]]))

    # unitary and determinant conditions, checked on every generator
    J = sp.pack([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    for g in gens:
        rows = sp.unpack(g)
        star = sp.pack([[conj(rows[j][i]) for j in range(3)] for i in range(3)])
        if sp.compose(sp.compose(star, J), g) != J:
            raise UnknownSpec("generator does not preserve the unitary form")
        if _det3(F, rows) != 1:
            raise UnknownSpec("generator determinant is not 1")
    return F, gens


def _det3(F: FieldTable, m: tuple[tuple[int, ...], ...]) -> int:
    pos = F.add(F.add(F.mul(F.mul(m[0][0], m[1][1]), m[2][2]),
                      F.mul(F.mul(m[0][1], m[1][2]), m[2][0])),
                F.mul(F.mul(m[0][2], m[1][0]), m[2][1]))
    neg = F.add(F.add(F.mul(F.mul(m[0][2], m[1][1]), m[2][0]),
                      F.mul(F.mul(m[0][0], m[1][2]), m[2][1])),
                F.mul(F.mul(m[0][1], m[1][0]), m[2][2]))
    return F.sub(pos, neg)


def projective_special_unitary3(q: int, cap: int = DEFAULT_CAP) -> GroupHandle:
    if q < 3:
        raise UnsupportedQ("PSU(3,q) needs q >= 3")
    F, gens = _su3_generators(q)
    act = ProjectiveAction(F, 3)
    G = enumerate_group(act.space, [act.perm_of(g) for g in gens], cap=cap,
                        name=f"PSU(3,{q})")
    return _gate(G, psu3_order(q), f"PSU(3,{q})")


def suzuki(q: int, cap: int = DEFAULT_CAP) -> GroupHandle:
    """Sz(q) for q = 2^(2m+1) >= 8, acting on its ovoid of q^2+1 points."""
    p, f = _pf(q)
    if p != 2 or f % 2 == 0 or q < 8:
        raise UnsupportedQ("Sz(q) needs q = 2^(2m+1) >= 8")
    m = (f - 1) // 2
    F = field(2, f)
    theta = 2 ** (m + 1)
    sp = MatrixSpace(4, F)

    def lower(a: int, b: int) -> bytes:
        ath = F.pow(a, theta)
        c = F.add(F.add(F.pow(a, 2 + theta), F.mul(a, b)), F.pow(b, theta))
        d = F.add(F.pow(a, 1 + theta), b)
        return sp.pack([[1, 0, 0, 0], [a, 1, 0, 0], [b, ath, 1, 0], [c, d, a, 1]])

    W = sp.pack([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
    gens = [lower(F.pow(F.generator, k), 0) for k in range(f)]
    gens += [lower(0, F.pow(F.generator, k)) for k in range(f)]
    gens.append(W)

    seed = (0, 0, 0, 1)
    seen = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for v in frontier:
            for g in gens:
                wv = _normalize(F, _apply(F, 4, g, v))
                if wv not in seen:
                    seen.add(wv)
                    nxt.append(wv)
        frontier = nxt
        if len(seen) > q * q + 1:
            raise OrderMismatch(f"Sz({q}): ovoid orbit exceeded {q*q+1} points")
    if len(seen) != q * q + 1:
        raise OrderMismatch(f"Sz({q}): ovoid has {len(seen)} points")
    act = ProjectiveAction(F, 4, points=sorted(seen))
    G = enumerate_group(act.space, [act.perm_of(g) for g in gens], cap=cap,
                        name=f"Sz({q})")
    return _gate(G, sz_order(q), f"Sz({q})")


# ---------------------------------------------------------------------------
# sporadic groups from embedded generator data


SPORADIC_ORDERS = {"M11": 7920, "M12": 95040, "M22": 443520, "J1": 175560}


def _load_manifest() -> dict[str, str]:
    out = {}
    text = resources.files("epglab").joinpath("data/MANIFEST").read_text()
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        digest, fname = line.split()[:2]
        out[fname] = digest
    return out


def _load_gens(name: str) -> tuple[int, list[list[int]]]:
    fname = f"{name}.gens"
    blob = resources.files("epglab").joinpath(f"data/{fname}").read_bytes()
    digest = hashlib.sha256(blob).hexdigest()
    want = _load_manifest().get(fname)
    if want is None:
        raise UnknownSpec(f"{fname} missing from data manifest")
    if digest != want:
        raise OrderMismatch(f"{fname}: checksum mismatch ({digest} != {want})")
    lines = [ln for ln in blob.decode().splitlines() if ln.strip() and not ln.startswith("#")]
    head = lines[0].split()
    if head[0] != "degree":
        raise UnknownSpec(f"{fname}: bad header")
    degree = int(head[1])
    gens = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise UnknownSpec(f"{fname}: line is not a permutation of degree {degree}")
    return degree, gens


def sporadic(name: str, cap: int = DEFAULT_CAP) -> GroupHandle:
    if name not in SPORADIC_ORDERS:
        raise UnknownSpec(f"unknown sporadic group {name}")
    degree, gens = _load_gens(name)
    sp = PermSpace(degree)
    G = enumerate_group(sp, [sp.pack(g) for g in gens], cap=cap, name=name)
    return _gate(G, SPORADIC_ORDERS[name], name)


# ---------------------------------------------------------------------------
# labeled witness constructions


def k_a7(cap: int = DEFAULT_CAP) -> tuple[GroupHandle, WitnessElements]:
    """The order-24 subgroup <a, x, y> of A7 with its labeled generators."""
    sp = PermSpace(7)
    a = sp.pack([0, 1, 2, 3, 5, 6, 4])          # (5 6 7) on 1-based points
    x = sp.pack([1, 2, 3, 0, 5, 4, 6])          # (1 2 3 4)(5 6)
    y = sp.pack([1, 0, 3, 2, 4, 5, 6])          # (1 2)(3 4)
    K = enumerate_group(sp, [a, x, y], cap=cap, name="K_A7")
    _gate(K, 24, "K_A7")
    wit = WitnessElements(group=K, labels={"a": K.index[a], "x": K.index[x], "y": K.index[y]})
    for label, order in (("a", 3), ("x", 4), ("y", 2)):
        if K.element_order(wit[label]) != order:
            raise OrderMismatch(f"K_A7 witness {label} has wrong order")
    return K, wit


def psl3_witnesses(q: int, cap: int = DEFAULT_CAP) -> tuple[GroupHandle, WitnessElements]:
    """PSL3(q) for odd q in {3, 5} with the labeled elements a, x, g, b = x^g.

    a is a transvection of order p, x the image of Diag(w, w^-2, w) of order
    (q-1)/gcd(3,q-1), g a unitriangular element of order p commuting with a,
    and b = g^-1 x g lies outside <a, x>.
    """
    if q not in (3, 5):
        raise UnsupportedQ("witness elements are built for q in {3, 5}")
    p, _ = _pf(q)
    F = field(p)
    G = projective_special_linear(3, q, cap=cap)
    act: ProjectiveAction = G.projective_action
    sp = MatrixSpace(3, F)
    w = F.generator
    a_m = sp.pack([[1, 0, 1], [0, 1, 0], [0, 0, 1]])
    x_m = sp.pack([[w, 0, 0], [0, F.pow(w, -2 % (F.q - 1)), 0], [0, 0, w]])
    g_m = sp.pack([[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    b_m = sp.compose(sp.compose(sp.invert(g_m), x_m), g_m)
    ids = {lbl: G.index[act.perm_of(m)] for lbl, m in
           (("a", a_m), ("x", x_m), ("g", g_m), ("b", b_m))}
    wit = WitnessElements(group=G, labels=ids)

    d = gcd(3, q - 1)
    if G.element_order(wit["x"]) != (q - 1) // d:
        raise OrderMismatch("witness x has wrong order")
    if G.element_order(wit["a"]) != p or G.element_order(wit["g"]) != p:
        raise OrderMismatch("witness a/g has wrong order")
    if not G.commutes(wit["a"], wit["x"]) or not G.commutes(wit["a"], wit["b"]):
        raise OrderMismatch("witness commutation failed")
    ok, gen = two_generated_cyclic(G, wit["a"], wit["x"])
    if not ok or G.element_order(gen) != p * (q - 1) // d:
        raise OrderMismatch("'<a,x>' is not cyclic of order p(q-1)/d")
    ax = set(subgroup_closure(G, [wit["a"], wit["x"]]))
    if wit["b"] in ax or wit["b"] == wit["x"]:
        raise OrderMismatch("witness b lies in <a,x>")
    ab = set(subgroup_closure(G, [wit["a"], wit["b"]]))
    if ax == ab:
        raise OrderMismatch("<a,x> equals <a,b>")
    return G, wit


# ---------------------------------------------------------------------------
# named catalog


@lru_cache(maxsize=64)
def build_named(name: str, args: tuple = (), cap: int = DEFAULT_CAP) -> GroupHandle:
    """Build a named group; results are cached per (name, args, cap)."""
    key = name.upper() if name.upper() in ("Q8", "M11", "M12", "M22", "J1") else name
    if key == "C":
        return cyclic(args[0], cap)
    if key == "E":
        return elementary_abelian(args[0], args[1], cap)
    if key == "D":
        return dihedral(args[0], cap)
    if key == "Q8":
        return quaternion8(cap)
    if key == "A":
        return alternating(args[0], cap)
    if key == "S":
        return symmetric(args[0], cap)
    if key == "SL":
        return special_linear(args[0], args[1], cap)
    if key == "PSL":
        return projective_special_linear(args[0], args[1], cap)
    if key == "PSU":
        if args[0] != 3:
            raise UnknownSpec("only PSU(3,q) is supported")
        return projective_special_unitary3(args[1], cap)
    if key == "Sz":
        return suzuki(args[0], cap)
    if key in SPORADIC_ORDERS:
        return sporadic(key, cap)
    if key == "K_A7":
        return k_a7(cap)[0]
    raise UnknownSpec(f"unknown group constructor {name}{args or ''}")
