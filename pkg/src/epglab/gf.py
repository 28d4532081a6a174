"""Finite field arithmetic GF(p^f) with integer-indexed elements.

Elements are indexed 0..q-1; index 0 is the zero element and index 1 is the
multiplicative identity.  For f > 1 the index encodes the coefficient vector
of the polynomial representative in base p, so index p is the class of x.
Each supported extension uses a fixed primitive polynomial, which makes
element indexing reproducible and makes x (= index p) a generator of the
multiplicative group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache


class UnsupportedField(ValueError):
    pass


MAX_FIELD_SIZE = 4096

# Smallest monic primitive polynomial per (p, f), encoded as sum(c_i * p^i)
# including the leading coefficient.  Generated once by exhaustive search;
# (2,2) -> 7 is x^2+x+1, (2,3) -> 11 is x^3+x+1, (3,2) -> 14 is x^2+x+2.
PRIMITIVE_POLY = {
    (2, 2): 7,
    (2, 3): 11,
    (2, 4): 19,
    (2, 5): 37,
    (2, 6): 67,
    (2, 7): 131,
    (2, 8): 285,
    (2, 9): 529,
    (2, 10): 1033,
    (2, 11): 2053,
    (2, 12): 4179,
    (3, 2): 14,
    (3, 3): 34,
    (3, 4): 86,
    (3, 5): 250,
    (3, 6): 734,
    (3, 7): 2203,
    (5, 2): 32,
    (5, 3): 142,
    (5, 4): 662,
    (5, 5): 3147,
    (7, 2): 59,
    (7, 3): 366,
    (7, 4): 2476,
    (11, 2): 139,
    (11, 3): 1346,
    (13, 2): 184,
    (13, 3): 2216,
    (17, 2): 309,
    (19, 2): 382,
    (23, 2): 559,
    (29, 2): 873,
    (31, 2): 1004,
    (37, 2): 1411,
    (41, 2): 1734,
    (43, 2): 1895,
    (47, 2): 2269,
    (53, 2): 2867,
    (59, 2): 3542,
    (61, 2): 3784,
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass
class FieldTable:
    """Arithmetic for GF(q), q = p^f, with log/exp tables for products."""

    p: int
    f: int
    q: int
    generator: int  # index of a generator w of the multiplicative group
    _exp: list[int] = field(repr=False, default_factory=list)
    _log: list[int] = field(repr=False, default_factory=list)

    def add(self, a: int, b: int) -> int:
        p = self.p
        if p == 2:
            return a ^ b
        if self.f == 1:
            return (a + b) % p
        out = 0
        shift = 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * shift
            shift *= p
        return out

    def neg(self, a: int) -> int:
        p = self.p
        if p == 2:
            return a
        if self.f == 1:
            return (-a) % p
        out = 0
        shift = 1
        while a:
            a, ra = divmod(a, p)
            out += ((-ra) % p) * shift
            shift *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in GF(q)")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError
            return 0
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        n = self.q - 1
        la = self._log[a]
        from math import gcd

        return n // gcd(la, n)

    def frobenius(self, a: int, k: int = 1) -> int:
        """a -> a^(p^k)."""
        return self.pow(a, self.p ** k)

    @property
    def add_table(self) -> list[list[int]]:
        return [[self.add(a, b) for b in range(self.q)] for a in range(self.q)]

    @property
    def mul_table(self) -> list[list[int]]:
        return [[self.mul(a, b) for b in range(self.q)] for a in range(self.q)]

    def elements(self) -> range:
        return range(self.q)


@lru_cache(maxsize=None)
def field(p: int, f: int = 1) -> FieldTable:
    """Build GF(p^f).  Supported for prime p and p^f <= 4096."""
    if not _is_prime(p):
        raise UnsupportedField(f"{p} is not prime")
    if f < 1:
        raise UnsupportedField("degree must be >= 1")
    q = p ** f
    if q > MAX_FIELD_SIZE:
        raise UnsupportedField(f"GF({q}) exceeds supported size {MAX_FIELD_SIZE}")

    if f == 1:
        # find the smallest primitive root mod p
        def order_ok(g: int) -> bool:
            n, m = p - 1, p - 1
            facs = set()
            d = 2
            while d * d <= m:
                while m % d == 0:
                    facs.add(d)
                    m //= d
                d += 1
            if m > 1:
                facs.add(m)
            return all(pow(g, n // r, p) != 1 for r in facs)

        w = 1 if p == 2 else next(g for g in range(2, p) if order_ok(g))
        ft = FieldTable(p=p, f=1, q=p, generator=w)
        exp = [1] * (p - 1)
        for i in range(1, p - 1):
            exp[i] = exp[i - 1] * w % p
        log = [0] * p
        for i, v in enumerate(exp):
            log[v] = i
        ft._exp, ft._log = exp, log
        return ft

    code = PRIMITIVE_POLY.get((p, f))
    if code is None:
        raise UnsupportedField(f"no fixed polynomial for GF({p}^{f})")

    # x^f = -(low part of the modulus), as a coefficient vector
    mod = []
    c = code
    while c:
        c, r = divmod(c, p)
        mod.append(r)
    red = [(-v) % p for v in mod[:f]]

    def mul_by_x(idx: int) -> int:
        vec = []
        v = idx
        for _ in range(f):
            v, r = divmod(v, p)
            vec.append(r)
        hi = vec[f - 1]
        nv = [0] + vec[: f - 1]
        if hi:
            nv = [(nv[i] + hi * red[i]) % p for i in range(f)]
        out = 0
        for coef in reversed(nv):
            out = out * p + coef
        return out

    exp = [0] * (q - 1)
    exp[0] = 1
    for i in range(1, q - 1):
        exp[i] = mul_by_x(exp[i - 1])
    log = [0] * q
    seen = 0
    for i, v in enumerate(exp):
        log[v] = i
        seen += 1
    if len(set(exp)) != q - 1:
        raise UnsupportedField(f"polynomial for GF({p}^{f}) is not primitive")
    ft = FieldTable(p=p, f=f, q=q, generator=p)  # x itself generates
    ft._exp, ft._log = exp, log
    return ft
