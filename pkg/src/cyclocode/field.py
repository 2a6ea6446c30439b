"""Finite field arithmetic over GF(p^e) with log/antilog tables.

Elements are plain integers: the coefficient vector (c_0, ..., c_{e-1}) of
the polynomial-basis representation packed as ``sum(c_i * p**i)``.  In
characteristic 2 this is the usual bitmask.  The prime subfield is therefore
the set of integers ``0 .. p-1`` in every field.

Subfields are handled by :class:`TowerView`, which embeds GF(q) into GF(q^m)
without introducing a second element representation.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd, isqrt
from typing import Sequence

import numpy as np

from .errors import (
    FieldMismatch,
    FieldTooLarge,
    NotIrreducible,
    NotMonic,
    NotPrime,
    SubfieldViolation,
    ZeroToNegativePower,
)

TABLE_LIMIT = 1 << 22


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


# --------------------------------------------------------------------------
# Dense polynomials over GF(p) as ascending coefficient lists.  Only used
# during field construction, so clarity beats speed here.
# --------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmulmod(a, b, f, p) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _ppowmod(base, k: int, f, p) -> list[int]:
    result = [1]
    base = _pmod(base, f, p)
    while k:
        if k & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        k >>= 1
    return _pmod(result, f, p)


def _pgcd(a, b, p) -> list[int]:
    a = _trim([c % p for c in a])
    b = _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _psub(a, b, p) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def is_irreducible(p: int, poly: Sequence[int]) -> bool:
    """Rabin's test for a monic polynomial over GF(p) (ascending coefficients)."""
    f = _trim([c % p for c in poly])
    e = len(f) - 1
    if e < 1:
        return False
    if e == 1:
        return True
    x = [0, 1]
    for r in prime_factors(e):
        h = _psub(_ppowmod(x, p ** (e // r), f, p), x, p)
        if len(_pgcd(f, h, p)) != 1:
            return False
    return _psub(_ppowmod(x, p**e, f, p), x, p) == []


def is_primitive(p: int, poly: Sequence[int]) -> bool:
    """True when ``poly`` is irreducible and x generates the multiplicative group."""
    if not is_irreducible(p, poly):
        return False
    f = [c % p for c in poly]
    n = p ** (len(f) - 1) - 1
    if len(f) == 2:
        root = (-f[0] * pow(f[1], -1, p)) % p
        return root != 0 and all(pow(root, n // r, p) != 1 for r in prime_factors(n))
    return all(_ppowmod([0, 1], n // r, f, p) != [1] for r in prime_factors(n))


def default_defining_poly(p: int, e: int) -> list[int]:
    """Least primitive polynomial of degree ``e`` over GF(p).

    Candidates x^e + c_{e-1} x^{e-1} + ... + c_0 are scanned in increasing
    order of the integer ``sum(c_i * p**i)``; the first primitive one wins.
    Returned ascending, monic.
    """
    if not is_prime(p):
        raise NotPrime(p)
    if e < 1:
        raise ValueError("degree must be >= 1")
    for code in range(1, p**e):
        coeffs = [(code // p**i) % p for i in range(e)] + [1]
        if coeffs[0] == 0:
            continue
        if is_primitive(p, coeffs):
            return coeffs
    raise AssertionError("no primitive polynomial found")  # unreachable


class Field:
    """GF(p^e) built from a monic irreducible polynomial over GF(p)."""

    def __init__(self, p: int, poly: Sequence[int]):
        if not is_prime(p):
            raise NotPrime(p)
        poly = [int(c) for c in poly]
        if any(not 0 <= c < p for c in poly):
            raise ValueError(f"coefficients must lie in [0, {p})")
        _trim(poly)
        if len(poly) < 2:
            raise NotIrreducible("defining polynomial must have degree >= 1")
        if poly[-1] != 1:
            raise NotMonic(poly)
        if not is_irreducible(p, poly):
            raise NotIrreducible(poly)

        self.p = p
        self.degree = len(poly) - 1
        self.poly = tuple(poly)
        self.order = p**self.degree
        self.n = self.order - 1
        self._digits = [p**i for i in range(self.degree)]
        # x^e expressed in lower powers: x^e = -(c_0 + ... + c_{e-1} x^{e-1})
        self._reduce_row = [(-c) % p for c in poly[:-1]]
        self._poly_mask = sum(c << i for i, c in enumerate(poly[:-1])) if p == 2 else 0
        self._add_table = None
        if p != 2 and self.degree > 1 and self.order <= 256:
            self._add_table = [
                [self._add_digits(a, b) for b in range(self.order)] for a in range(self.order)
            ]

        x = 1 if self.degree == 1 and p == 2 else (p if self.degree > 1 else None)
        if self.degree == 1:
            alpha_candidate = (-poly[0]) % p
        else:
            alpha_candidate = x
        if self._has_order_n(alpha_candidate):
            self.alpha = alpha_candidate
            self.x_is_primitive = True
        else:
            self.alpha = self._find_generator()
            self.x_is_primitive = False

        self.has_tables = self.order <= TABLE_LIMIT
        if self.has_tables:
            self._build_tables()

    # ------------------------------------------------------------------
    # construction helpers
    # ------------------------------------------------------------------
    def _has_order_n(self, a: int) -> bool:
        if a == 0:
            return False
        if self.n == 1:
            return a == 1
        return all(self._pow_slow(a, self.n // r) != 1 for r in prime_factors(self.n))

    def _find_generator(self) -> int:
        for a in range(1, self.order):
            if self._has_order_n(a):
                return a
        raise AssertionError("multiplicative group has no generator")  # unreachable

    def _build_tables(self):
        n = self.n
        exp = [0] * (2 * n + 1)
        log = [-1] * self.order
        v = 1
        step = self._mulx if (self.degree > 1 and self.alpha == self.p) else None
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = step(v) if step else self._mul_slow(v, self.alpha)
        if v != 1:
            raise AssertionError("alpha does not have full order")
        for i in range(n, 2 * n + 1):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log
        self.exp_np = np.array(exp, dtype=np.int64)
        log_np = np.array(log, dtype=np.int64)
        log_np[0] = 0
        self.log_np = log_np

    def _mulx(self, v: int) -> int:
        p, e = self.p, self.degree
        if p == 2:
            v <<= 1
            if v >> e:
                v ^= (1 << e) | self._poly_mask
            return v
        top = v // self._digits[-1]
        v = (v % self._digits[-1]) * p
        if top:
            v = self._add_digits(v, sum((top * r % p) * d for r, d in zip(self._reduce_row, self._digits)))
        return v

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        out = 0
        for d in self._digits:
            out += ((a // d + b // d) % p) * d
        return out

    def _mul_slow(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            e = self.degree
            res = 0
            while b:
                if b & 1:
                    res ^= a
                b >>= 1
                a <<= 1
                if a >> e:
                    a ^= (1 << e) | self._poly_mask
            return res
        prod = _pmulmod(self.to_coeffs(a), self.to_coeffs(b), list(self.poly), self.p)
        return self.from_coeffs(prod)

    def _pow_slow(self, a: int, k: int) -> int:
        result = 1
        while k:
            if k & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            k >>= 1
        return result

    # ------------------------------------------------------------------
    # representation
    # ------------------------------------------------------------------
    def to_coeffs(self, a: int) -> list[int]:
        return [(a // d) % self.p for d in self._digits]

    def from_coeffs(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.degree:
            coeffs = _pmod(list(coeffs), list(self.poly), self.p)
        return sum((int(c) % self.p) * d for c, d in zip(coeffs, self._digits))

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, (list, tuple)):
            value = self.from_coeffs(value)
        value = int(value)
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element of GF({self.order})")
        return FieldElement(self, value)

    def __repr__(self):
        return f"Field(p={self.p}, poly={list(self.poly)})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.poly, self.alpha) == (other.p, other.poly, other.alpha)

    def __hash__(self):
        return hash((self.p, self.poly, self.alpha))

    @property
    def gen(self) -> "FieldElement":
        return FieldElement(self, self.alpha)

    # ------------------------------------------------------------------
    # scalar arithmetic on integer representations
    # ------------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.degree == 1:
            return (a + b) % self.p
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.degree == 1:
            return -a % self.p
        p = self.p
        return sum(((-(a // d)) % p) * d for d in self._digits)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.has_tables:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.has_tables:
            return self._exp[(self.n - self._log[a]) % self.n]
        return self._pow_slow(a, self.n - 1)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k < 0:
                raise ZeroToNegativePower("0 raised to a negative power")
            return 1 if k == 0 else 0
        if self.has_tables:
            return self._exp[(self._log[a] * k) % self.n]
        return self._pow_slow(a, k % self.n)

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no discrete logarithm")
        if self.has_tables:
            return self._log[a]
        raise FieldTooLarge("discrete log needs tables")

    def exp(self, k: int) -> int:
        """alpha^k."""
        if self.has_tables:
            return self._exp[k % self.n]
        return self._pow_slow(self.alpha, k % self.n)

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p ** (times % self.degree) if self.degree else 1)

    # ------------------------------------------------------------------
    # vectorised arithmetic on numpy int64 arrays
    # ------------------------------------------------------------------
    def _need_tables(self):
        if not self.has_tables:
            raise FieldTooLarge(f"vector arithmetic needs log tables (order <= {TABLE_LIMIT})")

    def vadd(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.p == 2:
            return a ^ b
        if self.degree == 1:
            return (a + b) % self.p
        p = self.p
        out = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        for d in self._digits:
            out += ((a // d + b // d) % p) * d
        return out

    def vneg(self, a):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return a.copy()
        if self.degree == 1:
            return (-a) % self.p
        p = self.p
        out = np.zeros_like(a)
        for d in self._digits:
            out += ((-(a // d)) % p) * d
        return out

    def vsub(self, a, b):
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self.exp_np[self.log_np[a] + self.log_np[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def vpow(self, a, k: int):
        self._need_tables()
        a = np.asarray(a, dtype=np.int64)
        if k == 0:
            return np.ones_like(a)
        if k < 0 and np.any(a == 0):
            raise ZeroToNegativePower("0 raised to a negative power")
        res = self.exp_np[(self.log_np[a] * (k % self.n)) % self.n]
        return np.where(a == 0, 0, res)

    def vexp(self, k):
        """alpha^k elementwise."""
        self._need_tables()
        return self.exp_np[np.asarray(k, dtype=np.int64) % self.n]

    def vsum(self, a) -> int:
        a = np.asarray(a, dtype=np.int64)
        if a.size == 0:
            return 0
        if self.p == 2:
            return int(np.bitwise_xor.reduce(a))
        if self.degree == 1:
            return int(a.sum() % self.p)
        return int(sum(((a // d).sum() % self.p) * d for d in self._digits) if a.size else 0)

    def vsum_axis(self, a, axis: int):
        a = np.asarray(a, dtype=np.int64)
        if self.p == 2:
            return np.bitwise_xor.reduce(a, axis=axis)
        if self.degree == 1:
            return a.sum(axis=axis) % self.p
        return sum(((a // d) % self.p).sum(axis=axis) % self.p * d for d in self._digits)

    def trace_to_prime(self, a: int) -> int:
        """Absolute trace GF(p^e) -> GF(p)."""
        t = 0
        x = a
        for _ in range(self.degree):
            t = self.add(t, x)
            x = self.pow(x, self.p)
        return t

    def element_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("zero has no multiplicative order")
        if self.has_tables:
            return self.n // gcd(self.n, self._log[a])
        k = self.n
        for r in prime_factors(self.n):
            while k % r == 0 and self._pow_slow(a, k // r) == 1:
                k //= r
        return k


class FieldElement:
    """An element of a :class:`Field` with operator overloading."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        self.field = field
        self.value = value

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("operands belong to different fields")
            return other.value
        if isinstance(other, int):
            if not 0 <= other < self.field.p:
                other %= self.field.p
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.sub(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.field, self.field.div(self.value, o))

    def __pow__(self, k: int):
        return pow_cycle(self, k)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.order, self.value))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"GF({self.field.order})<{self.value}>"

    def __int__(self):
        return self.value

    @property
    def coeffs(self) -> list[int]:
        return self.field.to_coeffs(self.value)

    @property
    def log(self) -> int | None:
        return None if self.value == 0 else self.field.log(self.value)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))


def build_field(p: int, defining_poly: Sequence[int]) -> Field:
    """Construct GF(p^e) from a monic irreducible polynomial (ascending coefficients)."""
    return Field(p, defining_poly)


def pow_cycle(a: FieldElement, k: int) -> FieldElement:
    """a^k with the exponent reduced modulo the multiplicative group order."""
    return FieldElement(a.field, a.field.pow(a.value, k))


@dataclass
class TowerView:
    """GF(q) sitting inside GF(q^m) as the fixed field of x -> x^q.

    ``embed[i]`` is the big-field integer of small-field element ``i``.
    """

    big: Field
    small: Field
    m: int
    embed: list[int]
    _back: dict = dc_field(default_factory=dict, repr=False)
    _lookup: np.ndarray | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        self._back = {b: i for i, b in enumerate(self.embed)}

    @property
    def q(self) -> int:
        return self.small.order

    @property
    def n(self) -> int:
        return self.big.n

    @property
    def s(self) -> int:
        return self.small.degree

    @property
    def p(self) -> int:
        return self.big.p

    def to_small(self, b: int) -> int:
        try:
            return self._back[b]
        except KeyError:
            raise SubfieldViolation(f"{b} does not lie in GF({self.q})") from None

    def to_big(self, a: int) -> int:
        return self.embed[a]

    def lookup(self) -> np.ndarray:
        """Array mapping every big-field integer to its small index (or -1)."""
        if self._lookup is None:
            arr = np.full(self.big.order, -1, dtype=np.int64)
            arr[np.array(self.embed, dtype=np.int64)] = np.arange(self.q, dtype=np.int64)
            self._lookup = arr
        return self._lookup

    def vto_small(self, b) -> np.ndarray:
        out = self.lookup()[np.asarray(b, dtype=np.int64)]
        if np.any(out < 0):
            raise SubfieldViolation("value outside the base subfield")
        return out

    def trace(self, a: int) -> int:
        """Relative trace GF(q^m) -> GF(q) on big-field integers; result is a big-field integer."""
        big, q = self.big, self.q
        t = 0
        x = a
        for _ in range(self.m):
            t = big.add(t, x)
            x = big.pow(x, q)
        return t

    def vtrace(self, a) -> np.ndarray:
        big, q = self.big, self.q
        a = np.asarray(a, dtype=np.int64)
        t = np.zeros_like(a)
        x = a
        for _ in range(self.m):
            t = big.vadd(t, x)
            x = big.vpow(x, q)
        return t

    def check_embedding(self, samples: int = 200, seed: int = 0) -> bool:
        """Spot-check that ``embed`` is a ring homomorphism onto the Frobenius-fixed set."""
        rng = np.random.default_rng(seed)
        big, small = self.big, self.small
        image = set(self.embed)
        if len(image) != self.q:
            return False
        if any(big.pow(b, self.q) != b for b in self.embed):
            return False
        for _ in range(samples):
            a, b = (int(v) for v in rng.integers(0, self.q, size=2))
            if self.embed[small.add(a, b)] != big.add(self.embed[a], self.embed[b]):
                return False
            if self.embed[small.mul(a, b)] != big.mul(self.embed[a], self.embed[b]):
                return False
        return True

    @property
    def w(self) -> int:
        """Big-field image of the small field's primitive element."""
        return self.embed[self.small.alpha]


def trace_rel(tower: TowerView, a: FieldElement) -> FieldElement:
    """Tr_{q^m/q}(a) returned as an element of the base field GF(q)."""
    if a.field is not tower.big and a.field != tower.big:
        raise FieldMismatch("element is not in the extension field of this tower")
    return FieldElement(tower.small, tower.to_small(tower.trace(a.value)))


def _embedding_from_root(small: Field, big: Field, root: int) -> list[int]:
    embed = []
    for a in range(small.order):
        acc = 0
        for c in reversed(small.to_coeffs(a)):
            acc = big.add(big.mul(acc, root), c)
        embed.append(acc)
    return embed


def _subfield_roots(big: Field, poly: Sequence[int], q: int) -> list[int]:
    """Roots in GF(q) subset GF(big) of a polynomial over GF(p), in increasing log order."""
    step = big.n // (q - 1)
    roots = []
    for j in range(q - 1):
        r = big.exp(j * step)
        acc = 0
        for c in reversed(poly):
            acc = big.add(big.mul(acc, r), c)
        if acc == 0:
            roots.append(r)
    return roots


def _minpoly_over_prime(big: Field, a: int) -> list[int]:
    conj = [a]
    x = big.pow(a, big.p)
    while x != a:
        conj.append(x)
        x = big.pow(x, big.p)
    poly = [1]
    for r in conj:
        nr = big.neg(r)
        nxt = [0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i + 1] = big.add(nxt[i + 1], c)
            nxt[i] = big.add(nxt[i], big.mul(c, nr))
        poly = nxt
    if any(c >= big.p for c in poly):
        raise SubfieldViolation("minimal polynomial escaped the prime field")
    return poly


def _ext_minpoly_over_prime(small: Field, ext_poly: Sequence[int], p: int) -> list[int]:
    """Minimal polynomial over GF(p) of the class of y in GF(q)[y]/(ext_poly)."""
    F = [int(c) for c in ext_poly]
    m = len(F) - 1

    def mul(u, v):
        prod = [0] * (2 * m - 1)
        for i, a in enumerate(u):
            if a:
                for j, b in enumerate(v):
                    if b:
                        prod[i + j] = small.add(prod[i + j], small.mul(a, b))
        for k in range(len(prod) - 1, m - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for i in range(m):
                    prod[k - m + i] = small.sub(prod[k - m + i], small.mul(c, F[i]))
        return prod[:m]

    def power(u, k):
        out = [1] + [0] * (m - 1)
        while k:
            if k & 1:
                out = mul(out, u)
            u = mul(u, u)
            k >>= 1
        return out

    y = [0, 1] + [0] * (m - 2) if m > 1 else [small.neg(F[0])]
    conj = [y]
    x = power(y, p)
    while x != y:
        conj.append(x)
        if len(conj) > small.degree * m:
            break
        x = power(x, p)
    if len(conj) != small.degree * m:
        raise NotIrreducible("extension polynomial is not irreducible over GF(q)")
    poly = [[1] + [0] * (m - 1)]
    for r in conj:
        nr = [small.neg(c) for c in r]
        nxt = [[0] * m for _ in range(len(poly) + 1)]
        for i, c in enumerate(poly):
            nxt[i + 1] = [small.add(u, v) for u, v in zip(nxt[i + 1], c)]
            nxt[i] = [small.add(u, v) for u, v in zip(nxt[i], mul(c, nr))]
        poly = nxt
    out = []
    for c in poly:
        if any(c[1:]) or c[0] >= p:
            raise SubfieldViolation("minimal polynomial escaped the prime field")
        out.append(c[0])
    return out


def prime_field(p: int) -> Field:
    return Field(p, default_defining_poly(p, 1))


def build_tower(
    p: int,
    s: int,
    m: int,
    base_poly: Sequence[int] | None = None,
    ext_poly: Sequence[int] | None = None,
) -> TowerView:
    """Build GF(q^m) over GF(q), q = p^s.

    ``base_poly`` defines GF(q) over GF(p).  ``ext_poly`` defines GF(q^m):
    over GF(p) when s == 1, otherwise over GF(q) with coefficients given as
    GF(q) integers.  Omitted polynomials resolve to :func:`default_defining_poly`;
    for s > 1 without ``base_poly``, GF(q) is generated by alpha^((q^m-1)/(q-1)).
    """
    if not is_prime(p):
        raise NotPrime(p)
    if s < 1 or m < 1:
        raise ValueError("s and m must be positive")
    if s == 1:
        small = prime_field(p) if base_poly is None else Field(p, base_poly)
        if small.degree != 1:
            raise ValueError("base polynomial must have degree s")
        big = Field(p, ext_poly if ext_poly is not None else default_defining_poly(p, m))
        if big.degree != m:
            raise ValueError("extension polynomial must have degree m")
        return TowerView(big, small, m, list(range(p)))

    q = p**s
    if ext_poly is None:
        big = Field(p, default_defining_poly(p, s * m))
        if base_poly is None:
            w = big.exp(big.n // (q - 1))
            small = Field(p, _minpoly_over_prime(big, w))
            root = w
        else:
            small = Field(p, base_poly)
            if small.degree != s:
                raise ValueError("base polynomial must have degree s")
            root = _subfield_roots(big, small.poly, q)[0]
        return TowerView(big, small, m, _embedding_from_root(small, big, root))

    small = Field(p, base_poly if base_poly is not None else default_defining_poly(p, s))
    if small.degree != s:
        raise ValueError("base polynomial must have degree s")
    ext = [int(c) for c in ext_poly]
    if len(ext) - 1 != m:
        raise ValueError("extension polynomial must have degree m")
    if ext[-1] != 1:
        raise NotMonic(ext)
    big = Field(p, _ext_minpoly_over_prime(small, ext, p))
    if not big.x_is_primitive:
        raise NotIrreducible("the root of the extension polynomial is not primitive")
    alpha = big.alpha
    for root in _subfield_roots(big, small.poly, q):
        embed = _embedding_from_root(small, big, root)
        acc = 0
        for c in reversed(ext):
            acc = big.add(big.mul(acc, alpha), embed[c])
        if acc == 0:
            return TowerView(big, small, m, embed)
    raise AssertionError("no compatible embedding of GF(q)")  # unreachable
