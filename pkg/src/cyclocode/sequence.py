"""Trace sequences of monomials, their exponential-sum expansion, and linear span.

For f(x) = x^d the sequence is s_t = Tr(f(alpha^t + 1)) over one period
t = 0 .. n-1 with n = q^m - 1.  Two independent routes give its minimal
polynomial: a symbolic expansion of (x+1)^d folded through the trace, and
Berlekamp-Massey on the raw values.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product as iproduct
from math import comb

import numpy as np

from .cyclotomic import coset_of, product_of_minimal_polys
from .errors import InconsistentInput, InsufficientTerms, InvalidParams, NotMonomial
from .field import Field, TowerView
from .poly import Poly


@dataclass(frozen=True)
class MonomialFunction:
    d: int
    name: str = ""

    def __post_init__(self):
        if not isinstance(self.d, (int, np.integer)) or self.d < 1:
            raise NotMonomial(f"exponent must be a positive integer, got {self.d!r}")

    def reduced(self, n: int) -> int:
        d = self.d % n
        if d == 0:
            raise InvalidParams(f"x^{self.d} is constant on nonzero elements of a group of order {n}")
        return d


@dataclass(frozen=True)
class PeriodicSequence:
    field: Field
    n: int
    values: np.ndarray = dc_field(repr=False)
    tower: TowerView | None = dc_field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if len(self.values) != self.n:
            raise InconsistentInput("period length mismatch")

    def repeated(self, terms: int) -> np.ndarray:
        reps = -(-terms // self.n)
        return np.tile(self.values, reps)[:terms]


@dataclass(frozen=True)
class TraceExpansion:
    """s_t = sum over i in I of c_i * alpha^(i t), coefficients stored per coset leader."""

    tower: TowerView = dc_field(repr=False)
    coeffs: dict  # coset leader -> coefficient (prime-field integer, valid in GF(q^m))

    @property
    def leaders(self) -> list[int]:
        return sorted(self.coeffs)

    @property
    def indices(self) -> list[int]:
        q, n = self.tower.q, self.tower.n
        out = []
        for ld in self.coeffs:
            out.extend(coset_of(q, n, ld).members)
        return sorted(out)

    @property
    def span(self) -> int:
        q, n = self.tower.q, self.tower.n
        return sum(coset_of(q, n, ld).size for ld in self.coeffs)

    def has_constant(self) -> bool:
        return 0 in self.coeffs

    def evaluate(self) -> np.ndarray:
        """One period of the expansion as big-field integers."""
        big = self.tower.big
        n = self.tower.n
        t = np.arange(n, dtype=np.int64)
        acc = np.zeros(n, dtype=np.int64)
        for i in self.indices:
            c = self.coeffs[coset_of(self.tower.q, n, i).leader]
            acc = big.vadd(acc, big.vmul(big.vexp(i * t), c))
        return acc


@dataclass(frozen=True)
class SpanResult:
    L: int
    Ms_unit: Poly
    Ms_monic: Poly


def generate(tower: TowerView, f: MonomialFunction) -> PeriodicSequence:
    """One period of s_t = Tr(f(alpha^t + 1)) as GF(q) integers."""
    big = tower.big
    d = f.reduced(big.n)
    t = np.arange(big.n, dtype=np.int64)
    arg = big.vadd(big.vexp(t), 1)
    vals = big.vpow(arg, d)  # zero stays zero for d > 0
    tr = tower.vtrace(vals)
    return PeriodicSequence(tower.small, big.n, tower.vto_small(tr), tower)


def lucas_terms(d: int, p: int):
    """Yield (e, C(d, e) mod p) for every e with nonzero binomial coefficient."""
    digits = []
    x = d
    while x:
        digits.append(x % p)
        x //= p
    choices = [range(di + 1) for di in digits]
    for combo in iproduct(*choices):
        e = 0
        c = 1
        for k, (ek, dk) in enumerate(zip(combo, digits)):
            e += ek * p**k
            c = c * comb(dk, ek) % p
        if c:
            yield e, c


def expand_symbolic(tower: TowerView, f: MonomialFunction) -> TraceExpansion:
    """Fold the binomial expansion of (x+1)^d through the trace.

    Tr(b * beta^e) for b in GF(p) spreads b * m/|C_e| over every member of the
    coset of e.  Summing per leader and discarding zero totals gives the
    unique expansion; the trivial coset {0} carries the constant term.
    """
    if not isinstance(f, MonomialFunction):
        raise NotMonomial("symbolic expansion needs a monomial")
    p, q, n, m = tower.p, tower.q, tower.n, tower.m
    d = f.reduced(n)
    acc: dict[int, int] = {}
    for e, b in lucas_terms(d, p):
        c = coset_of(q, n, e)
        mult = (m // c.size) * b % p
        if mult:
            acc[c.leader] = (acc.get(c.leader, 0) + mult) % p
    coeffs = {ld: v for ld, v in acc.items() if v}
    return TraceExpansion(tower, coeffs)


def check_reconstruction(exp: TraceExpansion, seq: PeriodicSequence) -> bool:
    """True iff the expansion reproduces ``seq`` over a full period."""
    got = exp.evaluate()
    want = np.asarray(exp.tower.embed, dtype=np.int64)[seq.values]
    return bool(np.array_equal(got, want))


def span_from_expansion(exp: TraceExpansion) -> SpanResult:
    tower = exp.tower
    n = tower.n
    monic = product_of_minimal_polys(tower, [(-ld) % n for ld in exp.leaders])
    return SpanResult(exp.span, unit_constant_form(monic), monic)


def unit_constant_form(monic: Poly) -> Poly:
    """Scale a polynomial with nonzero constant term so that it is 1."""
    if monic.is_zero():
        return monic
    c0 = monic[0]
    if c0 == 0:
        raise InconsistentInput("minimal polynomial with zero constant term")
    return monic.scale(monic.field.inv(c0))


def _bm_gf2(s: np.ndarray) -> tuple[int, int]:
    C, B = 1, 1
    L, shift = 0, 1
    window = 0
    for k, bit in enumerate(s.tolist()):
        window = (window << 1) | bit
        if (C & window).bit_count() & 1:
            T = C
            C ^= B << shift
            if 2 * L <= k:
                L = k + 1 - L
                B = T
                shift = 1
            else:
                shift += 1
        else:
            shift += 1
    return L, C


def _bm_generic(F: Field, s: np.ndarray) -> tuple[int, np.ndarray]:
    N = s.size
    C = np.zeros(N + 1, dtype=np.int64)
    B = np.zeros(N + 1, dtype=np.int64)
    C[0] = B[0] = 1
    L, shift, b = 0, 1, 1
    for k in range(N):
        seg = s[k - L : k + 1][::-1]
        d = F.vsum(F.vmul(C[: L + 1], seg))
        if d == 0:
            shift += 1
            continue
        coef = F.mul(d, F.inv(b))
        T = C.copy() if 2 * L <= k else None
        top = N + 1 - shift
        C[shift:] = F.vsub(C[shift:], F.vmul(B[:top], coef))
        if T is not None:
            L = k + 1 - L
            B = T
            b = d
            shift = 1
        else:
            shift += 1
    return L, C[: L + 1]


def berlekamp_massey(seq: PeriodicSequence | np.ndarray, terms: int | None = None, field: Field | None = None):
    """Linear span and connection polynomial c(x) (c_0 = 1) of a sequence.

    A :class:`PeriodicSequence` is extended to ``terms`` values by repeating
    its period (default two periods).
    """
    if isinstance(seq, PeriodicSequence):
        F = seq.field
        terms = 2 * seq.n if terms is None else terms
        if terms < 2:
            raise InsufficientTerms("need at least two terms")
        s = seq.repeated(terms)
    else:
        if field is None:
            raise ValueError("raw arrays need an explicit field")
        F = field
        s = np.asarray(seq, dtype=np.int64)
        if terms is not None:
            s = s[:terms]
        if s.size < 2:
            raise InsufficientTerms("need at least two terms")
    s = np.ascontiguousarray(s, dtype=np.int64)
    if F.p == 2 and F.degree == 1:
        L, C = _bm_gf2(s)
        bits = [(C >> i) & 1 for i in range(L + 1)]
        return L, Poly(F, bits)
    L, C = _bm_generic(F, s)
    return L, Poly(F, C)


def span_from_bm(seq: PeriodicSequence) -> SpanResult:
    L, c = berlekamp_massey(seq)
    if c.degree != L:
        raise InconsistentInput("connection polynomial degree differs from the span")
    return SpanResult(L, c, c.monic())
