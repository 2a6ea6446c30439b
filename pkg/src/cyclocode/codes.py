"""Cyclic codes over GF(q) of length n = q^m - 1 built from periodic sequences."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

import numpy as np

from .cyclotomic import partition
from .errors import InconsistentInput
from .field import Field, TowerView
from .poly import Poly


@dataclass
class DistanceRecord:
    lower: int | None
    upper: int | None
    exact: bool
    methods: list[str] = dc_field(default_factory=list)
    witness: dict | None = None  # {"support": [...], "values": [...]} of a lightest word found

    @property
    def d(self) -> int | None:
        return self.lower if self.exact else None

    def to_json(self) -> dict:
        out = {"d_lower": self.lower, "d_upper": self.upper, "exact": self.exact, "method": "+".join(self.methods)}
        if self.witness is not None:
            out["witness_support"] = self.witness["support"]
        return out


@dataclass
class WeightDistribution:
    A: list[int]
    q: int = 2

    def __post_init__(self):
        if not self.A or self.A[0] != 1:
            raise InconsistentInput("A_0 must be 1")

    @property
    def n(self) -> int:
        return len(self.A) - 1

    @property
    def size(self) -> int:
        return sum(self.A)

    def min_distance(self) -> int | None:
        for w in range(1, len(self.A)):
            if self.A[w]:
                return w
        return None


@dataclass
class CyclicCode:
    """A q-ary cyclic code of length n dividing the order of ``tower.big``'s group."""

    tower: TowerView = dc_field(repr=False)
    n: int
    g: Poly
    zero_sequence: bool = False
    distance: DistanceRecord | None = None
    _zeros: list[int] | None = dc_field(default=None, repr=False)

    def __post_init__(self):
        if self.g.is_zero() or self.g.lead != 1:
            raise InconsistentInput("generator polynomial must be monic and nonzero")
        if not (Poly.x_n_minus_1(self.field, self.n) % self.g).is_zero():
            raise InconsistentInput("generator does not divide x^n - 1")

    @property
    def field(self) -> Field:
        return self.tower.small

    @property
    def q(self) -> int:
        return self.field.order

    @property
    def k(self) -> int:
        return self.n - self.g.degree

    @property
    def h(self) -> Poly:
        """Check polynomial (x^n - 1) / g."""
        return Poly.x_n_minus_1(self.field, self.n) // self.g

    @property
    def step(self) -> int:
        """Exponent of alpha giving a primitive n-th root of unity."""
        return self.tower.n // self.n

    def zeros(self) -> list[int]:
        """Sorted defining set {j : g(beta^j) = 0}, beta = alpha^(N/n)."""
        if self._zeros is None:
            tower = self.tower
            big = tower.big
            part = partition(self.q, self.n)
            leaders = np.array(part.leaders, dtype=np.int64)
            pts = big.vexp(leaders * self.step)
            g_big = np.asarray(tower.embed, dtype=np.int64)[self.g.coeffs]
            acc = np.zeros_like(pts)
            for c in g_big[::-1]:
                acc = big.vadd(big.vmul(acc, pts), int(c))
            roots = leaders[acc == 0]
            z = []
            for ld in roots.tolist():
                z.extend(part.cosets[ld].members)
            self._zeros = sorted(z)
            if len(self._zeros) != self.g.degree:
                raise InconsistentInput("generator has repeated or foreign roots")
        return self._zeros

    def defining_set_leaders(self) -> list[int]:
        part = partition(self.q, self.n)
        zs = set(self.zeros())
        return [ld for ld in part.leaders if ld in zs]

    def params(self) -> tuple[int, int]:
        return self.n, self.k

    def contains(self, word) -> bool:
        c = Poly(self.field, np.asarray(word, dtype=np.int64))
        return (c % self.g).is_zero()

    def generator_matrix(self) -> np.ndarray:
        """k x n matrix whose rows are the shifts x^i g(x)."""
        G = np.zeros((self.k, self.n), dtype=np.int64)
        gc = self.g.coeffs
        for i in range(self.k):
            G[i, i : i + gc.size] = gc
        return G

    def parity_check_matrix(self) -> np.ndarray:
        return dual(self).generator_matrix()

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "g": self.g.to_text(),
            "g_coeffs": self.g.tolist(),
            "defining_set_leaders": self.defining_set_leaders(),
        }
        if self.zero_sequence:
            out["warning"] = "zero sequence: full code"
        if self.distance is not None:
            out.update(self.distance.to_json())
            if self.distance.exact:
                out["d"] = self.distance.lower
        return out


def code_from_sequence(seq) -> "CyclicCode":
    """g(x) = (x^n - 1) / gcd(S(x), x^n - 1) with S(x) = sum s_i x^i."""
    if seq.tower is None:
        raise InconsistentInput("sequence carries no field tower")
    F = seq.field
    xn1 = Poly.x_n_minus_1(F, seq.n)
    S = Poly(F, seq.values)
    if S.is_zero():
        return CyclicCode(seq.tower, seq.n, Poly.one(F), zero_sequence=True)
    G = S.gcd(xn1)
    g = (xn1 // G).monic()
    return CyclicCode(seq.tower, seq.n, g)


def agree_with_minimal_poly(code: CyclicCode, span) -> bool:
    return code.g == span.Ms_monic


def dual(code: CyclicCode) -> CyclicCode:
    """Generator of the dual is the monic reciprocal of the check polynomial."""
    h = code.h
    return CyclicCode(code.tower, code.n, h.reciprocal().monic())


def bch_bound(code: CyclicCode) -> int:
    """1 + longest run of cyclically consecutive exponents in the defining set."""
    n = code.n
    z = np.zeros(n, dtype=bool)
    zs = code.zeros()
    if not zs:
        return 1
    z[zs] = True
    if z.all():
        return n + 1
    # rotate so position 0 is a non-zero of g; then runs never wrap
    start = int(np.flatnonzero(~z)[0])
    r = np.roll(z, -start)
    best = run = 0
    for v in r.tolist():
        run = run + 1 if v else 0
        best = max(best, run)
    return best + 1


def krawtchouk(n: int, q: int, j: int, i: int) -> int:
    return sum((-1) ** l * (q - 1) ** (j - l) * comb(i, l) * comb(n - i, j - l) for l in range(j + 1))


def macwilliams(wd: WeightDistribution, n: int, k: int, q: int) -> WeightDistribution:
    """Dual weight distribution via the MacWilliams identity (exact integers)."""
    if len(wd.A) != n + 1 or wd.size != q**k:
        raise InconsistentInput("weight distribution inconsistent with [n, k]")
    size = q**k
    B = []
    for j in range(n + 1):
        s = sum(a * krawtchouk(n, q, j, i) for i, a in enumerate(wd.A) if a)
        if s % size:
            raise InconsistentInput("MacWilliams transform is not integral")
        B.append(s // size)
    return WeightDistribution(B, q)


def macwilliams_min_distance(wd: WeightDistribution, n: int, k: int, q: int) -> int | None:
    """First nonzero weight of the dual without transforming the whole vector."""
    size = q**k
    for j in range(1, n + 1):
        s = sum(a * krawtchouk(n, q, j, i) for i, a in enumerate(wd.A) if a)
        if s:
            return j if s % size == 0 else None
    return None


def _volume(n: int, t: int, q: int) -> int:
    return sum(comb(n, i) * (q - 1) ** i for i in range(t + 1))


def sphere_packing_ceiling(n: int, k: int, q: int) -> int:
    """Largest d not excluded by the sphere-packing bound.

    Odd d = 2t+1 needs V_n(t) <= q^(n-k).  Even d = 2t+2 is checked on the
    punctured [n-1, k, 2t+1] code, V_{n-1}(t) <= q^(n-1-k).  Capped by the
    Singleton bound.
    """
    if not 0 <= k <= n:
        raise ValueError("need 0 <= k <= n")
    best = 1
    failed_even = False
    for d in range(2, n - k + 2):
        t = (d - 1) // 2
        if d % 2:
            ok = _volume(n, t, q) <= q ** (n - k)
            if not ok and failed_even:
                break  # both parities fail at this t, and volumes only grow
        else:
            ok = k <= n - 1 and _volume(n - 1, t, q) <= q ** (n - 1 - k)
            failed_even = not ok
        if ok:
            best = d
    return best
