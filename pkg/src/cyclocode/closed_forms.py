"""Closed-form predictions for linear spans, minimal polynomials and distances.

Each profile function returns what the formula says, restricted to the
parameter range where the formula is claimed.  Nothing here looks at a
generated sequence; comparison with the empirical pipeline happens in
:mod:`cyclocode.verify`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .cyclotomic import coset_of, minimal_poly
from .errors import ConditionUnmet, InconsistentInput
from .field import TowerView, is_prime
from .kasami import (
    build_kasami_sets,
    in_high,
    in_low,
    in_mid,
    n2,
    odd_kappa_exponents,
    predicted_b_size,
)
from .poly import Poly


def indicator_Nq(q: int, x: int) -> int:
    """0 when q divides x, 1 otherwise."""
    if q < 2:
        raise ValueError("q must be at least 2")
    return 0 if x % q == 0 else 1


def count_Nt(t: int) -> int:
    """Number of odd a <= 2^t - 1 with an odd number of doublings below 2^t."""
    if t < 1:
        raise ValueError("t must be positive")
    if t == 1:
        return 1
    return (2**t + (-1) ** (t - 1)) // 3


def gcd_identity_tower(q: int, m: int, h: int) -> int:
    """gcd(q^h + 1, (q^m - 1)/(q^gcd(m,h) - 1)), cross-checked against a quotient of gcds."""
    if m < 1 or h < 1:
        raise ValueError("m and h must be positive")
    lhs = gcd(q**h + 1, (q**m - 1) // (q ** gcd(m, h) - 1))
    rhs = gcd(q ** (2 * h) - 1, q**m - 1) // gcd(q**h - 1, q**m - 1)
    if lhs != rhs:
        raise InconsistentInput(f"gcd identity fails at q={q}, m={m}, h={h}: {lhs} != {rhs}")
    return lhs


def gcd_identity_plus_one(a: int, l: int, h: int) -> int:
    """gcd(a^l + 1, a^h - 1) from the parity of h / gcd(l, h), checked directly."""
    if a < 2:
        raise ValueError("a must be at least 2")
    g = gcd(l, h)
    if (h // g) % 2:
        predicted = 1 if a % 2 == 0 else 2
    else:
        predicted = a**g + 1
    direct = gcd(a**l + 1, a**h - 1)
    if predicted != direct:
        raise InconsistentInput(f"gcd(a^l+1, a^h-1) mismatch at a={a}, l={l}, h={h}")
    return predicted


# --------------------------------------------------------------------------
# span profiles
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SpanProfile:
    """Predicted span L and the factor list of the monic minimal polynomial.

    ``factors`` holds pairs (i, size): the factor is the minimal polynomial of
    alpha^(-i) and ``size`` the degree the formula expects for it.
    """

    q: int
    m: int
    L: int
    factors: tuple
    x1_mult: int
    rule: str
    h: int | None = None
    window: tuple | None = None  # (d_lower, d_upper) claimed for the code
    notes: tuple = dc_field(default=())

    @property
    def n(self) -> int:
        return self.q**self.m - 1

    @property
    def exponents(self) -> list[int]:
        return [i for i, _ in self.factors]

    def declared_degree(self) -> int:
        return self.x1_mult + sum(s for _, s in self.factors)

    def size_mismatches(self) -> list[tuple[int, int, int]]:
        """(i, expected, actual) for every factor whose coset size differs."""
        out = []
        for i, s in self.factors:
            actual = coset_of(self.q, self.n, i).size
            if actual != s:
                out.append((i, s, actual))
        return out

    def duplicate_cosets(self) -> list[int]:
        seen: dict[int, int] = {}
        dup = []
        for i, _ in self.factors:
            ld = coset_of(self.q, self.n, i).leader
            if ld in seen:
                dup.append(i)
            seen[ld] = i
        return dup

    def consistency_problems(self) -> list[str]:
        out = []
        if self.L != self.declared_degree():
            out.append(f"L={self.L} but factor degrees sum to {self.declared_degree()}")
        for i, s, a in self.size_mismatches():
            out.append(f"coset of {i} has size {a}, expected {s}")
        for i in self.duplicate_cosets():
            out.append(f"exponent {i} repeats an earlier coset")
        return out

    def expected_monic(self, tower: TowerView) -> Poly:
        """(x - 1)^mult times every listed factor, multiplied as listed."""
        if tower.q != self.q or tower.m != self.m:
            raise InconsistentInput("tower does not match the profile's field")
        n = tower.n
        F = tower.small
        out = Poly.one(F)
        if self.x1_mult:
            x1 = Poly(F, [F.neg(1), 1])
            for _ in range(self.x1_mult):
                out = out * x1
        for i, _ in self.factors:
            out = out * minimal_poly(tower, (-i) % n)
        return out

    def to_json(self) -> dict:
        out = {
            "rule": self.rule,
            "q": self.q,
            "m": self.m,
            "L": self.L,
            "factor_exponents": self.exponents,
            "factor_sizes": [s for _, s in self.factors],
            "x1_mult": self.x1_mult,
        }
        if self.h is not None:
            out["h"] = self.h
        if self.window is not None:
            out["window"] = list(self.window)
        return out


def _full(m: int, exps) -> tuple:
    return tuple((int(i), m) for i in exps)


# ---- Gold -----------------------------------------------------------------

def gold_profile(q: int, m: int, h: int) -> SpanProfile:
    if q != 2:
        raise ConditionUnmet("span formula is stated for binary Gold sequences")
    g = gcd(m, h)
    e = (1 << h) + 1
    if m % 2 == 1 and g == 1:
        return SpanProfile(2, m, m + 1, _full(m, [e]), 1, "gold-apn", h=h)
    if m % 4 == 2 and g == 2:
        return SpanProfile(2, m, m, _full(m, [e]), 0, "gold-4uniform", h=h)
    raise ConditionUnmet(f"Gold span formula needs m odd with gcd 1 or m = 2 mod 4 with gcd 2 (m={m}, h={h})")


# ---- Kasami ---------------------------------------------------------------

def _kasami_b_factors(m: int, h: int, drop) -> tuple:
    S = build_kasami_sets(m, h)
    drop = set(drop)
    return tuple((j, predicted_b_size(m, h, j)) for j in S.B if j not in drop)


def _kasami_odd_factors(m: int, h: int) -> tuple:
    return _full(m, odd_kappa_exponents(h, 3))


def kasami_profile_low(m: int, h: int) -> SpanProfile:
    if not in_low(m, h):
        raise ConditionUnmet(f"(m, h) = ({m}, {h}) is outside the small-h range")
    S = build_kasami_sets(m, h)
    N = n2(m)
    if h % 2 == 0:
        L = (m * (2 ** (h + 2) - 1) + 3 * N) // 3
        bpart = _full(m, S.B)
    else:
        L = (m * (2 ** (h + 2) - 5) + 3 * N) // 3
        bpart = _full(m, S.B[1:])
    factors = bpart + _kasami_odd_factors(m, h)
    return SpanProfile(2, m, L, factors, N, "kasami-low", h=h, window=(kasami_distance_bounds(m, h, "low")[0], None))


def kasami_profile_mid(m: int, h: int) -> SpanProfile:
    if not in_mid(m, h):
        raise ConditionUnmet(f"(m, h) = ({m}, {h}) is outside the m >= 3h range")
    S = build_kasami_sets(m, h)
    g6 = gcd(6, m)
    N = n2(m)
    base = 4 * h - m
    if g6 % 2:
        c = -2 if h % 2 else 2
        L = m * (2 ** (h + 2) + c) // 3 - base * m + 1
    elif h % 2:
        L = m * (2 ** (h + 2) + 1) // 3 - base * m - m // 2
    elif m != 3 * h:
        L = m * (2 ** (h + 2) + 5) // 3 - base * m - m // 2
    else:
        L = 3 * h * (2 ** (h + 2) + 5) // 3 - 3 * h * h
    drop = set(S.B2p)
    if h % 2:
        drop.add(S.top)
    factors = _kasami_b_factors(m, h, drop) + _kasami_odd_factors(m, h)
    return SpanProfile(2, m, L, factors, N, "kasami-mid", h=h, window=(kasami_distance_bounds(m, h, "mid")[0], None))


def kasami_profile_high(m: int, h: int) -> SpanProfile:
    if not in_high(m, h):
        raise ConditionUnmet(f"(m, h) = ({m}, {h}) is outside the m < 3h, 5h < 2m+3 range")
    S = build_kasami_sets(m, h)
    g6 = gcd(6, m)
    N = n2(m)
    P = 2 ** (h + 2)
    odd_h = h % 2 == 1
    if g6 == 1:
        L = m * (P - (8 if odd_h else 4)) // 3 - (m - 2 * h) * m + 1
    elif g6 == 2:
        L = m * (P - (5 if odd_h else 1)) // 3 - (3 * m // 2 - 2 * h) * m
    elif g6 == 3:
        L = m * (P - (8 if odd_h else 4)) // 3 - (4 * m // 3 - 2 * h) * m + 1
    else:
        L = m * (P - (5 if odd_h else 1)) // 3 - (13 * m // 6 - 2 * h) * m
    drop = set(S.B2pp)
    if odd_h:
        drop.add(S.top)
    factors = _kasami_b_factors(m, h, drop) + _kasami_odd_factors(m, h)
    return SpanProfile(2, m, L, factors, N, "kasami-high", h=h, window=(kasami_distance_bounds(m, h, "high")[0], None))


def kasami_profile(m: int, h: int) -> SpanProfile:
    """Dispatch to whichever Kasami range contains (m, h)."""
    for pred, fn in ((in_low, kasami_profile_low), (in_mid, kasami_profile_mid), (in_high, kasami_profile_high)):
        if pred(m, h):
            return fn(m, h)
    raise ConditionUnmet(f"no Kasami span formula covers (m, h) = ({m}, {h})")


def kasami_distance_bounds(m: int, h: int, regime: str) -> tuple[int, None]:
    """Lower bound on the Kasami code distance; no upper bound is claimed."""
    checks = {"low": in_low, "mid": in_mid, "high": in_high}
    if regime not in checks:
        raise ValueError(f"unknown regime {regime!r}")
    if not checks[regime](m, h):
        raise ConditionUnmet(f"(m, h) = ({m}, {h}) is not in the {regime} range")
    if regime == "low":
        if h % 2:
            lo = 2**h
        else:
            lo = 2**h + (2 if m % 2 else 1)
    elif regime == "mid":
        lo = 2 ** (m - 3 * h + 1)
        if h % 2 == 0:
            lo += 2 if m % 2 else 1
    else:
        lo = 2**h - 2 ** (m - 2 * h)
    return lo, None


# ---- Bracken-Leander ------------------------------------------------------

def bracken_leander_profile(m: int) -> SpanProfile:
    if m % 4 or (m // 4) % 2 == 0:
        raise ConditionUnmet(f"needs m = 4h with h odd (m={m})")
    h = m // 4
    factors = ((1, m), (1 + 2 ** (2 * h), m // 2), (1 + 2**h + 2 ** (2 * h), m))
    return SpanProfile(2, m, 5 * m // 2, factors, 0, "bracken-leander", h=h, window=(3, 3))


# ---- x^(q^2+q+1) over GF(q) -----------------------------------------------

def _has_proper_factor_above(x: int, bound: int) -> bool:
    """True if some divisor eta of x satisfies bound < eta < x (and eta > 1)."""
    return any(x % e == 0 for e in range(max(bound + 1, 2), x))


def q23_window(p: int, s: int, m: int) -> tuple[int, int]:
    q = p**s
    N = indicator_Nq(p, m)
    if p == 2:
        if m % 2 == 0:
            if s % 2:
                return 3, 3
            return (3, 5) if s % 4 == 2 else (3, 4)
        if s % 2 == 0 or _has_proper_factor_above(q - 1, 4):
            return 3, 5
        return 3, 8
    if p == 3:
        big = _has_proper_factor_above(q - 1, 3)
        if N == 0:
            return (3, 3) if big else (3, 6)
        return (3, 4) if big else (3, 8)
    if p == 5:
        if N == 0:
            return 3, 4
        return (3, 5) if _has_proper_factor_above(q - 1, 4) else (3, 4)
    return (3, 4) if N == 0 else (3, 5)


def q23_profile(p: int, s: int, m: int) -> SpanProfile:
    if not is_prime(p) or s < 1:
        raise ConditionUnmet("q must be a prime power")
    if m < (7 if m % 2 else 6):
        raise ConditionUnmet(f"needs m >= 7 (odd) or m >= 6 (even), got m={m}")
    q = p**s
    N = indicator_Nq(p, m)
    if p == 2:
        exps = [1, 1 + q * q, 1 + q + q * q]
    elif p == 3:
        exps = [1 + q, 1 + q * q, 1 + q + q * q]
    else:
        exps = [1, 1 + q, 1 + q * q, 1 + q + q * q]
    L = len(exps) * m + N
    return SpanProfile(q, m, L, _full(m, exps), N, "q23", window=q23_window(p, s, m))


# ---- ternary, h = 3 -------------------------------------------------------

def ternary_h3_profile(m: int) -> SpanProfile:
    if m % 2 or gcd(3, m) != 1 or m < 7:
        raise ConditionUnmet(f"needs m even, gcd(3, m) = 1 and m >= 7 (m={m})")
    exps = [1, 2, 5, 10, 11, 13, 14]
    return SpanProfile(3, m, 7 * m + 1, _full(m, exps), 1, "ternary-h3", h=3, window=(5, 8))
