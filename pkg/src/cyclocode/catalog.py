"""Monomial families with low differential uniformity, and their DDTs."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

import numpy as np

from .errors import FieldTooLarge, InvalidParams
from .field import Field, is_prime

FAMILIES = (
    "inverse",
    "gold",
    "welch",
    "kasami",
    "niho1",
    "niho2",
    "dobbertin",
    "bracken_leander",
    "q23",
    "raw_exponent",
)

DDT_MAX_ORDER = 1 << 16


@dataclass(frozen=True)
class FunctionSpec:
    family: str
    m: int
    d: int
    h: int | None = None
    q: int = 2
    claimed: int | None = None  # claimed differential uniformity, if any
    claim: str | None = None  # "APN", "4-uniform", "planar"
    precondition: bool = False

    @property
    def order(self) -> int:
        return self.q**self.m

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "m": self.m,
            "h": self.h,
            "q": self.q,
            "d": self.d,
            "claim": self.claim,
            "claimed_delta": self.claimed,
            "precondition": self.precondition,
        }


def _need(cond: bool, msg: str):
    if not cond:
        raise InvalidParams(msg)


def _prime_power(q: int) -> tuple[int, int]:
    for p in range(2, q + 1):
        if q % p == 0:
            _need(is_prime(p), f"q={q} is not a prime power")
            s = 0
            x = q
            while x % p == 0:
                x //= p
                s += 1
            _need(x == 1, f"q={q} is not a prime power")
            return p, s
    raise InvalidParams(f"q={q} is not a prime power")


def resolve(family: str, m: int, h: int | None = None, q: int = 2, d: int | None = None) -> FunctionSpec:
    """Exponent and uniformity claim for a family at (m, h, q)."""
    if family not in FAMILIES:
        raise InvalidParams(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    _need(isinstance(m, int) and m >= 1, "m must be a positive integer")
    _prime_power(q)
    if family not in ("inverse", "raw_exponent"):
        _need(h is not None and h >= 1, f"{family} needs h >= 1")
    if family != "gold" and family not in ("q23", "raw_exponent"):
        _need(q == 2, f"{family} is defined over GF(2^m)")

    def spec(dd, claimed=None, claim=None, ok=False):
        return FunctionSpec(family, m, dd, h, q, claimed if ok else None, claim if ok else None, ok)

    if family == "inverse":
        d0 = 2**m - 2
        _need(d0 >= 1, "inverse needs m >= 2")
        odd = m % 2 == 1
        return spec(d0, 2 if odd else 4, "APN" if odd else "4-uniform", True)
    if family == "gold":
        d0 = q**h + 1
        g = gcd(m, h)
        if q == 2:
            if m % 2 == 1 and g == 1:
                return spec(d0, 2, "APN", True)
            if m % 4 == 2 and g == 2:
                return spec(d0, 4, "4-uniform", True)
            return spec(d0)
        if q % 2 == 1:
            return spec(d0, 1, "planar", (m // g) % 2 == 1)
        return spec(d0)
    if family == "welch":
        return spec(2**h + 3, 2, "APN", m % 2 == 1 and h == (m - 1) // 2)
    if family == "kasami":
        return spec(2 ** (2 * h) - 2**h + 1, 2, "APN", m % 2 == 1 and gcd(m, h) == 1)
    if family == "niho1":
        _need(h % 2 == 0, "niho1 needs h even")
        return spec(2**h + 2 ** (h // 2) - 1, 2, "APN", m == 2 * h + 1)
    if family == "niho2":
        _need(h % 2 == 1, "niho2 needs h odd")
        return spec(2**h + 2 ** ((3 * h + 1) // 2) - 1, 2, "APN", m == 2 * h + 1)
    if family == "dobbertin":
        return spec(2 ** (4 * h) + 2 ** (3 * h) + 2 ** (2 * h) + 2**h - 1, 2, "APN", m == 5 * h)
    if family == "bracken_leander":
        return spec(2 ** (2 * h) + 2**h + 1, 4, "4-uniform", m == 4 * h and h % 2 == 1)
    if family == "q23":
        return spec(q * q + q + 1)
    _need(d is not None and d >= 1, "raw_exponent needs d >= 1")
    return spec(d)


@dataclass
class DDTSummary:
    delta: int
    histogram: dict = dc_field(default_factory=dict)  # entry value -> count over a != 0
    order: int = 0
    rows_ok: bool = True
    even_ok: bool | None = None

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "order": self.order,
            "rows_sum_to_order": self.rows_ok,
            "entries_even": self.even_ok,
        }


def _values(spec: FunctionSpec | int, field: Field) -> np.ndarray:
    d = spec if isinstance(spec, int) else spec.d
    x = np.arange(field.order, dtype=np.int64)
    if d % field.n == 0 and d > 0:
        # x^d is 1 on nonzero x, 0 at 0
        return (x != 0).astype(np.int64)
    return field.vpow(x, d % field.n if d >= field.n else d)


def ddt(spec: FunctionSpec | int, field: Field) -> DDTSummary:
    """Fold the full difference table of x -> x^d into a summary.

    ``spec`` may be a :class:`FunctionSpec` or a bare exponent.
    """
    N = field.order
    if N > DDT_MAX_ORDER:
        raise FieldTooLarge(f"DDT over a field of order {N} exceeds {DDT_MAX_ORDER}")
    if not isinstance(spec, int) and spec.order != N:
        raise InvalidParams(f"function lives on a field of order {spec.order}, got {N}")
    Fv = _values(spec, field)
    xs = np.arange(N, dtype=np.int64)
    hist = np.zeros(N + 1, dtype=np.int64)
    rows_ok = True
    even_ok = True if field.p == 2 else None
    for a in range(1, N):
        diff = field.vsub(Fv[field.vadd(xs, a)], Fv)
        row = np.bincount(diff, minlength=N)
        rows_ok &= int(row.sum()) == N
        if even_ok is not None and np.any(row & 1):
            even_ok = False
        hist += np.bincount(row, minlength=N + 1)
    vals = np.flatnonzero(hist)
    return DDTSummary(int(vals.max()), {int(v): int(hist[v]) for v in vals}, N, bool(rows_ok), even_ok)


def differential_uniformity(spec: FunctionSpec | int, field: Field) -> int:
    return ddt(spec, field).delta
