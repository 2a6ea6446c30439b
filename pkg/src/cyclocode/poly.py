"""Dense univariate polynomials over a :class:`~cyclocode.field.Field`.

Coefficients are field integers stored ascending in a read-only numpy array.
Binary prime-field polynomials take a big-integer fast path for division and
gcd, which dominates the cost of building codes of length in the thousands.
"""

from __future__ import annotations

import re
from typing import Iterable, Sequence

import numpy as np

from .errors import FieldMismatch
from .field import Field


def _trimmed(c: np.ndarray) -> np.ndarray:
    nz = np.flatnonzero(c)
    return c[: nz[-1] + 1] if nz.size else c[:0]


def _is_gf2(field: Field) -> bool:
    return field.p == 2 and field.degree == 1


def _to_bits(c: np.ndarray) -> int:
    if c.size == 0:
        return 0
    packed = np.packbits(c[::-1].astype(np.uint8))
    return int.from_bytes(packed.tobytes(), "big") >> ((-c.size) % 8)


def _from_bits(v: int) -> np.ndarray:
    if v == 0:
        return np.zeros(0, dtype=np.int64)
    nbits = v.bit_length()
    raw = np.frombuffer(v.to_bytes((nbits + 7) // 8, "big"), dtype=np.uint8)
    bits = np.unpackbits(raw)[-nbits:]
    return bits[::-1].astype(np.int64)


def _gf2_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def _gf2_mul(a: int, b: int) -> int:
    if a.bit_count() > b.bit_count():
        a, b = b, a
    out = 0
    i = 0
    while a:
        if a & 1:
            out ^= b << i
        a >>= 1
        i += 1
    return out


class Poly:
    """Polynomial with coefficients in ``field`` (ascending order)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] | np.ndarray):
        arr = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs, dtype=np.int64)
        if arr.ndim != 1:
            arr = arr.reshape(-1)
        if arr.size and (arr.min() < 0 or arr.max() >= field.order):
            raise ValueError("coefficient outside the field")
        arr = _trimmed(arr).copy()
        arr.setflags(write=False)
        self.field = field
        self.coeffs = arr

    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, [])

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, [1])

    @classmethod
    def monomial(cls, field: Field, k: int, c: int = 1) -> "Poly":
        arr = np.zeros(k + 1, dtype=np.int64)
        arr[k] = c
        return cls(field, arr)

    @classmethod
    def x_n_minus_1(cls, field: Field, n: int) -> "Poly":
        arr = np.zeros(n + 1, dtype=np.int64)
        arr[0] = field.neg(1)
        arr[n] = 1
        return cls(field, arr)

    @classmethod
    def from_roots(cls, field: Field, roots: Sequence[int]) -> "Poly":
        """Monic product of (x - r) over the given roots."""
        c = np.ones(1, dtype=np.int64)
        for r in roots:
            nr = field.neg(int(r))
            nxt = np.zeros(c.size + 1, dtype=np.int64)
            nxt[1:] = c
            nxt[:-1] = field.vadd(nxt[:-1], field.vmul(c, nr))
            c = nxt
        return cls(field, c)

    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        return self.coeffs.size - 1

    def is_zero(self) -> bool:
        return self.coeffs.size == 0

    @property
    def lead(self) -> int:
        return int(self.coeffs[-1]) if self.coeffs.size else 0

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, i: int) -> int:
        return int(self.coeffs[i]) if 0 <= i < self.coeffs.size else 0

    def tolist(self) -> list[int]:
        return [int(c) for c in self.coeffs]

    def _check(self, other: "Poly"):
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch("polynomials over different fields")

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.field.order, self.coeffs.tobytes()))

    def __repr__(self):
        return f"Poly({self.to_text()})"

    # ------------------------------------------------------------------
    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        n = max(self.coeffs.size, other.coeffs.size)
        a = np.zeros(n, dtype=np.int64)
        b = np.zeros(n, dtype=np.int64)
        a[: self.coeffs.size] = self.coeffs
        b[: other.coeffs.size] = other.coeffs
        return Poly(self.field, self.field.vadd(a, b))

    def __neg__(self) -> "Poly":
        return Poly(self.field, self.field.vneg(self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, c: int) -> "Poly":
        if c == 0:
            return Poly.zero(self.field)
        return Poly(self.field, self.field.vmul(self.coeffs, c))

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if a.size == 0 or b.size == 0:
            return Poly.zero(F)
        if F.degree == 1:
            if F.p == 2:
                return Poly(F, _from_bits(_gf2_mul(_to_bits(a), _to_bits(b))))
            return Poly(F, np.convolve(a, b) % F.p)
        if a.size > b.size:
            a, b = b, a
        out = np.zeros(a.size + b.size - 1, dtype=np.int64)
        for i in np.flatnonzero(a):
            seg = out[i : i + b.size]
            out[i : i + b.size] = F.vadd(seg, F.vmul(b, int(a[i])))
        return Poly(F, out)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if _is_gf2(F):
            q, r = _gf2_divmod(_to_bits(self.coeffs), _to_bits(other.coeffs))
            return Poly(F, _from_bits(q)), Poly(F, _from_bits(r))
        r = self.coeffs.copy()
        b = other.coeffs
        db = b.size - 1
        if r.size - 1 < db:
            return Poly.zero(F), Poly(F, r)
        inv_lead = F.inv(int(b[-1]))
        q = np.zeros(r.size - db, dtype=np.int64)
        for k in range(r.size - 1, db - 1, -1):
            c = int(r[k])
            if c == 0:
                continue
            c = F.mul(c, inv_lead)
            q[k - db] = c
            lo = k - db
            r[lo : k + 1] = F.vsub(r[lo : k + 1], F.vmul(b, c))
        return Poly(F, q), Poly(F, r[:db])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.lead
        return self if lead == 1 else self.scale(self.field.inv(lead))

    def gcd(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        if _is_gf2(F):
            a, b = _to_bits(self.coeffs), _to_bits(other.coeffs)
            while b:
                a, b = b, _gf2_divmod(a, b)[1]
            return Poly(F, _from_bits(a))
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def eval(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in self.coeffs[::-1]:
            acc = F.add(F.mul(acc, x), int(c))
        return acc

    def veval(self, xs) -> np.ndarray:
        """Evaluate at many points at once (Horner over numpy arrays)."""
        F = self.field
        xs = np.asarray(xs, dtype=np.int64)
        acc = np.zeros_like(xs)
        for c in self.coeffs[::-1]:
            acc = F.vadd(F.vmul(acc, xs), int(c))
        return acc

    def reciprocal(self) -> "Poly":
        """x^deg * f(1/x), i.e. the coefficient list reversed."""
        return Poly(self.field, self.coeffs[::-1])

    def shift(self, k: int) -> "Poly":
        if self.is_zero():
            return self
        return Poly(self.field, np.concatenate([np.zeros(k, dtype=np.int64), self.coeffs]))

    def weight(self) -> int:
        return int(np.count_nonzero(self.coeffs))

    # ------------------------------------------------------------------
    # text and JSON
    # ------------------------------------------------------------------
    def _coeff_text(self, c: int) -> str:
        F = self.field
        if F.degree == 1:
            return str(c)
        j = F.log(c)
        return "1" if j == 0 else ("w" if j == 1 else f"w^{j}")

    def to_text(self, var: str = "x") -> str:
        terms = []
        for k in range(self.coeffs.size - 1, -1, -1):
            c = int(self.coeffs[k])
            if c == 0:
                continue
            cs = self._coeff_text(c)
            if k == 0:
                terms.append(cs)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                terms.append(mono if cs == "1" else f"{cs}*{mono}")
        return " + ".join(terms) if terms else "0"

    def __str__(self):
        return self.to_text()

    def to_json(self) -> dict:
        F = self.field
        out = {"p": F.p, "coeffs": self.tolist()}
        if F.degree > 1:
            out["base_poly"] = list(F.poly)
        return out

    @classmethod
    def from_json(cls, field: Field, obj: dict) -> "Poly":
        if obj.get("p", field.p) != field.p:
            raise FieldMismatch("characteristic mismatch")
        return cls(field, obj["coeffs"])

    @classmethod
    def from_text(cls, field: Field, text: str, var: str = "x") -> "Poly":
        return cls(field, parse_poly_text(text, field, var))


_TERM = re.compile(
    r"^(?P<coef>\d+|w(?:\^(?P<wexp>\d+))?)?\s*\*?\s*(?P<var>[a-z])?(?:\^(?P<exp>\d+))?$"
)


def parse_poly_text(text: str, field: Field | None = None, var: str = "x", p: int | None = None) -> list[int]:
    """Parse ``"x^4 + x + 1"`` style text into ascending coefficients.

    Prime-field coefficients are integers; extension-field coefficients may be
    written ``w``, ``w^j`` (powers of the field's primitive element) or as
    integers.  Term order does not matter and like terms are summed.
    """
    if field is None and p is None:
        raise ValueError("need a field or a characteristic")
    s = text.replace(" ", "").replace("-", "+-")
    if not s:
        raise ValueError("empty polynomial")
    acc: dict[int, int] = {}
    for raw in s.split("+"):
        if raw == "":
            continue
        neg = raw.startswith("-")
        term = raw[1:] if neg else raw
        m = _TERM.match(term)
        if not m or (m.group("coef") is None and m.group("var") is None):
            raise ValueError(f"cannot parse term {raw!r}")
        if m.group("var") is not None and m.group("var") != var:
            raise ValueError(f"unexpected variable in {raw!r}")
        if m.group("var") is None and m.group("exp") is not None:
            raise ValueError(f"cannot parse term {raw!r}")
        coef_s = m.group("coef")
        if coef_s is None:
            c = 1
        elif coef_s.startswith("w"):
            if field is None or field.degree == 1:
                raise ValueError("'w' coefficients need an extension base field")
            c = field.exp(int(m.group("wexp") or 1))
        else:
            c = int(coef_s)
            if field is not None and field.degree == 1:
                c %= field.p
            elif field is None:
                c %= p
        k = 0 if m.group("var") is None else int(m.group("exp") or 1)
        if neg:
            c = field.neg(c) if field is not None else (-c) % p
        prev = acc.get(k, 0)
        acc[k] = field.add(prev, c) if field is not None else (prev + c) % p
    deg = max(acc)
    out = [0] * (deg + 1)
    for k, c in acc.items():
        out[k] = c
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out
