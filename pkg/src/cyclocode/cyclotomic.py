"""q-cyclotomic cosets modulo n and minimal polynomials over a subfield."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import GcdViolation
from .field import TowerView
from .poly import Poly


@dataclass(frozen=True)
class Coset:
    q: int
    n: int
    leader: int
    members: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return i % self.n in self.members


@dataclass(frozen=True)
class CosetPartition:
    q: int
    n: int
    cosets: dict

    @property
    def leaders(self) -> tuple[int, ...]:
        return tuple(sorted(self.cosets))

    def __iter__(self):
        return (self.cosets[k] for k in self.leaders)

    def __len__(self):
        return len(self.cosets)


def _check(q: int, n: int):
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    if gcd(n, q) != 1:
        raise GcdViolation(f"gcd({n}, {q}) != 1")


_lock = threading.Lock()
_member_cache: dict[tuple[int, int], dict[int, Coset]] = {}


def coset_of(q: int, n: int, i: int) -> Coset:
    """The orbit of ``i`` under multiplication by ``q`` modulo ``n``."""
    _check(q, n)
    i %= n
    table = _member_cache.get((q, n))
    if table is not None:
        hit = table.get(i)
        if hit is not None:
            return hit
    orbit = [i]
    j = i * q % n
    while j != i:
        orbit.append(j)
        j = j * q % n
    members = tuple(sorted(orbit))
    c = Coset(q, n, members[0], members)
    with _lock:
        table = _member_cache.setdefault((q, n), {})
        for mbr in members:
            table.setdefault(mbr, c)
    return c


def leader(q: int, n: int, i: int) -> int:
    return coset_of(q, n, i).leader


def coset_size(q: int, n: int, i: int) -> int:
    return coset_of(q, n, i).size


@lru_cache(maxsize=64)
def partition(q: int, n: int) -> CosetPartition:
    """All cosets of Z_n under multiplication by q, keyed by leader."""
    _check(q, n)
    seen = np.zeros(n, dtype=bool)
    cosets = {}
    for i in range(n):
        if seen[i]:
            continue
        c = coset_of(q, n, i)
        seen[list(c.members)] = True
        cosets[c.leader] = c
    return CosetPartition(q, n, cosets)


def weight_base2(i: int) -> int:
    if i < 0:
        raise ValueError("negative integer")
    return int(i).bit_count()


_minpoly_cache: dict[tuple[int, int], Poly] = {}


def minimal_poly(tower: TowerView, i: int) -> Poly:
    """Minimal polynomial of alpha^i over the tower's base field GF(q).

    The linear factors are multiplied in GF(q^m); every resulting coefficient
    must lie in the embedded subfield or :class:`SubfieldViolation` is raised.
    """
    n = tower.n
    c = coset_of(tower.q, n, i)
    key = (id(tower), c.leader)
    hit = _minpoly_cache.get(key)
    if hit is not None and hit.field is tower.small:
        return hit
    big = tower.big
    roots = [big.exp(j) for j in c.members]
    prod = Poly.from_roots(big, roots)
    coeffs = tower.vto_small(prod.coeffs)
    out = Poly(tower.small, coeffs)
    with _lock:
        _minpoly_cache[key] = out
    return out


def product_of_minimal_polys(tower: TowerView, exponents) -> Poly:
    """Product of m_{alpha^i} over distinct cosets among ``exponents``."""
    seen = set()
    out = Poly.one(tower.small)
    for i in exponents:
        ld = leader(tower.q, tower.n, i)
        if ld in seen:
            continue
        seen.add(ld)
        out = out * minimal_poly(tower, ld)
    return out
