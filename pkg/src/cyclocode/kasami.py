"""Exponent bookkeeping for the binary Kasami sequence.

Working modulo n = 2^m - 1 with the exponent d = 2^(2h) - 2^h + 1, the trace
of (x+1)^d folds onto two families of exponents:

* ``B = {i + 2^(m-h) : i in A}`` with ``A = {0, ..., 2^h - 1}``;
* the odd ``j in A`` whose multiplicity ``epsilon_j`` is odd.

The sets here describe which of those cosets coincide, shrink, or cancel.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import gcd

from .cyclotomic import coset_of

INF = 10**9


def n2(x: int) -> int:
    """1 if x is odd, else 0."""
    return 0 if x % 2 == 0 else 1


def mod4_r(m: int) -> int:
    """m mod 4 taken in {1, 2, 3, 4}."""
    return m % 4 or 4


def u_of(i: int) -> int:
    """Least u >= 0 with i <= 2^u - 1."""
    return int(i).bit_length()


def v_of(i: int) -> int:
    """Largest v with 2^v | i (infinite for i = 0)."""
    if i == 0:
        return INF
    return (i & -i).bit_length() - 1


# --------------------------------------------------------------------------
# epsilon / kappa counters
# --------------------------------------------------------------------------

def epsilon(a: int, t: int) -> int:
    """Number of k >= 0 with a * 2^k <= 2^t - 1, for odd 1 <= a <= 2^t - 1.

    This equals 1 for a = 2^t - 1 and ceil(log2((2^t - 1) / a)) otherwise.
    """
    T = (1 << t) - 1
    if a % 2 == 0 or not 1 <= a <= T:
        raise ValueError("a must be odd with 1 <= a <= 2^t - 1")
    k = 0
    while a << k <= T:
        k += 1
    return k


def kappa(a: int, t: int) -> int:
    return epsilon(a, t) % 2


@dataclass(frozen=True)
class EpsilonTable:
    t: int
    eps: dict
    kap: dict

    @property
    def T(self) -> int:
        return (1 << self.t) - 1

    def odd_count(self) -> int:
        return sum(self.kap.values())


def epsilon_table(t: int) -> EpsilonTable:
    T = (1 << t) - 1
    eps = {a: epsilon(a, t) for a in range(1, T + 1, 2)}
    return EpsilonTable(t, eps, {a: e % 2 for a, e in eps.items()})


def odd_kappa_exponents(h: int, start: int = 3) -> list[int]:
    """Odd a in [start, 2^h - 1] with kappa_a = 1."""
    return [a for a in range(start, 1 << h, 2) if kappa(a, h)]


# --------------------------------------------------------------------------
# (m, h) regimes
# --------------------------------------------------------------------------

def in_low(m: int, h: int) -> bool:
    return 1 <= h and 4 * h <= m - mod4_r(m)


def in_mid(m: int, h: int) -> bool:
    return 1 <= h and m >= 3 * h and 4 * h > m - mod4_r(m)


def in_high(m: int, h: int) -> bool:
    return 1 <= h and m < 3 * h and 5 * h < 2 * m + 3


def in_open_range(m: int, h: int) -> bool:
    """h between the low regime and the general upper limit (m - r)/2."""
    r = mod4_r(m)
    return 4 * h > m - r and 2 * h <= m - r


def regime(m: int, h: int) -> str | None:
    if in_low(m, h):
        return "low"
    if in_mid(m, h):
        return "mid"
    if in_high(m, h):
        return "high"
    return None


# --------------------------------------------------------------------------
# index sets
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class KasamiIndexSets:
    m: int
    h: int
    A: tuple
    B: tuple
    B_star: tuple
    B2: tuple
    B2p: tuple
    B2pp: tuple
    u: dict = dc_field(repr=False)
    v: dict = dc_field(repr=False)

    @property
    def top(self) -> int:
        return 1 << (self.m - self.h)


def b2p_size_formula(m: int, h: int) -> int:
    return 4 * h - m - 1 - n2(m + 1)


def b2pp_size_formula(m: int, h: int) -> int:
    """m - 2h + 1 - N_2(m+1): the count used in the span derivations."""
    return m - 2 * h + 1 - n2(m + 1)


def b2pp_size_headline(m: int, h: int) -> int:
    """The headline count m - 2h - N_2(m+1), one less than direct construction."""
    return m - 2 * h - n2(m + 1)


def build_kasami_sets(m: int, h: int) -> KasamiIndexSets:
    if h < 1 or m < 2 * h:
        raise ValueError("need 1 <= h <= m/2")
    top = 1 << (m - h)
    A = tuple(range(1 << h))
    B = tuple(top + i for i in A)
    u = {i: u_of(i) for i in A}
    v = {i: v_of(i) for i in A}
    B_star = tuple(top + i for i in A if v[i] >= m - 2 * h + 1 and u[i] <= 3 * h - m - 2)
    B2 = tuple(top + (1 << i) for i in range(h))
    # B2' only makes sense for m >= 3h, where every shift is non-negative
    b2p = [(1 << (m - 3 * h + i)) + top for i in range(1, 4 * h - m)] if m >= 3 * h else []
    b2pp = [(1 << i) + top for i in range(0, m - 2 * h + 1)]
    if m % 2 == 0:
        drop_p = (1 << (2 * h - m // 2)) + top if 4 * h >= m else None
        drop_pp = (1 << (m // 2 - h)) + top
        b2p = [j for j in b2p if j != drop_p]
        b2pp = [j for j in b2pp if j != drop_pp]
    return KasamiIndexSets(m, h, A, B, B_star, B2, tuple(b2p), tuple(b2pp), u, v)


# --------------------------------------------------------------------------
# coset sizes of i + 2^(m-h)
# --------------------------------------------------------------------------

def predicted_b_size(m: int, h: int, j: int) -> int:
    """Size of the coset of j in B predicted from gcd(6, m) and h."""
    g = gcd(6, m)
    half = (1 << (m // 2 - h)) + (1 << (m - h)) if m % 2 == 0 and m // 2 >= h else None
    third = None
    if m % 3 == 0 and m // 3 >= h:
        third = (1 << (m // 3 - h)) + (1 << (2 * m // 3 - h)) + (1 << (m - h))
    if g == 1:
        return m
    if g == 2:
        if 4 * h <= m:
            return m
        return m // 2 if j == half else m
    if g == 3:
        if 3 * h <= m:
            return m
        return m // 3 if j == third else m
    # g == 6
    if 4 * h <= m:
        return m
    if 6 * h >= 2 * m + 3:
        if j == half:
            return m // 2
        if j == third:
            return m // 3
        return m
    return m // 2 if j == half else m


# --------------------------------------------------------------------------
# structural checks against direct coset computation
# --------------------------------------------------------------------------

@dataclass
class CheckReport:
    m: int
    h: int
    checked: list = dc_field(default_factory=list)
    violations: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, name: str, passed: bool, detail: str = ""):
        self.checked.append(name)
        if not passed:
            self.violations.append(f"{name}: {detail}" if detail else name)


def coset_structure_checks(m: int, h: int) -> CheckReport:
    """Verify the coset claims whose hypotheses (m, h) satisfies."""
    n = (1 << m) - 1
    rep = CheckReport(m, h)
    if h < 1 or 2 * h > m:
        return rep
    S = build_kasami_sets(m, h)
    cos = {j: coset_of(2, n, j) for j in S.B}
    odd_A = [j for j in S.A if j % 2 == 1]

    if in_low(m, h):
        sizes_ok = all(cos[j].size == m for j in S.B)
        leaders = [cos[j].leader for j in S.B]
        rep.add("B cosets full size", sizes_ok)
        rep.add("B cosets disjoint", len(set(leaders)) == len(leaders))

    r = mod4_r(m)
    if m + 2 <= 3 * h and 2 * h <= m - r:
        bad = []
        for i in S.A:
            for j in odd_A:
                if (i + S.top) in coset_of(2, n, j).members and (i + S.top) not in S.B_star:
                    bad.append((i, j))
                elif coset_of(2, n, j).leader == cos[i + S.top].leader and (i + S.top) not in S.B_star:
                    bad.append((i, j))
        rep.add("B/odd-A overlaps lie in B*", not bad, str(bad[:4]))

    if 5 <= 5 * h < 2 * m + 3:
        bad = []
        for i in S.A:
            ci = cos[i + S.top]
            for j in odd_A:
                meet = ci.leader == coset_of(2, n, j).leader
                if meet != ((i, j) == (0, 1)):
                    bad.append((i, j))
        rep.add("B meets odd A only at (0, 1)", not bad, str(bad[:4]))

    if in_open_range(m, h):
        bad = [(j, cos[j].size, predicted_b_size(m, h, j)) for j in S.B if cos[j].size != predicted_b_size(m, h, j)]
        rep.add("B coset sizes", not bad, str(bad[:4]))

        Bset = set(S.B)
        B2set = set(S.B2)
        rest = [j for j in S.B if j not in B2set]
        lds = [cos[j].leader for j in rest]
        rep.add("B minus B2 disjoint", len(set(lds)) == len(lds))
        cprime = {j: sorted(set(cos[j].members) & Bset) for j in S.B}
        rep.add("shared cosets have weight 2", all(bin(j).count("1") == 2 for j, c in cprime.items() if len(c) > 1))
        rep.add("shared cosets hold two B elements", all(len(c) <= 2 for c in cprime.values()))
        target = set(S.B2p) if m >= 3 * h else set(S.B2pp)
        paired = {j for j, c in cprime.items() if len(c) == 2}
        rep.add("paired elements match B2' / B2''", paired == target, f"{sorted(paired)} vs {sorted(target)}")
    return rep
