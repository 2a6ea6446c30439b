"""Slow, independent reference implementations used only by the tests.

Nothing here imports the package: field arithmetic is redone with plain
integers so that agreement means something.
"""

from __future__ import annotations

from itertools import product


# ---- GF(2^m) with bit-packed elements -------------------------------------

def gf2m_mul(a: int, b: int, poly: int, m: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> m & 1:
            a ^= poly
    return r


def gf2m_pow(a: int, k: int, poly: int, m: int) -> int:
    r = 1
    while k:
        if k & 1:
            r = gf2m_mul(r, a, poly, m)
        a = gf2m_mul(a, a, poly, m)
        k >>= 1
    return r


def gf2m_trace(a: int, poly: int, m: int) -> int:
    t, x = 0, a
    for _ in range(m):
        t ^= x
        x = gf2m_mul(x, x, poly, m)
    return t  # 0 or 1


def binary_trace_sequence(poly: int, m: int, d: int) -> list[int]:
    """s_t = Tr((alpha^t + 1)^d), alpha = x, one period."""
    n = (1 << m) - 1
    out = []
    a = 1
    for _ in range(n):
        out.append(gf2m_trace(gf2m_pow(a ^ 1, d, poly, m), poly, m))
        a = gf2m_mul(a, 2, poly, m)
    return out


# ---- GF(p) linear algebra -------------------------------------------------

def rank_mod_p(rows: list[list[int]], p: int) -> int:
    M = [list(r) for r in rows]
    rank = 0
    cols = len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c] % p), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = pow(M[rank][c], p - 2, p)
        M[rank] = [v * inv % p for v in M[rank]]
        for r in range(len(M)):
            if r != rank and M[r][c] % p:
                f = M[r][c]
                M[r] = [(v - f * w) % p for v, w in zip(M[r], M[rank])]
        rank += 1
    return rank


def linear_complexity_periodic(seq: list[int], p: int) -> int:
    """Rank of the n x n Hankel matrix s_{i+j mod n}."""
    n = len(seq)
    return rank_mod_p([[seq[(i + j) % n] for j in range(n)] for i in range(n)], p)


# ---- codes ------------------------------------------------------------------

def min_distance_bruteforce(G: list[list[int]], q: int) -> int:
    """Minimum nonzero weight over all q^k combinations (prime q only)."""
    k = len(G)
    n = len(G[0])
    best = n + 1
    for coefs in product(range(q), repeat=k):
        if not any(coefs):
            continue
        w = 0
        for j in range(n):
            if sum(c * G[i][j] for i, c in enumerate(coefs)) % q:
                w += 1
        best = min(best, w)
    return best


def poly_mul_mod_p(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return out


# ---- counters and DDT ---------------------------------------------------------

def odd_epsilon_count(t: int) -> int:
    T = (1 << t) - 1
    cnt = 0
    for a in range(1, T + 1, 2):
        e = sum(1 for k in range(t + 1) if a * (1 << k) <= T)
        cnt += e % 2
    return cnt


def ddt_delta_binary(d: int, poly: int, m: int) -> int:
    N = 1 << m
    F = [gf2m_pow(x, d, poly, m) if x else 0 for x in range(N)]
    best = 0
    for a in range(1, N):
        counts = [0] * N
        for x in range(N):
            counts[F[x ^ a] ^ F[x]] += 1
        best = max(best, max(counts))
    return best
