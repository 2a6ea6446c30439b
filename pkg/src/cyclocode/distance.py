"""Minimum distance: exhaustive enumeration, MacWilliams, and upper-bound searches.

Three routes, cheapest applicable first:

* enumerate the code (or its dual, then apply MacWilliams) when the number of
  words is at most ``2**threshold``;
* otherwise bound from below by the BCH bound (plus one for even-weight binary
  codes) and from above by the lightest codeword found by
  - lifting codewords of short cyclic codes: if eta | n and P(x) lies in the
    length-eta code whose zeros are the defining set reduced mod eta, then
    P(x^(n/eta)) is a codeword of the same weight;
  - Lee-Brickell information-set sampling on a random column permutation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .codes import (
    CyclicCode,
    DistanceRecord,
    WeightDistribution,
    bch_bound,
    dual,
    macwilliams,
    macwilliams_min_distance,
)
from .cyclotomic import coset_of
from .field import Field
from .poly import Poly

DEFAULT_THRESHOLD = 24
DEFAULT_BUDGET = 200


# --------------------------------------------------------------------------
# bit packing helpers (binary codes)
# --------------------------------------------------------------------------

def pack_rows(M: np.ndarray) -> np.ndarray:
    """Pack a 0/1 matrix (rows x n) into little-endian uint64 words."""
    M = np.asarray(M, dtype=np.uint8)
    rows, n = M.shape
    nbytes = -(-n // 64) * 8
    packed = np.packbits(M, axis=1, bitorder="little")
    out = np.zeros((rows, nbytes), dtype=np.uint8)
    out[:, : packed.shape[1]] = packed
    return out.view("<u8")


def unpack_row(words: np.ndarray, n: int) -> np.ndarray:
    raw = np.ascontiguousarray(words, dtype="<u8").view(np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(np.int64)


def _popcount_rows(X: np.ndarray) -> np.ndarray:
    return np.bitwise_count(X).sum(axis=-1, dtype=np.int64)


# --------------------------------------------------------------------------
# exhaustive enumeration
# --------------------------------------------------------------------------

@dataclass
class Enumeration:
    distribution: WeightDistribution
    witness: np.ndarray | None  # a nonzero codeword of minimum weight


def _span_table_binary(rows: np.ndarray) -> np.ndarray:
    W = rows.shape[1] if rows.ndim == 2 else 1
    T = np.zeros((1, W), dtype=np.uint64)
    for r in rows:
        T = np.concatenate([T, T ^ r])
    return T


def _enumerate_binary(G: np.ndarray) -> Enumeration:
    k, n = G.shape
    rows = pack_rows(G)
    k1 = k // 2
    T1 = _span_table_binary(rows[:k1])
    T2 = _span_table_binary(rows[k1:])
    counts = np.zeros(n + 1, dtype=np.int64)
    best_w, best = n + 1, None
    for j, t in enumerate(T2):
        w = _popcount_rows(T1 ^ t)
        counts += np.bincount(w, minlength=n + 1)
        if j == 0:
            w = w.copy()
            w[0] = n + 1
        i = int(np.argmin(w))
        if w[i] < best_w:
            best_w, best = int(w[i]), T1[i] ^ t
    witness = None if best is None or best_w > n else unpack_row(best, n)
    return Enumeration(WeightDistribution([int(c) for c in counts], 2), witness)


def _span_table_field(F: Field, rows: np.ndarray) -> np.ndarray:
    T = np.zeros((1, rows.shape[1]), dtype=np.int64)
    for r in rows:
        parts = [T] + [F.vadd(T, F.vmul(r, c)[None, :]) for c in range(1, F.order)]
        T = np.concatenate(parts)
    return T


def _enumerate_field(F: Field, G: np.ndarray) -> Enumeration:
    k, n = G.shape
    k1 = k // 2
    T1 = _span_table_field(F, G[:k1])
    T2 = _span_table_field(F, G[k1:])
    counts = np.zeros(n + 1, dtype=np.int64)
    best_w, best = n + 1, None
    for j, t in enumerate(T2):
        X = F.vadd(T1, t[None, :])
        w = np.count_nonzero(X, axis=1)
        counts += np.bincount(w, minlength=n + 1)
        if j == 0:
            w[0] = n + 1
        i = int(np.argmin(w))
        if w[i] < best_w:
            best_w, best = int(w[i]), X[i]
    witness = None if best is None or best_w > n else best.astype(np.int64)
    return Enumeration(WeightDistribution([int(c) for c in counts], F.order), witness)


def enumerate_code(code: CyclicCode) -> Enumeration:
    """Full weight distribution by walking every codeword."""
    G = code.generator_matrix()
    if code.k == 0:
        return Enumeration(WeightDistribution([1] + [0] * code.n, code.q), None)
    F = code.field
    if F.p == 2 and F.degree == 1:
        return _enumerate_binary(G)
    return _enumerate_field(F, G)


def weight_distribution_via_dual(code: CyclicCode) -> WeightDistribution:
    dc = dual(code)
    wd = enumerate_code(dc).distribution
    return macwilliams(wd, code.n, dc.k, code.q)


def words_log2(k: int, q: int) -> float:
    return k * math.log2(q)


# --------------------------------------------------------------------------
# lower bounds
# --------------------------------------------------------------------------

def lower_bound(code: CyclicCode) -> tuple[int, list[str]]:
    d = bch_bound(code)
    tags = ["bch"]
    if code.q == 2 and 0 in code.zeros() and d % 2 == 1 and d <= code.n:
        d += 1  # every codeword vanishes at 1, so every weight is even
        tags.append("even-weight")
    return d, tags


# --------------------------------------------------------------------------
# upper bounds by lifting short cyclic codes
# --------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    return [d for d in range(2, n) if n % d == 0]


def short_code(code: CyclicCode, eta: int) -> CyclicCode:
    """Length-eta cyclic code whose zeros are the defining set reduced mod eta."""
    zs = sorted({z % eta for z in code.zeros()})
    tower = code.tower
    big = tower.big
    step = tower.n // eta
    roots = [big.exp(j * step) for j in zs]
    g_big = Poly.from_roots(big, roots)
    g = Poly(tower.small, tower.vto_small(g_big.coeffs))
    return CyclicCode(tower, eta, g)


def lift(word: np.ndarray, n: int) -> np.ndarray:
    """Coefficients of P(x^(n/eta)) for a length-eta word P."""
    eta = len(word)
    out = np.zeros(n, dtype=np.int64)
    out[:: n // eta] = word
    return out


def lifted_search(code: CyclicCode, threshold: float = 20.0) -> tuple[int | None, np.ndarray | None]:
    best_w, best = None, None
    for eta in _divisors(code.n):
        sub = short_code(code, eta)
        if sub.k == 0 or words_log2(sub.k, sub.q) > threshold:
            continue
        en = enumerate_code(sub)
        if en.witness is None:
            continue
        w = int(np.count_nonzero(en.witness))
        if best_w is None or w < best_w:
            best_w, best = w, lift(en.witness, code.n)
    return best_w, best


# --------------------------------------------------------------------------
# information-set sampling
# --------------------------------------------------------------------------

def _systematic_binary(M: np.ndarray, perm: np.ndarray):
    """Reduce the rows of M[:, perm] to echelon form; return pivot and free columns.

    Returns (pivot_cols, free_cols, R) where R is the reduced packed matrix,
    indices refer to positions in the permuted order.
    """
    A = M[:, perm].astype(np.uint8)
    r, n = A.shape
    P = pack_rows(A)
    pivots = []
    row = 0
    for col in range(n):
        if row == r:
            break
        w, b = divmod(col, 64)
        bits = (P[row:, w] >> np.uint64(b)) & np.uint64(1)
        nz = np.flatnonzero(bits)
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            P[[row, pr]] = P[[pr, row]]
        colbits = ((P[:, w] >> np.uint64(b)) & np.uint64(1)).astype(bool)
        colbits[row] = False
        P[colbits] ^= P[row]
        pivots.append(col)
        row += 1
    P = P[:row]
    piv = np.array(pivots, dtype=np.int64)
    mask = np.ones(n, dtype=bool)
    mask[piv] = False
    free = np.flatnonzero(mask)
    return piv, free, P


def _free_columns_packed(P: np.ndarray, free: np.ndarray, rows: int) -> np.ndarray:
    """Columns of the reduced matrix at ``free`` positions, each packed as a row."""
    bits = np.unpackbits(np.ascontiguousarray(P).view(np.uint8), axis=1, bitorder="little")
    cols = bits[:rows, free].T
    return pack_rows(cols)


def _lee_brickell_binary(V: np.ndarray, p_max: int, target: int):
    """Lightest sum of at most p_max vectors among V (N x W packed), cost = popcount + count."""
    N = V.shape[0]
    best = (None, None)

    def consider(w, sel):
        nonlocal best
        if best[0] is None or w < best[0]:
            best = (int(w), tuple(int(s) for s in sel))

    w1 = _popcount_rows(V) + 1
    i = int(np.argmin(w1))
    consider(w1[i], (i,))
    if p_max < 2 or N < 2 or best[0] <= target:
        return best
    for j in range(1, N):
        w2 = _popcount_rows(V[:j] ^ V[j]) + 2
        i = int(np.argmin(w2))
        if w2[i] < best[0]:
            consider(w2[i], (i, j))
    if p_max < 3 or N < 3 or best[0] <= target:
        return best
    ii, jj = np.triu_indices(N, k=1)
    order = np.lexsort((ii, jj))  # pairs grouped by larger index
    ii, jj = ii[order], jj[order]
    pairs = V[ii] ^ V[jj]
    for l in range(2, N):
        m = l * (l - 1) // 2
        w3 = _popcount_rows(pairs[:m] ^ V[l]) + 3
        t = int(np.argmin(w3))
        if w3[t] < best[0]:
            consider(w3[t], (int(ii[t]), int(jj[t]), l))
            if best[0] <= target:
                break
    return best


def isd_binary(code: CyclicCode, iterations: int, seed: int, target: int, p_max: int | None = None):
    """Lee-Brickell sampling; returns (weight, codeword) of the lightest word found."""
    n, k = code.n, code.k
    H = code.parity_check_matrix()
    r = H.shape[0]
    if p_max is None:
        p_max = 3 if math.comb(k, 3) * max(1, -(-r // 64)) <= 30_000_000 else 2
    rng = np.random.default_rng(seed)
    best_w, best = None, None
    for _ in range(iterations):
        perm = rng.permutation(n)
        piv, free, P = _systematic_binary(H, perm)
        V = _free_columns_packed(P, free, len(piv))
        w, sel = _lee_brickell_binary(V, p_max, target)
        if w is None:
            continue
        if best_w is None or w < best_w:
            word = np.zeros(n, dtype=np.int64)
            acc = np.zeros(V.shape[1], dtype=np.uint64)
            for s in sel:
                word[perm[free[s]]] = 1
                acc ^= V[s]
            colbits = unpack_row(acc, len(piv))
            word[perm[piv[colbits == 1]]] = 1
            best_w, best = w, word
        if best_w <= target:
            break
    return best_w, best


def _systematic_field(F: Field, M: np.ndarray, perm: np.ndarray):
    A = M[:, perm].astype(np.int64).copy()
    r, n = A.shape
    pivots = []
    row = 0
    for col in range(n):
        if row == r:
            break
        nz = np.flatnonzero(A[row:, col])
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            A[[row, pr]] = A[[pr, row]]
        A[row] = F.vmul(A[row], F.inv(int(A[row, col])))
        for rr in np.flatnonzero(A[:, col]):
            if rr != row:
                A[rr] = F.vsub(A[rr], F.vmul(A[row], int(A[rr, col])))
        pivots.append(col)
        row += 1
    A = A[:row]
    piv = np.array(pivots, dtype=np.int64)
    mask = np.ones(n, dtype=bool)
    mask[piv] = False
    return piv, np.flatnonzero(mask), A


def isd_field(code: CyclicCode, iterations: int, seed: int, target: int, max_pairs: int = 2_000_000):
    """Lee-Brickell over GF(q) with at most two information positions."""
    F = code.field
    n = code.n
    H = code.parity_check_matrix()
    rng = np.random.default_rng(seed)
    best_w, best = None, None
    for _ in range(iterations):
        perm = rng.permutation(n)
        piv, free, A = _systematic_field(F, H, perm)
        V = A[:, free].T  # one vector per free column
        N = V.shape[0]
        # a word with x on the free positions has -A x on the pivots
        cand = []
        w1 = np.count_nonzero(V, axis=1) + 1
        i = int(np.argmin(w1))
        cand.append((int(w1[i]), [(i, 1)]))
        if N * (N - 1) // 2 * (F.order - 1) <= max_pairs and cand[0][0] > target:
            for j in range(1, N):
                for c in range(1, F.order):
                    X = F.vadd(V[:j], F.vmul(V[j], c)[None, :])
                    w2 = np.count_nonzero(X, axis=1) + 2
                    t = int(np.argmin(w2))
                    if w2[t] < cand[-1][0]:
                        cand.append((int(w2[t]), [(t, 1), (j, c)]))
        w, sel = min(cand, key=lambda x: x[0])
        if best_w is None or w < best_w:
            word = np.zeros(n, dtype=np.int64)
            acc = np.zeros(V.shape[1], dtype=np.int64)
            for s, c in sel:
                word[perm[free[s]]] = c
                acc = F.vadd(acc, F.vmul(V[s], c))
            word[perm[piv]] = F.vneg(acc)
            best_w, best = w, word
        if best_w <= target:
            break
    return best_w, best


# --------------------------------------------------------------------------
# driver
# --------------------------------------------------------------------------

def _witness(word: np.ndarray) -> dict:
    support = np.flatnonzero(word)
    return {"support": [int(s) for s in support], "values": [int(word[s]) for s in support]}


def min_distance(
    code: CyclicCode,
    mode: str = "auto",
    threshold: int = DEFAULT_THRESHOLD,
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
) -> DistanceRecord:
    """Exact distance when enumeration is affordable, otherwise certified bounds.

    ``mode`` is ``"auto"`` (exact when cheap), ``"exact"`` (same, but never
    skip the exhaustive routes) or ``"bounds"`` (never enumerate the full code).
    The result is also stored on ``code.distance``.
    """
    n, k, q = code.n, code.k, code.q
    if k == 0:
        rec = DistanceRecord(None, None, True, ["zero-code"])
        code.distance = rec
        return rec
    if mode != "bounds":
        if words_log2(k, q) <= threshold:
            en = enumerate_code(code)
            d = en.distribution.min_distance()
            rec = DistanceRecord(d, d, True, ["enumerate"], _witness(en.witness))
            code.distance = rec
            return rec
        if words_log2(n - k, q) <= threshold:
            dc = dual(code)
            d = macwilliams_min_distance(enumerate_code(dc).distribution, n, dc.k, q)
            rec = DistanceRecord(d, d, True, ["dual-macwilliams"])
            code.distance = rec
            return rec

    lower, tags = lower_bound(code)
    upper, word = None, None
    w, c = lifted_search(code)
    if w is not None:
        upper, word = w, c
        tags.append("lift")
    if upper is None or upper > lower:
        if q == 2:
            w, c = isd_binary(code, budget, seed, target=lower)
        else:
            w, c = isd_field(code, budget, seed, target=lower)
        if w is not None and (upper is None or w < upper):
            upper, word = w, c
            tags.append("isd")
    if upper is not None and upper < lower:
        raise AssertionError("upper bound below a certified lower bound")
    rec = DistanceRecord(lower, upper, upper == lower, tags, None if word is None else _witness(word))
    code.distance = rec
    return rec
