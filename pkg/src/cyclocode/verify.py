"""Cross-checks between generated sequences, symbolic expansions and closed forms.

Work is split into independent cells (one field and one exponent each) that
can run in a process pool.  Results are always returned sorted, so output is
independent of scheduling.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field as dc_field
from math import gcd

from . import closed_forms as cf
from .catalog import resolve
from .codes import code_from_sequence
from .distance import min_distance
from .errors import ConditionUnmet, InconsistentInput
from .field import build_tower
from .kasami import (
    b2p_size_formula,
    b2pp_size_formula,
    b2pp_size_headline,
    build_kasami_sets,
    coset_structure_checks,
    epsilon_table,
    in_open_range,
    regime,
)
from .sequence import (
    MonomialFunction,
    check_reconstruction,
    expand_symbolic,
    generate,
    span_from_bm,
    span_from_expansion,
)


@dataclass(frozen=True, order=True)
class Cell:
    family: str
    p: int
    s: int
    m: int
    h: int
    d: int

    @property
    def q(self) -> int:
        return self.p**self.s


@dataclass
class CellResult:
    family: str
    p: int
    s: int
    m: int
    h: int
    d: int
    L_bm: int
    L_sym: int
    recon_ok: bool
    eq1_ok: bool
    x1_factor: bool
    profile: str | None = None
    L_profile: int | None = None
    profile_poly_ok: bool | None = None
    problems: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def thread_cap() -> int:
    raw = os.environ.get("CYCLOCODE_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return max(1, os.cpu_count() or 1)


def pmap(fn, items, threads: int | None = None) -> list:
    """Order-preserving map, in a process pool when more than one worker is allowed."""
    items = list(items)
    workers = min(thread_cap() if threads is None else threads, len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * workers))))


# --------------------------------------------------------------------------
# which profile applies to a cell
# --------------------------------------------------------------------------

def profile_for(cell: Cell):
    """The closed-form profile covering ``cell``, or None."""
    try:
        if cell.family == "gold":
            return cf.gold_profile(cell.q, cell.m, cell.h)
        if cell.family == "kasami" and cell.q == 2:
            return cf.kasami_profile(cell.m, cell.h)
        if cell.family == "bracken_leander":
            return cf.bracken_leander_profile(cell.m)
        if cell.family == "q23":
            return cf.q23_profile(cell.p, cell.s, cell.m)
        if cell.family == "ternary_h3":
            return cf.ternary_h3_profile(cell.m)
    except ConditionUnmet:
        return None
    return None


def check_cell(cell: Cell) -> CellResult:
    """Run every span route on one cell and compare them."""
    tower = build_tower(cell.p, cell.s, cell.m)
    f = MonomialFunction(cell.d)
    seq = generate(tower, f)
    bm = span_from_bm(seq)
    exp = expand_symbolic(tower, f)
    sym = span_from_expansion(exp)
    recon = check_reconstruction(exp, seq)
    code = code_from_sequence(seq)
    eq1 = code.g == bm.Ms_monic
    x1 = bm.Ms_monic.eval(1) == 0
    res = CellResult(cell.family, cell.p, cell.s, cell.m, cell.h, cell.d, bm.L, sym.L, recon, eq1, x1)
    if bm.L != sym.L or bm.Ms_monic != sym.Ms_monic:
        res.problems.append(f"BM span {bm.L} differs from expansion span {sym.L}")
    if not recon:
        res.problems.append("expansion does not reproduce the sequence")
    if not eq1:
        res.problems.append("generator differs from the monic minimal polynomial")
    prof = profile_for(cell)
    if prof is not None:
        res.profile = prof.rule
        res.L_profile = prof.L
        res.profile_poly_ok = prof.expected_monic(tower) == bm.Ms_monic
        if prof.L != bm.L:
            res.problems.append(f"{prof.rule}: predicted L={prof.L}, measured {bm.L}")
        if not res.profile_poly_ok:
            res.problems.append(f"{prof.rule}: factor list does not give the minimal polynomial")
    return res


# --------------------------------------------------------------------------
# cell enumeration
# --------------------------------------------------------------------------

def _binary_cells(max_order: int) -> list[Cell]:
    cells = []
    m_max = max_order.bit_length() - 1
    for m in range(3, m_max + 1):
        n = 2**m - 1
        cells.append(Cell("inverse", 2, 1, m, 0, resolve("inverse", m).d))
        for h in range(1, m):
            for fam in ("gold", "kasami", "welch", "niho1", "niho2", "dobbertin", "bracken_leander"):
                if fam == "niho1" and h % 2:
                    continue
                if fam == "niho2" and h % 2 == 0:
                    continue
                spec = resolve(fam, m, h)
                if spec.precondition and spec.d % n:
                    cells.append(Cell(fam, 2, 1, m, h, spec.d))
    return cells


def oracle_cells(max_order: int = 8192) -> list[Cell]:
    """Every family cell with valid parameters on a field of order <= max_order."""
    cells = _binary_cells(max_order)
    for p, s in ((2, 1), (2, 2), (3, 1), (5, 1), (7, 1)):
        q = p**s
        m = 6
        while q**m <= max_order:
            try:
                cf.q23_profile(p, s, m)
            except ConditionUnmet:
                m += 1
                continue
            cells.append(Cell("q23", p, s, m, 0, q * q + q + 1))
            m += 1
    m = 8
    while 3**m <= max_order:
        try:
            cf.ternary_h3_profile(m)
            cells.append(Cell("ternary_h3", 3, 1, m, 3, 14))
        except ConditionUnmet:
            pass
        m += 1
    return sorted(set(cells))


def run_cells(cells, threads: int | None = None) -> list[CellResult]:
    cells = sorted(cells)
    return pmap(check_cell, cells, threads)


# --------------------------------------------------------------------------
# lemma-level checks
# --------------------------------------------------------------------------

LEMMAS = (
    "gold",
    "kasami-low",
    "kasami-mid",
    "kasami-high",
    "bracken-leander",
    "q23",
    "ternary-h3",
    "x1-factor",
    "kasami-sets",
    "coset-structure",
    "counters",
    "gcd-identities",
)


def _kasami_cell(m: int, h: int) -> Cell:
    return Cell("kasami", 2, 1, m, h, 2 ** (2 * h) - 2**h + 1)


def lemma_cells(lemma: str, m_max: int) -> list[Cell]:
    if lemma == "gold":
        return [
            Cell("gold", 2, 1, m, h, 2**h + 1)
            for m in range(3, m_max + 1)
            for h in range(1, m)
            if (m % 2 and gcd(m, h) == 1) or (m % 4 == 2 and gcd(m, h) == 2)
        ]
    if lemma.startswith("kasami-"):
        want = lemma.split("-", 1)[1]
        return [_kasami_cell(m, h) for m in range(3, m_max + 1) for h in range(1, m // 2 + 1) if regime(m, h) == want]
    if lemma == "x1-factor":
        return [_kasami_cell(m, h) for m in range(3, m_max + 1) for h in range(1, m // 2 + 1) if (2 ** (2 * h) - 2**h + 1) % (2**m - 1)]
    if lemma == "bracken-leander":
        return [Cell("bracken_leander", 2, 1, m, m // 4, 2 ** (m // 2) + 2 ** (m // 4) + 1) for m in range(4, m_max + 1, 8)]
    if lemma == "q23":
        return [c for c in oracle_cells(1 << 16) if c.family == "q23" and c.m <= m_max]
    if lemma == "ternary-h3":
        return [Cell("ternary_h3", 3, 1, m, 3, 14) for m in range(8, m_max + 1) if m % 2 == 0 and m % 3 and 3**m <= 1 << 16]
    raise ValueError(f"unknown lemma {lemma!r}")


def _x1_row(cell: Cell) -> dict:
    tower = build_tower(2, 1, cell.m)
    bm = span_from_bm(generate(tower, MonomialFunction(cell.d)))
    has = bm.Ms_monic.eval(1) == 0
    return {"m": cell.m, "h": cell.h, "x1_factor": has, "ok": has == (cell.m % 2 == 1)}


def _sets_row(mh) -> dict:
    """Sizes of the Kasami sets against their headline formulas.

    B2' is checked where m >= 3h and B2'' where m < 3h, in both cases only
    for h inside the open-problem range where the sets are used.
    """
    m, h = mh
    S = build_kasami_sets(m, h)
    row = {"m": m, "h": h, "A": len(S.A), "B": len(S.B)}
    ok = len(S.A) == len(S.B) == 2**h
    row["B_star_in_B"] = set(S.B_star) <= set(S.B)
    ok &= row["B_star_in_B"]
    if in_open_range(m, h):
        if m >= 3 * h:
            row["B2p"] = len(S.B2p)
            row["B2p_formula"] = b2p_size_formula(m, h)
            ok &= row["B2p"] == row["B2p_formula"]
        else:
            row["B2pp"] = len(S.B2pp)
            row["B2pp_formula"] = b2pp_size_headline(m, h)
            row["B2pp_derivation_count"] = b2pp_size_formula(m, h)
            ok &= row["B2pp"] == row["B2pp_formula"]
    row["ok"] = bool(ok)
    return row


def _structure_row(mh) -> dict:
    m, h = mh
    rep = coset_structure_checks(m, h)
    return {"m": m, "h": h, "checked": rep.checked, "violations": rep.violations, "ok": rep.ok}


def _counter_rows(t_max: int = 16) -> list[dict]:
    rows = []
    for t in range(1, t_max + 1):
        brute = epsilon_table(t).odd_count()
        rows.append({"t": t, "N_t": cf.count_Nt(t), "brute": brute, "ok": brute == cf.count_Nt(t)})
    return rows


def _gcd_rows() -> list[dict]:
    rows = []
    for q in (2, 3, 4, 5):
        for m in range(1, 15):
            for h in range(1, 15):
                try:
                    v = cf.gcd_identity_tower(q, m, h)
                    rows.append({"identity": "tower", "q": q, "m": m, "h": h, "value": v, "ok": True})
                except InconsistentInput as e:
                    rows.append({"identity": "tower", "q": q, "m": m, "h": h, "error": str(e), "ok": False})
    for a in range(2, 6):
        for l in range(1, 13):
            for h in range(1, 13):
                try:
                    v = cf.gcd_identity_plus_one(a, l, h)
                    rows.append({"identity": "plus-one", "a": a, "l": l, "h": h, "value": v, "ok": True})
                except InconsistentInput as e:
                    rows.append({"identity": "plus-one", "a": a, "l": l, "h": h, "error": str(e), "ok": False})
    return rows


def verify_lemma(lemma: str, m_max: int = 13, threads: int | None = None) -> list[dict]:
    """Per-cell rows, each with an ``ok`` flag."""
    if lemma not in LEMMAS:
        raise ValueError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMAS)}")
    if lemma == "counters":
        return _counter_rows()
    if lemma == "gcd-identities":
        return _gcd_rows()
    pairs = [(m, h) for m in range(2, m_max + 1) for h in range(1, m // 2 + 1)]
    if lemma == "kasami-sets":
        return [_sets_row(x) for x in pairs]
    if lemma == "coset-structure":
        return pmap(_structure_row, [x for x in pairs if m_max >= x[0] >= 3], threads)
    cells = lemma_cells(lemma, m_max)
    if lemma == "x1-factor":
        return pmap(_x1_row, cells, threads)
    out = []
    for r in run_cells(cells, threads):
        row = r.to_json()
        out.append(row)
    return out


# --------------------------------------------------------------------------
# parameter sweeps with distances
# --------------------------------------------------------------------------

SWEEP_COLUMNS = ("m", "h", "q", "n", "k", "L_s", "d_lower", "d_upper", "exact")


@dataclass(frozen=True)
class SweepJob:
    family: str
    p: int
    s: int
    m: int
    h: int
    mode: str
    budget: int
    seed: int


def _sweep_row(job: SweepJob) -> dict:
    q = job.p**job.s
    spec = resolve(job.family, job.m, job.h or None, q=q)
    tower = build_tower(job.p, job.s, job.m)
    seq = generate(tower, MonomialFunction(spec.d))
    code = code_from_sequence(seq)
    rec = min_distance(code, mode=job.mode, budget=job.budget, seed=job.seed)
    return {
        "m": job.m,
        "h": job.h,
        "q": q,
        "n": code.n,
        "k": code.k,
        "L_s": code.g.degree,
        "d_lower": rec.lower,
        "d_upper": rec.upper,
        "exact": rec.exact,
    }


def sweep_jobs(family: str, m_min: int, m_max: int, p: int = 2, s: int = 1, mode: str = "bounds", budget: int = 50, seed: int = 0) -> list[SweepJob]:
    q = p**s
    jobs = []
    for m in range(m_min, m_max + 1):
        n = q**m - 1
        hs = [0] if family == "inverse" or family == "q23" else range(1, m // 2 + 1)
        for h in hs:
            try:
                spec = resolve(family, m, h or None, q=q)
            except Exception:
                continue
            if spec.d % n == 0:
                continue
            jobs.append(SweepJob(family, p, s, m, h, mode, budget, seed))
    return jobs


def sweep(family: str, m_min: int = 3, m_max: int = 10, p: int = 2, s: int = 1, mode: str = "auto", budget: int = 50, seed: int = 0, threads: int | None = None) -> list[dict]:
    jobs = sweep_jobs(family, m_min, m_max, p, s, mode, budget, seed)
    rows = pmap(_sweep_row, jobs, threads)
    return sorted(rows, key=lambda r: (r["m"], r["h"]))

