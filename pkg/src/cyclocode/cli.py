"""Command-line front end: ``cyclocode <subcommand> ...``.

Exit status is 0 on success, 1 when a verification finds a mismatch and 2 on
bad input.  JSON reports carry ``"schema": 1``, the seed and the resolved
field polynomials so a run can be repeated exactly.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import __version__
from .catalog import FAMILIES, ddt, resolve
from .codes import CyclicCode, code_from_sequence, dual
from .cyclotomic import partition
from .distance import min_distance
from .errors import CyclocodeError
from .field import TowerView, build_tower
from .poly import Poly, parse_poly_text
from .sequence import (
    MonomialFunction,
    expand_symbolic,
    generate,
    span_from_bm,
    span_from_expansion,
)
from .verify import LEMMAS, SWEEP_COLUMNS, sweep, verify_lemma

SCHEMA = 1


class UsageError(Exception):
    """Bad flag combination; reported with exit status 2."""


# --------------------------------------------------------------------------
# helpers
# --------------------------------------------------------------------------

def _poly_text(coeffs, p: int) -> str:
    from .field import prime_field

    return Poly(prime_field(p), list(coeffs)).to_text()


def _tower_from_args(args) -> TowerView:
    p, s, m = args.p, args.s, args.m
    if m is None:
        raise UsageError("--m is required")
    base = None
    if args.base_poly:
        try:
            base = parse_poly_text(args.base_poly, p=p)
        except ValueError as e:
            raise UsageError(f"--base-poly: {e}") from None
    ext = None
    if args.poly:
        try:
            if s == 1:
                ext = parse_poly_text(args.poly, p=p)
            else:
                from .field import Field, default_defining_poly

                small = Field(p, base if base is not None else default_defining_poly(p, s))
                ext = parse_poly_text(args.poly, field=small)
        except ValueError as e:
            raise UsageError(f"--poly: {e}") from None
    return build_tower(p, s, m, base_poly=base, ext_poly=ext)


def describe_tower(tower: TowerView, args=None) -> dict:
    out = {
        "p": tower.p,
        "s": tower.s,
        "m": tower.m,
        "q": tower.q,
        "n": tower.n,
        "big_poly": _poly_text(tower.big.poly, tower.p),
        "alpha_is_x": tower.big.x_is_primitive,
    }
    if tower.s > 1:
        out["base_poly"] = _poly_text(tower.small.poly, tower.p)
    if args is not None:
        out["ext_poly"] = args.poly
        out["base_poly_arg"] = args.base_poly
    return out


def _function_from_args(args, q: int) -> tuple[MonomialFunction, dict]:
    fam = args.function
    if fam is None:
        raise UsageError("--function is required")
    try:
        spec = resolve(fam, args.m, args.h, q=q, d=args.d)
    except CyclocodeError as e:
        raise UsageError(f"--function {fam}: {e}") from None
    return MonomialFunction(spec.d, fam), spec.to_json()


def _emit(obj, fmt: str = "json", out=None):
    out = out or sys.stdout
    if fmt == "json":
        out.write(json.dumps(obj, indent=2) + "\n")
        return
    rows = obj if isinstance(obj, list) else obj.get("rows", [])
    if fmt == "csv":
        if not rows:
            return
        cols = list(rows[0].keys())
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for r in rows:
            w.writerow({k: (json.dumps(v) if isinstance(v, (list, dict)) else v) for k, v in r.items()})
        out.write(buf.getvalue())
        return
    for r in rows:
        out.write(" ".join(f"{k}={v}" for k, v in r.items()) + "\n")


def _header(command: str, args) -> dict:
    return {"schema": SCHEMA, "command": command, "seed": getattr(args, "seed", 0)}


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_field(args) -> int:
    tower = _tower_from_args(args)
    out = _header("field", args)
    out["field"] = describe_tower(tower, args)
    out["embedding_ok"] = tower.check_embedding(seed=args.seed)
    _emit(out)
    return 0


def cmd_cosets(args) -> int:
    part = partition(args.q, args.n)
    rows = []
    for c in part:
        r = {"leader": c.leader, "size": c.size}
        if not args.leader_only:
            r["members"] = list(c.members)
        rows.append(r)
    _emit(rows, args.emit)
    return 0


def cmd_sequence(args) -> int:
    tower = _tower_from_args(args)
    f, fspec = _function_from_args(args, tower.q)
    seq = generate(tower, f)
    out = _header("sequence", args)
    out["field"] = describe_tower(tower, args)
    out["function"] = fspec
    if args.emit == "period":
        out["period"] = seq.values.tolist()
    elif args.emit == "expansion":
        exp = expand_symbolic(tower, f)
        out["expansion"] = {str(k): v for k, v in sorted(exp.coeffs.items())}
        out["I"] = exp.indices
        out["L"] = exp.span
    else:
        bm = span_from_bm(seq)
        sym = span_from_expansion(expand_symbolic(tower, f))
        out["L"] = bm.L
        out["Ms_unit_constant"] = bm.Ms_unit.to_text()
        out["Ms_monic"] = bm.Ms_monic.to_text()
        out["I_leaders"] = sorted(expand_symbolic(tower, f).coeffs)
        out["agrees_with_expansion"] = bm.L == sym.L and bm.Ms_monic == sym.Ms_monic
        _emit(out)
        return 0 if out["agrees_with_expansion"] else 1
    _emit(out)
    return 0


def _distance(code: CyclicCode, args):
    if args.distance == "none":
        return None
    mode = {"exact": "exact", "bounds": "bounds", "auto": "auto"}[args.distance]
    return min_distance(code, mode=mode, budget=args.budget, seed=args.seed)


def cmd_code(args) -> int:
    if args.from_json:
        return _code_from_json(args)
    tower = _tower_from_args(args)
    f, fspec = _function_from_args(args, tower.q)
    seq = generate(tower, f)
    code = code_from_sequence(seq)
    bm = span_from_bm(seq)
    _distance(code, args)
    out = _header("code", args)
    out["field"] = describe_tower(tower, args)
    out["function"] = fspec
    out.update(code.to_json())
    out["generator_matches_minimal_poly"] = code.g == bm.Ms_monic
    if args.dual:
        dc = dual(code)
        _distance(dc, args)
        out["dual"] = dc.to_json()
    _emit(out)
    return 0 if out["generator_matches_minimal_poly"] else 1


def _code_from_json(args) -> int:
    try:
        with open(args.from_json) as fh:
            obj = json.load(fh)
    except (OSError, ValueError) as e:
        raise UsageError(f"--from-json: {e}") from None
    fd = obj.get("field") or {}
    try:
        p, s, m = fd["p"], fd["s"], fd["m"]
        coeffs = obj["g_coeffs"]
    except KeyError as e:
        raise UsageError(f"--from-json: missing key {e}") from None
    ns = argparse.Namespace(p=p, s=s, m=m, poly=fd.get("ext_poly"), base_poly=fd.get("base_poly_arg"))
    tower = _tower_from_args(ns)
    problems = []
    if _poly_text(tower.big.poly, p) != fd.get("big_poly"):
        problems.append("field polynomial differs")
    code = CyclicCode(tower, obj.get("n", tower.n), Poly(tower.small, coeffs))
    if code.k != obj.get("k"):
        problems.append(f"k={code.k} but report says {obj.get('k')}")
    if code.n != tower.n:
        problems.append("length differs from q^m - 1")
    out = _header("code", args)
    out["field"] = describe_tower(tower, ns)
    out.update(code.to_json())
    out["reingested"] = True
    out["problems"] = problems
    _emit(out)
    return 1 if problems else 0


def cmd_ddt(args) -> int:
    q = args.p**args.s
    try:
        spec = resolve(args.family, args.m, args.h, q=q, d=args.d)
    except CyclocodeError as e:
        raise UsageError(f"--family {args.family}: {e}") from None
    tower = _tower_from_args(args)
    summary = ddt(spec, tower.big)
    out = _header("ddt", args)
    out["field"] = describe_tower(tower, args)
    out["function"] = spec.to_json()
    out.update(summary.to_json())
    ok = spec.claimed is None or summary.delta == spec.claimed
    out["matches_claim"] = ok if spec.claimed is not None else None
    _emit(out)
    return 0 if ok else 1


def cmd_verify(args) -> int:
    if args.lemma not in LEMMAS:
        raise UsageError(f"--lemma must be one of {', '.join(LEMMAS)}")
    rows = verify_lemma(args.lemma, args.m_max)
    failed = sum(1 for r in rows if not r["ok"])
    if args.emit == "json":
        out = _header("verify", args)
        out.update({"lemma": args.lemma, "m_max": args.m_max, "cells": len(rows), "failed": failed, "rows": rows})
        _emit(out)
    else:
        _emit(rows, args.emit)
    return 1 if failed else 0


def cmd_sweep(args) -> int:
    rows = sweep(
        args.function,
        m_min=args.m_min,
        m_max=args.m_max,
        p=args.p,
        s=args.s,
        mode=args.distance,
        budget=args.budget,
        seed=args.seed,
    )
    if args.emit == "json":
        out = _header("sweep", args)
        out.update({"function": args.function, "columns": list(SWEEP_COLUMNS), "rows": rows})
        _emit(out)
    else:
        _emit(rows, args.emit)
    return 0


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------

def _field_flags(sp, need_m: bool = True):
    sp.add_argument("--p", type=int, default=2, help="characteristic")
    sp.add_argument("--s", type=int, default=1, help="GF(q) has q = p^s")
    sp.add_argument("--m", type=int, required=need_m, help="extension degree over GF(q)")
    sp.add_argument("--poly", help="defining polynomial of GF(q^m) over GF(q), e.g. 'x^5+x^2+1'")
    sp.add_argument("--base-poly", dest="base_poly", help="defining polynomial of GF(q) over GF(p)")
    sp.add_argument("--seed", type=int, default=0)


def _function_flags(sp):
    sp.add_argument("--function", choices=FAMILIES, help="monomial family")
    sp.add_argument("--h", type=int, help="family parameter h")
    sp.add_argument("--d", type=int, help="exponent for raw_exponent")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cyclocode", description="Cyclic codes from monomial trace sequences.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("field", help="describe GF(q^m) and its subfield")
    _field_flags(sp)
    sp.set_defaults(func=cmd_field)

    sp = sub.add_parser("cosets", help="q-cyclotomic cosets modulo n")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--leader-only", action="store_true")
    sp.add_argument("--emit", choices=("json", "csv", "text"), default="json")
    sp.set_defaults(func=cmd_cosets)

    sp = sub.add_parser("sequence", help="trace sequence and its minimal polynomial")
    _field_flags(sp)
    _function_flags(sp)
    sp.add_argument("--emit", choices=("span", "period", "expansion"), default="span")
    sp.set_defaults(func=cmd_sequence)

    sp = sub.add_parser("code", help="cyclic code defined by a trace sequence")
    _field_flags(sp, need_m=False)
    _function_flags(sp)
    sp.add_argument("--distance", choices=("auto", "exact", "bounds", "none"), default="auto")
    sp.add_argument("--budget", type=int, default=200, help="information-set iterations")
    sp.add_argument("--dual", action="store_true", help="also report the dual code")
    sp.add_argument("--from-json", dest="from_json", help="re-check a previously written code report")
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("ddt", help="difference distribution table summary")
    _field_flags(sp)
    sp.add_argument("--family", choices=FAMILIES, required=True)
    sp.add_argument("--h", type=int)
    sp.add_argument("--d", type=int)
    sp.set_defaults(func=cmd_ddt)

    sp = sub.add_parser("verify", help="check closed forms against computation")
    sp.add_argument("--lemma", required=True, help=", ".join(LEMMAS))
    sp.add_argument("--m-max", dest="m_max", type=int, default=13)
    sp.add_argument("--emit", choices=("json", "csv", "text"), default="json")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="code parameters over a range of m and h")
    sp.add_argument("--function", choices=FAMILIES, required=True)
    sp.add_argument("--p", type=int, default=2)
    sp.add_argument("--s", type=int, default=1)
    sp.add_argument("--m-min", dest="m_min", type=int, default=3)
    sp.add_argument("--m-max", dest="m_max", type=int, default=10)
    sp.add_argument("--distance", choices=("auto", "exact", "bounds"), default="auto")
    sp.add_argument("--budget", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--emit", choices=("json", "csv", "text"), default="csv")
    sp.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"cyclocode {args.command}: {e}", file=sys.stderr)
        return 2
    except (CyclocodeError, ValueError) as e:
        print(f"cyclocode {args.command}: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
