"""Command-line surface: doubling, predicate checks, enumeration, reduction
and its inverse, raw slides, and the verification reports.

Exit codes: 0 success, 1 bad input, 2 verification failure, 3 internal
invariant trap.  All output is deterministic JSON (or the fixed-width ASCII
layout with --format ascii).
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb

from .columns import is_admissible
from .enumeration import (
    enum_admissible_columns,
    enum_qs_sl,
    enum_qs_sp,
    enum_ss_sl,
    enum_ss_sp,
    shapes_up_to,
    verify_bijection,
)
from .errors import SptabError, TaquinInvariantError
from .letters import code as letter_code, from_code, letter_from_json, letter_to_json
from .plucker import contraction_matrix, exact_rank
from .tableaux import (
    Tableau,
    dble_tableau,
    dumps,
    first_grid_violation,
    is_semistandard_sl,
    is_semistandard_sp,
    nqs_rows,
    render,
    render_grid,
    tableau_from_json,
    tableau_to_json,
)
from .taquin_sp import (
    SpSkewColumn,
    SpSkewTableau,
    phi,
    psi,
    shed,
    sjdt_to_rest,
    state_to_json,
    trace_to_json,
)

__all__ = ["main"]


def _read_input(args) -> object:
    if args.file:
        with open(args.file) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SptabError(f"input is not JSON: {exc}") from exc


def _emit(obj: object) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _check_rank(args, t) -> None:
    if t.n != args.n:
        raise SptabError(f"--n {args.n} does not match the input rank {t.n}")


def cmd_double(args) -> int:
    t = tableau_from_json(_read_input(args))
    _check_rank(args, t)
    if t.kind != "sp":
        raise SptabError("double expects a symplectic tableau")
    grid = dble_tableau(t)
    if args.format == "ascii":
        print(render_grid(grid, t.n))
    else:
        cols = [[letter_to_json(from_code(c, t.n)) for c in col] for col in grid]
        _emit({"n": t.n, "kind": "double", "columns": cols})
    return 0


def cmd_check(args) -> int:
    data = _read_input(args)
    if args.predicate == "admissible" and isinstance(data, list):
        letters = [letter_from_json(v) for v in data]
        col = Tableau.sp(args.n, [tuple(letter_code(l, args.n) for l in letters)]).columns[0]
        _emit({"result": is_admissible(col), "violation": None})
        return 0
    t = tableau_from_json(data)
    _check_rank(args, t)
    violation = None
    if args.predicate == "admissible":
        result = True
        for j, col in enumerate(t.columns, start=1):
            if not is_admissible(col):
                result, violation = False, {"kind": "column", "col": j}
                break
    elif args.predicate == "ss-sp":
        result = is_semistandard_sp(t)
        if not result:
            for j, col in enumerate(t.columns, start=1):
                if not is_admissible(col):
                    violation = {"kind": "column", "col": j}
                    break
            else:
                kind, i, j = first_grid_violation(dble_tableau(t))
                violation = {"kind": kind, "row": i, "col": j}
    elif args.predicate == "qs-sp":
        rows = nqs_rows(dble_tableau(t))
        result = not rows
        if rows:
            violation = {"kind": "nqs-row", "row": rows[0]}
    elif args.predicate == "ss-sl":
        result = is_semistandard_sl(t)
        if not result:
            kind, i, j = first_grid_violation(t.grid())
            violation = {"kind": kind, "row": i, "col": j}
    elif args.predicate == "qs-sl":
        rows = nqs_rows(t.grid())
        result = not rows
        if rows:
            violation = {"kind": "nqs-row", "row": rows[0]}
    else:
        raise SptabError(f"unknown predicate {args.predicate}")
    _emit({"result": result, "violation": violation})
    return 0


def _parse_shape(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError as exc:
        raise SptabError(f"unreadable shape {text!r}") from exc


def cmd_enum(args) -> int:
    shape = _parse_shape(args.shape)
    if args.predicate == "admissible":
        if len(shape) != 1:
            raise SptabError("admissible enumeration takes a single height")
        items = [
            Tableau(args.n, "sp", (c,)) for c in enum_admissible_columns(args.n, shape[0])
        ]
    else:
        fn = {
            "ss-sp": enum_ss_sp,
            "qs-sp": enum_qs_sp,
            "ss-sl": enum_ss_sl,
            "qs-sl": enum_qs_sl,
        }.get(args.predicate)
        if fn is None:
            raise SptabError(f"unknown predicate {args.predicate}")
        items = fn(args.n, shape)
    if args.count:
        _emit({"count": len(items)})
        return 0
    for t in items:
        if args.format == "ascii":
            print(render(t))
            print()
        else:
            _emit(tableau_to_json(t))
    return 0


def cmd_phi(args) -> int:
    t = tableau_from_json(_read_input(args))
    _check_rank(args, t)
    if not is_semistandard_sp(t):
        raise SptabError("input tableau is not semi-standard")
    record: list | None = [] if args.trace else None
    mu, q = phi(t, record)
    out = {"shape": list(mu), "result": tableau_to_json(q)}
    if args.trace:
        out["trace"] = trace_to_json(record)
    if args.format == "ascii":
        print(render(q))
    else:
        _emit(out)
    return 0


def cmd_psi(args) -> int:
    t = tableau_from_json(_read_input(args))
    _check_rank(args, t)
    lam = _parse_shape(args.target_shape)
    record: list | None = [] if args.trace else None
    result = psi(lam, t.shape, t, record)
    out = {"result": tableau_to_json(result)}
    if args.trace:
        out["trace"] = trace_to_json(record)
    if args.format == "ascii":
        print(render(result))
    else:
        _emit(out)
    return 0


def cmd_sjdt(args) -> int:
    data = _read_input(args)
    if not isinstance(data, dict) or "columns" not in data:
        raise SptabError("sjdt expects a skew tableau object with columns and inner")
    n = int(data.get("n", args.n))
    if n != args.n:
        raise SptabError(f"--n {args.n} does not match the input rank {n}")
    inner = data.get("inner", [0] * len(data["columns"]))
    try:
        row, col = (int(p) for p in args.star.split(","))
    except ValueError as exc:
        raise SptabError(f"unreadable star {args.star!r}") from exc
    cols = []
    for j, raw in enumerate(data["columns"], start=1):
        letters = [letter_from_json(v) for v in raw if v is not None]
        A = frozenset(l.magnitude for l in letters if not l.barred)
        D = frozenset(l.magnitude for l in letters if l.barred)
        if len(A) + len(D) != len(letters):
            raise SptabError(f"column {j}: repeated letters")
        inn = int(inner[j - 1])
        if j == col:
            if row != inn:
                raise SptabError(f"star row {row} must be the bottom vacated cell (inner={inn})")
            cols.append(SpSkewColumn(n, inn - 1, A, D, row))
        else:
            cols.append(SpSkewColumn(n, inn, A, D))
    state = SpSkewTableau(n, tuple(cols))
    record: list = []
    rest, path = sjdt_to_rest(state, record)
    final = shed(rest)
    record.append(final)
    _emit(
        {
            "final": state_to_json(final, any(s.zero_present for s in record)),
            "path": [list(p) for p in path],
            "trace": trace_to_json(record),
        }
    )
    return 0


def cmd_verify(args) -> int:
    if args.what == "bijection":
        shapes = shapes_up_to(args.n, args.max_boxes)
        if args.jobs > 1:
            from multiprocessing import Pool

            with Pool(args.jobs) as pool:
                reports = pool.starmap(verify_bijection, [(args.n, s) for s in shapes])
        else:
            reports = [verify_bijection(args.n, s) for s in shapes]
        ok = all(r["status"] == "pass" for r in reports)
        _emit({"n": args.n, "max_boxes": args.max_boxes, "reports": reports, "status": "pass" if ok else "fail"})
        return 0 if ok else 2
    if args.what == "dims":
        results = []
        for k in range(2, min(args.max_k, args.n) + 1):
            mat = contraction_matrix(args.n, k)
            rank = exact_rank(mat)
            kernel = comb(2 * args.n, k) - rank
            formula = comb(2 * args.n, k) - comb(2 * args.n, k - 2)
            adm = len(enum_admissible_columns(args.n, k))
            results.append(
                {"k": k, "admissible": adm, "kernel": kernel, "formula": formula, "ok": adm == kernel == formula}
            )
        ok = all(r["ok"] for r in results)
        _emit({"n": args.n, "results": results, "status": "pass" if ok else "fail"})
        return 0 if ok else 2
    if args.what == "plucker":
        mat = contraction_matrix(args.n, args.k)
        rank = exact_rank(mat)
        kernel = comb(2 * args.n, args.k) - rank
        expected = comb(2 * args.n, args.k) - comb(2 * args.n, args.k - 2)
        report = {
            "n": args.n,
            "k": args.k,
            "rows": len(mat),
            "cols": len(mat[0]) if mat else 0,
            "rank": rank,
            "kernel": kernel,
            "expected_kernel": expected,
            "status": "pass" if kernel == expected else "fail",
        }
        if args.dump_matrix:
            report["triplets"] = [
                [r, c, v]
                for r, row in enumerate(mat)
                for c, v in enumerate(row)
                if v
            ]
        _emit(report)
        return 0 if report["status"] == "pass" else 2
    raise SptabError(f"unknown verification {args.what!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="sptab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, n_required=True):
        sp.add_argument("--n", type=int, required=n_required, help="rank")
        sp.add_argument("--file", help="read input from a file instead of stdin")
        sp.add_argument("--format", choices=("json", "ascii"), default="json")

    sp = sub.add_parser("double", help="double a symplectic tableau")
    common(sp)
    sp.set_defaults(fn=cmd_double)

    sp = sub.add_parser("check", help="evaluate a predicate on a tableau")
    common(sp)
    sp.add_argument("--predicate", required=True, choices=("ss-sp", "qs-sp", "ss-sl", "qs-sl", "admissible"))
    sp.set_defaults(fn=cmd_check)

    sp = sub.add_parser("enum", help="enumerate tableaux of a shape")
    common(sp)
    sp.add_argument("--shape", required=True, help="comma-separated column heights")
    sp.add_argument("--predicate", required=True, choices=("ss-sp", "qs-sp", "ss-sl", "qs-sl", "admissible"))
    sp.add_argument("--count", action="store_true", help="print the cardinality only")
    sp.set_defaults(fn=cmd_enum)

    sp = sub.add_parser("phi", help="reduce to a quasi-standard tableau")
    common(sp)
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(fn=cmd_phi)

    sp = sub.add_parser("psi", help="inverse reduction to a target shape")
    common(sp)
    sp.add_argument("--target-shape", required=True)
    sp.add_argument("--trace", action="store_true")
    sp.set_defaults(fn=cmd_psi)

    sp = sub.add_parser("sjdt", help="run one slide on a skew tableau")
    common(sp)
    sp.add_argument("--star", required=True, help="ROW,COL of the pointed cell")
    sp.set_defaults(fn=cmd_sjdt)

    sp = sub.add_parser("verify", help="verification reports")
    vs = sp.add_subparsers(dest="what", required=True)
    v = vs.add_parser("bijection")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--max-boxes", type=int, required=True)
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(fn=cmd_verify, what="bijection")
    v = vs.add_parser("dims")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--max-k", type=int, required=True)
    v.set_defaults(fn=cmd_verify, what="dims")
    v = vs.add_parser("plucker")
    v.add_argument("--n", type=int, required=True)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--dump-matrix", action="store_true")
    v.set_defaults(fn=cmd_verify, what="plucker")

    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except TaquinInvariantError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return 3
    except SptabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
