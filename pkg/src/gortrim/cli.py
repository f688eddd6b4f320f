"""Command line interface.

Exit codes: 0 success, 1 input/validation error (or a failed verification),
2 invariants outside the class tables.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .docio import DocumentError, dumps, load_matrix_document, parse_matrix_document, report_to_dict
from .example import verify_example
from .lemmaverify import verify_all
from .pfaffian import generators
from .polyring import format_poly
from .search import SearchConfig, run_search
from .trimclass import ClassificationError, all_trims, classify, format_tuple

EXIT_OK, EXIT_INPUT, EXIT_TABLE = 0, 1, 2


def _read_input(path: str):
    if path == "-":
        return parse_matrix_document(sys.stdin.read())
    return load_matrix_document(path)


def _parse_trim(text: str) -> tuple:
    try:
        return tuple(int(a) for a in text.split(",") if a.strip())
    except ValueError as exc:
        raise DocumentError(f"--trim: expected comma-separated indices, got {text!r}") from exc


def render_report(rep) -> str:
    lines = [
        f"trim: {','.join(map(str, rep.trim))}",
        f"permutation: {format_tuple(rep.permutation)}",
        f"Qbar ({rep.qbar.matrix.nrows}x5):",
    ]
    lines += ["  " + " ".join(f"{x!s:>3}" for x in row) for row in rep.qbar.matrix.rows]
    lines += [
        f"G-trimming condition: {'satisfied' if rep.g_condition else 'fails'}",
        f"p(T,{rep.t}) = {rep.p}",
        f"rank(Qbar) = {rep.rank}",
        f"class: {rep.tor_class}",
        f"format: {format_tuple(rep.format)}" + (" (pattern-extended)" if rep.format_extended else ""),
        f"mu: {rep.mu}",
    ]
    lines += [f"warning: {w}" for w in rep.warnings]
    lines.append(rep.summary())
    return "\n".join(lines)


def cmd_pfaffians(args) -> int:
    T = _read_input(args.input)
    ys = generators(T)
    if args.json:
        print(dumps({"generators": [format_poly(y) for y in ys]}), end="")
    else:
        for i, y in enumerate(ys, start=1):
            print(f"y{i} = {format_poly(y)}")
    return EXIT_OK


def cmd_classify(args) -> int:
    T = _read_input(args.input)
    if T.size != 5:
        raise DocumentError(f"classification requires m=5, got m={T.size}")
    rep = classify(T, _parse_trim(args.trim))
    print(dumps(report_to_dict(rep)) if args.json else render_report(rep), end="" if args.json else "\n")
    return EXIT_OK


def cmd_report(args) -> int:
    T = _read_input(args.input)
    if T.size != 5:
        raise DocumentError(f"classification requires m=5, got m={T.size}")
    reports = [classify(T, S) for S in all_trims()]
    if args.json:
        print(dumps([report_to_dict(r) for r in reports]), end="")
    else:
        for r in reports:
            print(f"{','.join(map(str, r.trim)):>10}  p={r.p} rank={r.rank}  {r.summary()}")
    return EXIT_OK


def cmd_verify_lemmas(args) -> int:
    reports = verify_all()
    if args.json:
        out = [
            {
                "name": rep.name,
                "passed": rep.passed,
                "identities": [{"label": r.label, "holds": r.holds} for r in rep.results],
                "detail": rep.detail,
            }
            for rep in reports
        ]
        print(dumps(out), end="")
    else:
        for rep in reports:
            print(f"[{'PASS' if rep.passed else 'FAIL'}] {rep.name}")
            for r in rep.results:
                print(f"    {'ok  ' if r.holds else 'FAIL'} {r.label}")
            for k, v in rep.detail.items():
                print(f"    {k}: {v}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_INPUT


def cmd_verify_example(args) -> int:
    checks = verify_example()
    if args.json:
        print(dumps([{"check": c.name, "passed": c.passed, "detail": c.detail} for c in checks]), end="")
    else:
        for c in checks:
            print(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}" + (f"  {c.detail}" if c.detail else ""))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_INPUT


def cmd_search(args) -> int:
    config = SearchConfig(
        field=args.field,
        degree=args.degree,
        trials=args.trials,
        seed=args.seed,
        trim_sizes=tuple(int(a) for a in args.sizes.split(",")),
        inject_example=not args.no_example,
        workers=args.workers,
    )
    result = run_search(config)
    print(result.to_json(), end="")
    if args.emit_witnesses:
        result.emit_witnesses(args.emit_witnesses)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gortrim",
        description="Pfaffian ideals of skew matrices and the Tor-algebra class of their trimmings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pfaffians", help="print the generators y_i = (-1)^(i+1) pf_i(T)")
    p.add_argument("--input", required=True, help="matrix document (JSON), '-' for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pfaffians)

    p = sub.add_parser("classify", help="classify one trimming")
    p.add_argument("--input", required=True)
    p.add_argument("--trim", required=True, help="1-based generator indices, e.g. 1,2,3")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("report", help="classify every trimming")
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("verify-lemmas", help="check the E/Qbar minor identities symbolically")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_lemmas)

    p = sub.add_parser("verify-example", help="re-derive the embedded F2 example")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_example)

    p = sub.add_parser("search", help="random search for matrices realizing each class")
    p.add_argument("--field", default="F2")
    p.add_argument("--degree", type=int, default=2)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sizes", default="1,2,3", help="trim sizes to census")
    p.add_argument("--no-example", action="store_true", help="do not inject the F2 example as trial 0")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--emit-witnesses", metavar="DIR", type=Path)
    p.set_defaults(func=cmd_search)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ClassificationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TABLE
    except (DocumentError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
