"""Command-line front end.

Exit codes: 0 all scenarios passed, 1 some scenario failed, 2 usage or
configuration error, 3 a resource bound stopped a check.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import verify
from .catalog import DATA_DIR_ENV

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise _UsageError(f"{self.prog}: error: {message}")


class _UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="charsimple", description="Run permutation-group verification scenarios.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    lst = sub.add_parser("list", help="list scenario ids and the statements they check")
    lst.add_argument("--format", choices=("text", "json"), default="text")

    run = sub.add_parser("run", help="run scenarios ('all' for the default set)")
    run.add_argument("scenarios", nargs="+", metavar="ID")
    run.add_argument("--format", choices=("text", "json"), default="text")
    run.add_argument("--data-dir", default=None, help=f"group data directory (env {DATA_DIR_ENV})")
    run.add_argument("--enum-bound", type=_positive, default=verify.DEFAULT_ENUM_BOUND)
    run.add_argument("--coset-bound", type=_positive, default=verify.DEFAULT_COSET_BOUND)
    run.add_argument("--max-wreath-r", type=_positive, default=6)
    run.add_argument("--seed", type=int, default=verify.DEFAULT_SEED)
    run.add_argument("--p-max", type=_positive, default=2000)
    run.add_argument("--n-max", type=_positive, default=2000)
    run.add_argument("--q-max", type=_positive, default=10**4)
    run.add_argument("--with-ex4", action="store_true", help="include the 129600-point wreath check in 'all'")
    return parser


def _format_text(report: verify.Report) -> str:
    lines = [f"[{report.verdict.upper()}] {report.scenario} ({report.millis} ms): {report.paper_ref}"]
    if report.seed is not None:
        lines.append(f"  seed {report.seed}")
    for row in report.to_json()["evidence"]:
        mark = "ok " if row["computed"] == row["expected"] else "BAD"
        lines.append(
            f"  {mark} {row['claim']}: computed={json.dumps(row['computed'])} "
            f"expected={json.dumps(row['expected'])} [{row['provenance']}]"
        )
    if report.error:
        lines.append(f"  error: {report.error}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    if args.command == "list":
        rows = [
            {"scenario": sid, "statement": sc.statement, "default": sc.default}
            for sid, sc in verify.SCENARIOS.items()
        ]
        if args.format == "json":
            print(json.dumps(rows, indent=2))
        else:
            for row in rows:
                flag = "" if row["default"] else " (optional)"
                print(f"{row['scenario']:<22}{row['statement']}{flag}")
        return EXIT_OK

    data_dir = args.data_dir or os.environ.get(DATA_DIR_ENV)
    if data_dir is not None and not Path(data_dir).is_dir():
        print(f"charsimple: data directory {data_dir!r} does not exist", file=sys.stderr)
        return EXIT_USAGE
    if args.scenarios == ["all"]:
        ids = None
    else:
        unknown = [s for s in args.scenarios if s not in verify.SCENARIOS]
        if unknown:
            parser.print_usage(sys.stderr)
            print(f"charsimple: unknown scenario(s): {', '.join(unknown)}; try 'charsimple list'", file=sys.stderr)
            return EXIT_USAGE
        ids = args.scenarios
    config = verify.VerifyConfig(
        enum_bound=args.enum_bound,
        coset_bound=args.coset_bound,
        max_wreath_r=args.max_wreath_r,
        seed=args.seed,
        data_dir=data_dir,
        p_max=args.p_max,
        n_max=args.n_max,
        q_max=args.q_max,
        include_ex4=args.with_ex4,
    )
    reports = verify.run_all(config, ids)
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(_format_text(r))
        passed = sum(r.passed for r in reports)
        print(f"{passed}/{len(reports)} scenarios passed")
    for r in reports:
        if r.error_kind is not None:
            print(f"charsimple: {r.scenario}: {r.error}", file=sys.stderr)
    if any(r.error_kind == "bound" for r in reports):
        return EXIT_BOUND
    if not verify.aggregate_passed(reports):
        return EXIT_FAIL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
