"""Command-line front end.

Commands: parse | eval | table | relevance | tableau | check.  Formulas are
taken from the argument or from stdin when the argument is ``-`` (the
default); ``--each`` switches to batch mode, one formula per stdin line and
one report line per formula, in input order.

Exit codes: 0 success (and positive verdicts), 1 usage, parse or internal
error, 2 negative verdict (not t-relevant, proved-not-false, equivalence
fails), 3 tableau left open.  Output is deterministic: same invocation,
same bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import NamedTuple

from .equivalence import check_equivalence
from .errors import ParseError, TrelError
from .formula import (
    And,
    Formula,
    Implies,
    Not,
    Or,
    Var,
    format_var_set,
    parse,
    pretty,
    variables,
)
from .relevance import Classification, analyze
from .semantics import TableMode, eval3, parse_assignment, truth_table
from .tableau import Outcome, Strategy, refute

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NEGATIVE = 2
EXIT_OPEN = 3

_OUTCOME_CODES = {
    Outcome.PROVED_TRUE: EXIT_OK,
    Outcome.PROVED_NOT_FALSE: EXIT_NEGATIVE,
    Outcome.OPEN: EXIT_OPEN,
}


class _Caps(NamedTuple):
    max_vars: int | None
    max_nodes: int | None


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json", "dot"), default="text",
        help="output format (dot is for tableau trees only)",
    )
    common.add_argument("--max-vars", type=int, dest="max_vars", metavar="N",
                        help="override the enumeration caps")
    common.add_argument("--max-nodes", type=int, dest="max_nodes", metavar="N",
                        help="override the tableau node budget")
    common.add_argument("--each", action="store_true",
                        help="batch mode: one formula per stdin line, one report per line")

    parser = argparse.ArgumentParser(
        prog="trel",
        description="Truth-relevant propositional logic toolkit.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common],
                       help="parse a formula and echo its canonical form")
    p.add_argument("formula", nargs="?", default="-")

    p = sub.add_parser("eval", parents=[common],
                       help="evaluate a formula under an assignment")
    p.add_argument("formula", nargs="?", default="-")
    p.add_argument("assignment", help='e.g. "P=T,Q=x"')

    p = sub.add_parser("table", parents=[common], help="print a truth table")
    p.add_argument("formula", nargs="?", default="-")
    p.add_argument("--mode", choices=("classical", "three", "partial"),
                   default="classical")
    p.add_argument("--vary", metavar="NAMES",
                   help="comma-separated variables to vary in partial mode")

    p = sub.add_parser("relevance", parents=[common],
                       help="determining sets, redundancy, and t-relevance")
    p.add_argument("formula", nargs="?", default="-")

    p = sub.add_parser("tableau", parents=[common],
                       help="build a refutation tree")
    p.add_argument("formula", nargs="?", default="-")
    p.add_argument("--strategy", choices=("default", "reversed", "exhaustive"),
                   default="default")

    p = sub.add_parser("check", parents=[common],
                       help="check equivalence with the excluded-middle conjunction")
    p.add_argument("formula", nargs="?", default="-")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--set", dest="var_set", metavar="NAMES",
                       help="comma-separated variable set")
    group.add_argument("--from-tableau", action="store_true",
                       help="use the closing set of a default-strategy tableau")
    return parser


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


def _resolve_caps(args: argparse.Namespace) -> _Caps:
    max_vars = args.max_vars if args.max_vars is not None else _env_int("TREL_MAX_VARS")
    max_nodes = args.max_nodes if args.max_nodes is not None else _env_int("TREL_MAX_NODES")
    return _Caps(max_vars, max_nodes)


def _dump_json(doc: dict, each: bool) -> str:
    if each:
        return json.dumps(doc, separators=(",", ":"))
    return json.dumps(doc, indent=2)


def _ast_dict(f: Formula) -> dict:
    if isinstance(f, Var):
        return {"type": "var", "name": f.name}
    if isinstance(f, Not):
        return {"type": "not", "operand": _ast_dict(f.operand)}
    kind = {And: "and", Or: "or", Implies: "implies"}[type(f)]
    return {"type": kind, "left": _ast_dict(f.left), "right": _ast_dict(f.right)}


def _split_names(raw: str) -> list[str]:
    return [part for part in (p.strip() for p in raw.split(",")) if part]


def _cmd_parse(args, text: str, caps: _Caps, each: bool) -> tuple[int, str]:
    f = parse(text)
    if args.format == "json":
        return EXIT_OK, _dump_json({"formula": pretty(f), "ast": _ast_dict(f)}, each)
    return EXIT_OK, pretty(f)


def _cmd_eval(args, text: str, caps: _Caps, each: bool) -> tuple[int, str]:
    f = parse(text)
    assignment = parse_assignment(args.assignment)
    names = variables(f)
    missing = [n for n in names if n not in assignment]
    if missing:
        raise TrelError("missing variable(s): " + ", ".join(missing))
    extra = [n for n in assignment if n not in set(names)]
    if extra:
        raise ValueError("unknown variable(s): " + ", ".join(extra))
    value = eval3(f, assignment)
    if args.format == "json":
        doc = {
            "formula": pretty(f),
            "assignment": {n: str(assignment[n]) for n in names},
            "value": str(value),
        }
        return EXIT_OK, _dump_json(doc, each)
    return EXIT_OK, str(value)


def _cmd_table(args, text: str, caps: _Caps, each: bool) -> tuple[int, str]:
    f = parse(text)
    mode = TableMode(args.mode)
    varied = None
    if args.vary is not None:
        varied = _split_names(args.vary)
    if mode is TableMode.PARTIAL and varied is None:
        raise ValueError("--mode partial requires --vary")
    table = truth_table(f, mode, varied, max_vars=caps.max_vars)
    if args.format == "json":
        return EXIT_OK, _dump_json(table.to_dict(), each)
    return EXIT_OK, table.render_text()


def _cmd_relevance(args, text: str, caps: _Caps, each: bool) -> tuple[int, str]:
    f = parse(text)
    report = analyze(f, max_vars=caps.max_vars)
    positive = report.classification is Classification.T_RELEVANT_TAUTOLOGY
    code = EXIT_OK if positive else EXIT_NEGATIVE
    if args.format == "json":
        return code, _dump_json(report.to_dict(), each)
    if each:
        sets = ";".join(
            format_var_set(s) for s in report.minimal_determining_sets
        )
        line = "\t".join([
            pretty(f),
            report.classification.value,
            f"minimal={sets}",
            f"redundant={format_var_set(report.redundant)}",
        ])
        return code, line
    return code, report.render_text()


def _cmd_tableau(args, text: str, caps: _Caps, each: bool) -> tuple[int, str]:
    f = parse(text)
    result = refute(f, Strategy(args.strategy), max_nodes=caps.max_nodes)
    code = _OUTCOME_CODES[result.outcome]
    if args.format == "json":
        return code, _dump_json(result.to_dict(), each)
    if args.format == "dot":
        return code, result.render_dot()
    if each:
        parts = [pretty(f), result.outcome.value]
        if result.closing_set is not None:
            parts.append("closing=" + format_var_set(result.closing_set))
        if result.closing_sets is not None:
            parts.append(
                "sets=" + ";".join(format_var_set(s) for s in result.closing_sets)
            )
        return code, "\t".join(parts)
    return code, result.render_text()


def _cmd_check(args, text: str, caps: _Caps, each: bool) -> tuple[int, str]:
    f = parse(text)
    if args.from_tableau:
        tree = refute(f, Strategy.DEFAULT, max_nodes=caps.max_nodes)
        if tree.closing_set is None:
            raise TrelError("tableau left open branches; no closing set to check")
        subset = list(tree.closing_set)
    else:
        subset = _split_names(args.var_set)
        if not subset:
            raise ValueError("--set needs at least one variable")
    verdict = check_equivalence(f, subset, max_vars=caps.max_vars)
    code = EXIT_OK if verdict.holds else EXIT_NEGATIVE
    if args.format == "json":
        return code, _dump_json(verdict.to_dict(), each)
    if each:
        return code, f"{pretty(f)}\t{verdict.render_text()}"
    return code, verdict.render_text()


_COMMANDS = {
    "parse": _cmd_parse,
    "eval": _cmd_eval,
    "table": _cmd_table,
    "relevance": _cmd_relevance,
    "tableau": _cmd_tableau,
    "check": _cmd_check,
}


def _report_error(exc: Exception, source: str | None) -> None:
    print(f"error: {exc}", file=sys.stderr)
    if (
        isinstance(exc, ParseError)
        and exc.span is not None
        and source is not None
        and "\n" not in source
    ):
        print("  " + source, file=sys.stderr)
        width = max(1, exc.span.end - exc.span.start)
        print("  " + " " * exc.span.start + "^" * width, file=sys.stderr)


def _run_each(args, caps: _Caps) -> int:
    codes = []
    for line in sys.stdin:
        text = line.strip()
        if not text:
            continue
        try:
            code, output = _COMMANDS[args.command](args, text, caps, each=True)
        except (TrelError, ValueError) as exc:
            _report_error(exc, text)
            codes.append(EXIT_ERROR)
            continue
        print(output)
        codes.append(code)
    if EXIT_ERROR in codes:
        return EXIT_ERROR
    return max(codes, default=EXIT_OK)


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_ERROR

    if args.format == "dot" and args.command != "tableau":
        print("error: --format dot is only available for tableau", file=sys.stderr)
        return EXIT_ERROR
    if args.each and args.command == "table" and args.format != "json":
        print("error: table --each requires --format json", file=sys.stderr)
        return EXIT_ERROR

    try:
        caps = _resolve_caps(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    if args.each:
        if args.formula != "-":
            print("error: --each reads formulas from stdin; pass '-' or no formula",
                  file=sys.stderr)
            return EXIT_ERROR
        return _run_each(args, caps)

    text = sys.stdin.read().strip() if args.formula == "-" else args.formula
    try:
        code, output = _COMMANDS[args.command](args, text, caps, each=False)
    except (TrelError, ValueError) as exc:
        _report_error(exc, text)
        return EXIT_ERROR
    if output:
        print(output)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
