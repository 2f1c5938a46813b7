"""Command-line front end.

Exit codes: 0 ok / positive verdict, 1 negative verdict or invalid
diagram, 2 syntax error, 3 incomparable component counts.
"""

from __future__ import annotations

import argparse
import json
import sys

from .diagram import (
    DiagramValidationError,
    GaussCodeSyntaxError,
    parse,
    parse_unchecked,
    serialize,
    universe,
    validate,
)
from .fixtures import load_fixtures
from .invariants import HOMOLOGOUS, INCOMPARABLE, compare_homology
from .presentation import presentations
from .report import build_report
from .ribbon import surface_report
from .search import FOUND, ground_genus_search, search_equivalent

EXIT_OK, EXIT_NO, EXIT_SYNTAX, EXIT_INCOMPARABLE = 0, 1, 2, 3


class _Exit(Exception):
    def __init__(self, code):
        self.code = code


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if v <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} is not a positive integer")
    return v


def _read_inputs(args, count: int) -> list[str]:
    codes = list(args.codes)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            codes += [ln.strip() for ln in fh if ln.strip() and not ln.startswith("#")]
    if len(codes) != count:
        sys.stderr.write(f"expected {count} Gauss code(s), got {len(codes)}\n")
        raise _Exit(EXIT_SYNTAX)
    return codes


def _parse(text: str):
    try:
        return parse(text)
    except GaussCodeSyntaxError as exc:
        sys.stderr.write(f"syntax error: {exc}\n")
        raise _Exit(EXIT_SYNTAX)
    except DiagramValidationError as exc:
        _emit(exc.violation.to_dict())
        raise _Exit(EXIT_NO)


def cmd_validate(args) -> int:
    (text,) = _read_inputs(args, 1)
    try:
        d = parse_unchecked(text)
    except GaussCodeSyntaxError as exc:
        sys.stderr.write(f"syntax error: {exc}\n")
        return EXIT_SYNTAX
    v = validate(d)
    if v is not None:
        _emit(v.to_dict())
        return EXIT_NO
    sys.stdout.write("ok\n")
    return EXIT_OK


def cmd_report(args) -> int:
    (text,) = _read_inputs(args, 1)
    rep = build_report(_parse(text))
    if args.json:
        _emit(rep)
    else:
        sys.stdout.write(_human(rep))
    return EXIT_OK


def _human(rep: dict) -> str:
    lines = [
        f"code: {rep['code']}",
        f"components: {rep['components']}  crossings: {rep['crossings']}",
        f"linking matrix: {rep['linking_matrix']}",
        f"genus: {rep['surface']['genus']}  boundary circles: {rep['surface']['boundary']}",
        f"certificate: {rep['certificate']['verdict']}"
        + (f" (witness {rep['certificate']['witness']})" if rep["certificate"]["witness"] else ""),
    ]
    return "\n".join(lines) + "\n"


def cmd_homologous(args) -> int:
    a, b = (_parse(t) for t in _read_inputs(args, 2))
    verdict = compare_homology(a, b)
    sys.stdout.write(verdict + "\n")
    if verdict == INCOMPARABLE:
        return EXIT_INCOMPARABLE
    return EXIT_OK if verdict == HOMOLOGOUS else EXIT_NO


def cmd_genus(args) -> int:
    (text,) = _read_inputs(args, 1)
    d = _parse(text)
    out = surface_report(d).to_dict()
    if args.ground:
        bound, witness = ground_genus_search(d, args.max_crossings, args.max_steps)
        out["ground_genus_upper_bound"] = bound
        out["ground_genus_witness"] = serialize(witness)
    _emit(out)
    return EXIT_OK


def cmd_universe(args) -> int:
    (text,) = _read_inputs(args, 1)
    _emit(universe(_parse(text)).to_list())
    return EXIT_OK


def cmd_presentations(args) -> int:
    (text,) = _read_inputs(args, 1)
    group, quandle = presentations(_parse(text))
    _emit({"group": group.to_dict(), "quandle": quandle.to_dict()})
    return EXIT_OK


def cmd_search(args) -> int:
    a, b = (_parse(t) for t in _read_inputs(args, 2))
    res = search_equivalent(
        a, b, args.max_crossings, args.max_steps, max_nodes=args.budget, time_limit=args.time_limit
    )
    head = {"status": res.status, "nodes": res.nodes}
    if res.status == FOUND:
        head["length"] = len(res.sequence)
    if res.reason:
        head["reason"] = res.reason
    _emit(head)
    if res.status == FOUND:
        sys.stdout.write(res.sequence.to_jsonl())
        return EXIT_OK
    return EXIT_NO


def cmd_fixtures(args) -> int:
    fixtures = load_fixtures(args.manifest)
    if args.action == "list":
        for f in fixtures.values():
            flag = " (pending)" if f.pending else ""
            sys.stdout.write(f"{f.name}\t{f.code}{flag}\n")
        return EXIT_OK
    if args.name not in fixtures:
        sys.stderr.write(f"unknown fixture {args.name!r}\n")
        return EXIT_NO
    f = fixtures[args.name]
    _emit({"name": f.name, "code": f.code, "notes": f.notes, "pending": f.pending})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="vknot", description="Virtual link diagrams as Gauss codes.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_inputs(sp, nargs):
        sp.add_argument("codes", nargs=nargs, help="Gauss code(s)")
        sp.add_argument("--file", help="read Gauss code(s) from a file, one per line")
        return sp

    with_inputs(sub.add_parser("validate", help="check a Gauss code"), "?").set_defaults(func=cmd_validate)

    rp = with_inputs(sub.add_parser("report", help="all invariants as one report"), "?")
    rp.add_argument("--json", action="store_true", help="emit JSON")
    rp.set_defaults(func=cmd_report)

    with_inputs(sub.add_parser("homologous", help="compare link-homology classes"), "*").set_defaults(
        func=cmd_homologous
    )

    gp = with_inputs(sub.add_parser("genus", help="surface report"), "?")
    gp.add_argument("--ground", action="store_true", help="also search for a ground genus upper bound")
    gp.add_argument("--max-crossings", type=_positive_int, default=6)
    gp.add_argument("--max-steps", type=_positive_int, default=4)
    gp.set_defaults(func=cmd_genus)

    with_inputs(sub.add_parser("universe", help="shadow with over/under erased"), "?").set_defaults(
        func=cmd_universe
    )
    with_inputs(sub.add_parser("presentations", help="group and quandle presentations"), "?").set_defaults(
        func=cmd_presentations
    )

    sp = with_inputs(sub.add_parser("search", help="bounded Reidemeister move search"), "*")
    sp.add_argument("--max-crossings", type=_positive_int, required=True)
    sp.add_argument("--max-steps", type=_positive_int, required=True)
    sp.add_argument("--budget", type=_positive_int, default=None, help="node limit")
    sp.add_argument("--time-limit", type=float, default=None, help="seconds")
    sp.set_defaults(func=cmd_search)

    fp = sub.add_parser("fixtures", help="built-in example diagrams")
    fp.add_argument("action", choices=("list", "show"))
    fp.add_argument("name", nargs="?")
    fp.add_argument("--manifest", help="alternative manifest file")
    fp.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "codes", None) is None:
        args.codes = []
    elif isinstance(args.codes, str):
        args.codes = [args.codes]
    try:
        return args.func(args)
    except _Exit as exc:
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
