"""Command line entry point: ``qweyl reduce | act | verify | suites``.

Exit status is 0 when everything passed, 1 when a verification check failed
and 2 for usage, parse or parameter errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .expr import EvalError, ParseError, evaluate, index_bounds, parse
from .paction import act
from .suites import SUITES, Params, SuiteError, run_suite
from .weyl import FILTERED, GRADED, AlgebraSpec, SpecMismatch, format_element

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _spec_for(trees, m, n, graded=False) -> AlgebraSpec:
    """Use the given sizes, or the smallest ones that fit every index."""
    rows = max([1] + [index_bounds(t)[0] for t in trees])
    cols = max([1] + [index_bounds(t)[1] for t in trees])
    return AlgebraSpec(m or rows, n or cols, GRADED if graded else FILTERED)


def reduce_cmd(src: str, m: int | None = None, n: int | None = None, graded: bool = False) -> str:
    tree = parse(src)
    return format_element(evaluate(tree, _spec_for([tree], m, n, graded)))


def act_cmd(dsrc: str, fsrc: str, m: int | None = None, n: int | None = None) -> str:
    dtree, ftree = parse(dsrc), parse(fsrc)
    spec = _spec_for([dtree, ftree], m, n)
    f = evaluate(ftree, spec)
    if not f.is_polynomial():
        raise EvalError("the second argument must not contain d-generators")
    return format_element(act(evaluate(dtree, spec), f))


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qweyl", description="Exact computations in quantized Weyl algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="print the PBW normal form of an expression")
    p.add_argument("--m", type=_positive)
    p.add_argument("--n", type=_positive)
    p.add_argument("--graded", action="store_true", help="use the graded relations")
    p.add_argument("expr")

    p = sub.add_parser("act", help="apply an operator to a polynomial")
    p.add_argument("--m", type=_positive)
    p.add_argument("--n", type=_positive)
    p.add_argument("dexpr")
    p.add_argument("pexpr")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--k", type=_positive)
    p.add_argument("--l", type=_positive)
    p.add_argument("--max-deg", type=_nonneg, dest="max_deg")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true", help="emit a JSON report")

    sub.add_parser("suites", help="list the available suites")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "reduce":
            print(reduce_cmd(args.expr, args.m, args.n, args.graded))
            return EXIT_OK
        if args.command == "act":
            print(act_cmd(args.dexpr, args.pexpr, args.m, args.n))
            return EXIT_OK
        if args.command == "suites":
            width = max(len(name) for name in SUITES)
            for name, suite in SUITES.items():
                print(f"{name.ljust(width)}  {suite.summary}")
            return EXIT_OK
        report = run_suite(args.suite, Params(args.m, args.n, args.k, args.l, args.max_deg, args.seed))
    except ParseError as exc:
        print(f"qweyl: parse error: {exc.message} at byte {exc.offset}", file=sys.stderr)
        return EXIT_USAGE
    except (EvalError, SuiteError, SpecMismatch, ValueError) as exc:
        print(f"qweyl: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        sys.stdout.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
