"""Command-line front end: ``snweb eval|statesum|moy|kauffman|singular|check``.

Exit codes: 0 on success, 1 on parse or validation errors, 2 when two
evaluators disagree or a property suite fails.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional, TextIO

from .crosscheck import kauffman_compare, singular_bracket
from .diagram import parse_web
from .errors import SnwebError
from .moy import (bracket_in_v, eta, moy_original_bracket, moy_state_sum,
                  normalization, parse_moy)
from .poly import LaurentPoly
from .statesum import resolved_state_sum, state_sum
from .suites import SUITES
from .tensor import evaluate


class ConsistencyError(Exception):
    pass


def render(p: LaurentPoly, var: str, n: int) -> str:
    """Print ``p`` (in ``t``) in the requested variable, falling back to ``t``."""
    if var == "t":
        return p.render("t", descending=True)
    if var == "q":
        scale = n
    elif n == 2:
        scale = 1  # A = q^(1/2) = t when n = 2
    else:
        return p.render("t", descending=True) + "  (A is defined for n = 2 only; shown in t)"
    if all(e % scale == 0 for e in p.exponents()):
        return p.render(var, scale=scale, descending=True)
    return p.render("t", descending=True) + f"  (exponents not divisible by {scale}; shown in t, q = t^{n})"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(args, singular: bool = False):
    d = parse_web(_read(args.file), singular=singular)
    if args.n is not None and args.n != d.n:
        d = type(d)(args.n, d.slices, d.bottom, d.singular)
    return d


def cmd_eval(args, out: TextIO) -> int:
    d = _load(args)
    print(render(evaluate(d), args.var, d.n), file=out)
    return 0


def cmd_statesum(args, out: TextIO) -> int:
    d = _load(args)
    value = resolved_state_sum(d) if d.has_crossings() else state_sum(d)
    if args.verify and value != evaluate(d):
        raise ConsistencyError("state sum and tensor evaluation disagree")
    print(render(value, args.var, d.n), file=out)
    return 0


def cmd_moy(args, out: TextIO) -> int:
    g = parse_moy(_read(args.file))
    n = g.n
    bracket = bracket_in_v(g)
    if args.verify and bracket != moy_state_sum(g):
        raise ConsistencyError("bracket of the expanded web and MOY state sum disagree")
    v = f"v = q^(1/{4 * n})"
    print(f"[G]_n = {render(bracket.rescale(4), args.var, n)}", file=out)
    print(f"N(G)  = {normalization(g).render('v', descending=True)}  ({v})", file=out)
    print(f"{{G}}_n = {moy_original_bracket(g).render('w', descending=True)}  (w = q^(1/4))",
          file=out)
    print(f"eta_n = {eta(g)}", file=out)
    return 0


def cmd_kauffman(args, out: TextIO) -> int:
    d = _load(args)
    r = kauffman_compare(d)
    print(f"[D]     = {r.kauffman.render('A', descending=True)}", file=out)
    print(f"<D>_2   = {render(r.bracket, 'A', 2)}", file=out)
    print(f"w = {r.writhe}, c = {r.components}", file=out)
    print(f"<D>_2 = (-1)^(w+c) [D]: {'yes' if r.ok else 'NO'}", file=out)
    return 0 if r.ok else 2


def cmd_singular(args, out: TextIO) -> int:
    d = _load(args, singular=True)
    print(render(singular_bracket(d), args.var, d.n), file=out)
    return 0


def cmd_check(args, out: TextIO) -> int:
    fn = SUITES[args.suite]
    res = fn(args.seed, args.size) if args.size is not None else fn(args.seed)
    for label, ok, detail in sorted(res.cases) if args.verbose else res.failures:
        line = f"{'ok  ' if ok else 'FAIL'} {label}"
        print(line + (f": {detail}" if detail and not ok else ""), file=out)
    print(res.summary(), file=out)
    return 0 if res.ok else 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # usage errors share the exit code of malformed input
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="snweb", description="Exact SU_n web and link brackets.")
    sub = parser.add_subparsers(dest="command", required=True)

    def diagram_command(name, fn, help_, var=True):
        p = sub.add_parser(name, help=help_)
        p.add_argument("file", help="diagram file (JSON), or - for stdin")
        p.add_argument("-n", type=int, default=None, help="override the rank in the file")
        if var:
            p.add_argument("--var", choices=("t", "q", "A"), default="t")
        p.set_defaults(func=fn)
        return p

    diagram_command("eval", cmd_eval, "bracket by tensor contraction")
    p = diagram_command("statesum", cmd_statesum, "bracket by state sum (crossings resolved first)")
    p.add_argument("--verify", action="store_true", help="also run the tensor evaluator and compare")
    p = sub.add_parser("moy", help="MOY brackets, normalization and eta")
    p.add_argument("file")
    p.add_argument("--var", choices=("t", "q"), default="t")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_moy)
    diagram_command("kauffman", cmd_kauffman, "Kauffman bracket and rank-2 comparison", var=False)
    diagram_command("singular", cmd_singular, "singular-link bracket")
    p = sub.add_parser("check", help="run a named property suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=None)
    p.add_argument("-v", "--verbose", action="store_true", help="list every case")
    p.set_defaults(func=cmd_check)
    return parser


def run(argv: Optional[List[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ConsistencyError as exc:
        print(f"snweb: internal consistency failure: {exc}", file=err)
        return 2
    except (SnwebError, OSError) as exc:
        print(f"snweb: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
