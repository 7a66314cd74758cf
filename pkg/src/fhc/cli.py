"""Command line front end for the hierarchy calculus.

Every command is deterministic: identical invocations print identical
bytes.  Exit status is 0 for success, 1 for a user error (bad syntax,
unknown flag, out-of-range color), 2 when a resource guard refuses the
computation (FHC_ORACLE_BOUND overrides the brute-force map-search guard).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import hierarchy, iterated, notation, ordinals, terms
from .forests import OracleBoundError
from .hierarchy import LevelDescriptor, SegmentBoundError
from .notation import parse_forest, parse_term, serialize_forest, serialize_term, serialize_tree
from .terms import Dot, G


@dataclass
class CommandResult:
    verdict: str
    lhs: str | None = None
    rhs: str | None = None
    params: dict = field(default_factory=dict)
    multiline: bool = False


class _Parser(argparse.ArgumentParser):
    # usage problems are user errors: exit 1, not argparse's default 2
    def error(self, message: str) -> None:  # type: ignore[override]
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fhc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, handler, help_text, *, forest_args=0, term_arg=False, segment=False):
        p = sub.add_parser(name, help=help_text)
        for i in range(forest_args):
            p.add_argument(f"forest{i or ''}" if forest_args > 1 else "forest")
        if term_arg:
            p.add_argument("term")
        p.add_argument("--k", type=int, default=2,
                       help="alphabet size (colors 0..k-1); default 2")
        p.add_argument("--n", type=int, default=0,
                       help="jump shift / relation level; default 0")
        if segment:
            p.add_argument("--nodes", type=int, required=True,
                           help="node-count bound for the enumeration")
            p.add_argument("--level", type=int, required=True,
                           help="nesting-level bound for the enumeration")
        p.add_argument("--format", choices=["text", "json", "dot"], default=None)
        p.set_defaults(handler=handler)
        return p

    p = add("cmp", _cmd_cmp, "compare two forests: prints <  >  =  ||", forest_args=2)
    p.add_argument("--oracle", action="store_true",
                   help="decide by brute-force map search (guarded)")
    add("min", _cmd_min, "minimize a forest to its canonical representative",
        forest_args=1)
    add("decompose", _cmd_decompose,
        "canonical decomposition into incomparable minimal trees", forest_args=1)
    add("encode", _cmd_encode, "canonical term of a forest at shift n",
        forest_args=1)
    add("eval", _cmd_eval, "evaluate a term to a forest", term_arg=True)
    add("g2s", _cmd_g2s, "translate a G-signature term to graded products",
        term_arg=True)
    add("s2g", _cmd_s2g, "expand graded products into the G combinator",
        term_arg=True)
    add("jump-height", _cmd_jump_height, "jumps above bottom a term denotes",
        term_arg=True)
    p = add("normalize", _cmd_normalize,
            "restrict grades below n, or into the window [n, n+m) with --m",
            term_arg=True)
    p.add_argument("--m", type=int, default=None, help="window width")
    add("level-subset", _cmd_level_subset,
        "inclusion verdict between two levels", forest_args=2)
    add("witness", _cmd_witness, "complete partition of a level, symbolically",
        forest_args=1)
    p = sub.add_parser("build-T", help="level index for an ordinal and color")
    p.add_argument("ordinal")
    p.add_argument("color", type=int)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--format", choices=["text", "json", "dot"], default=None)
    p.set_defaults(handler=_cmd_build_t)
    add("enumerate", _cmd_enumerate, "quotient segment in the cache format",
        segment=True)
    add("diagram", _cmd_diagram, "quotient segment as a DOT Hasse diagram",
        segment=True)
    return parser


def _alphabet(args) -> int | None:
    if args.k == 0:
        return None  # unbounded
    if args.k < 2:
        raise ValueError("alphabet size must be at least 2 (0 for unbounded)")
    return args.k


def _parse_sterm(text: str):
    u = parse_term(text)
    return terms.g_to_s(u) if notation._uses_g(u) else u


def _check_term_colors(u, k: int | None) -> None:
    if k is None:
        return
    match u:
        case terms.Const(color):
            if color >= k:
                raise ValueError(f"color {color} outside alphabet of size {k}")
        case terms.Join(a, b) | Dot(_, a, b):
            _check_term_colors(a, k)
            _check_term_colors(b, k)
        case G(a, b, c):
            for x in (a, b, c):
                _check_term_colors(x, k)


def _cmd_cmp(args) -> CommandResult:
    k = _alphabet(args)
    a = parse_forest(args.forest, k)
    b = parse_forest(args.forest1, k)
    if args.oracle:
        fwd = iterated.colim_leq_oracle(a, b, args.n)
        bwd = iterated.colim_leq_oracle(b, a, args.n)
    else:
        fwd = iterated.colim_leq(a, b, args.n)
        bwd = iterated.colim_leq(b, a, args.n)
    verdict = {(True, True): "=", (True, False): "<",
               (False, True): ">", (False, False): "||"}[(fwd, bwd)]
    return CommandResult(verdict, serialize_forest(a), serialize_forest(b),
                         {"k": args.k, "n": args.n, "oracle": bool(args.oracle)})


def _cmd_min(args) -> CommandResult:
    f = parse_forest(args.forest, _alphabet(args))
    m = iterated.canonical(iterated.unlift(iterated.iminimize(f)))
    return CommandResult(serialize_forest(m), serialize_forest(f),
                         params={"k": args.k})


def _cmd_decompose(args) -> CommandResult:
    f = parse_forest(args.forest, _alphabet(args))
    parts = iterated.iminimize(f).trees
    text = "\n".join(serialize_tree(t) for t in parts)
    return CommandResult(text, serialize_forest(f), params={"k": args.k},
                         multiline=True)


def _cmd_encode(args) -> CommandResult:
    f = parse_forest(args.forest, _alphabet(args))
    u = terms.encode(f, args.n)
    return CommandResult(serialize_term(u), serialize_forest(f),
                         params={"k": args.k, "n": args.n})


def _cmd_eval(args) -> CommandResult:
    u = _parse_sterm(args.term)
    _check_term_colors(u, _alphabet(args))
    f = terms.interpret(u)
    return CommandResult(serialize_forest(f), serialize_term(u),
                         params={"k": args.k})


def _cmd_g2s(args) -> CommandResult:
    u = parse_term(args.term)
    if notation._uses_dot(u):
        raise ValueError("g2s expects a G-signature term")
    return CommandResult(serialize_term(terms.g_to_s(u)), serialize_term(u))


def _cmd_s2g(args) -> CommandResult:
    u = parse_term(args.term)
    if notation._uses_g(u):
        raise ValueError("s2g expects a star-signature term")
    return CommandResult(serialize_term(terms.s_to_g(u)), serialize_term(u))


def _cmd_jump_height(args) -> CommandResult:
    u = parse_term(args.term)
    if notation._uses_dot(u):
        u = terms.s_to_g(u)
    return CommandResult(str(terms.jump_height(u)), serialize_term(u))


def _cmd_normalize(args) -> CommandResult:
    u = _parse_sterm(args.term)
    if args.m is None:
        out = terms.restrict_level(u, args.n)
        params = {"n": args.n}
    else:
        out = terms.window_normalize(u, args.n, args.m)
        params = {"n": args.n, "m": args.m}
    return CommandResult(serialize_term(out), serialize_term(u), params=params)


def _cmd_level_subset(args) -> CommandResult:
    k = _alphabet(args)
    t = LevelDescriptor(parse_forest(args.forest, k))
    v = LevelDescriptor(parse_forest(args.forest1, k))
    verdict = hierarchy.level_relation(t, v)
    return CommandResult(verdict, serialize_forest(t.forest),
                         serialize_forest(v.forest), {"k": args.k})


def _cmd_witness(args) -> CommandResult:
    t = LevelDescriptor(parse_forest(args.forest, _alphabet(args)))
    w = hierarchy.complete_witness(t, args.n)
    return CommandResult(serialize_term(w), serialize_forest(t.forest),
                         params={"k": args.k, "n": args.n})


def _cmd_build_t(args) -> CommandResult:
    if args.k < 2:
        raise ValueError("finite alphabet required for the level family (k >= 2)")
    alpha = ordinals.parse_ordinal(args.ordinal)
    f = ordinals.build_t(alpha, args.color, args.n, args.k)
    return CommandResult(serialize_forest(f), ordinals.format_ordinal(alpha),
                         str(args.color), {"k": args.k, "n": args.n})


def _cmd_enumerate(args) -> CommandResult:
    seg = hierarchy.enumerate_segment(args.k, args.nodes, args.level)
    return CommandResult(hierarchy.write_segment(seg).rstrip("\n"),
                         params={"k": args.k, "nodes": args.nodes,
                                 "level": args.level},
                         multiline=True)


def _cmd_diagram(args) -> CommandResult:
    seg = hierarchy.enumerate_segment(args.k, args.nodes, args.level)
    return CommandResult(hierarchy.hasse_dot(seg).rstrip("\n"),
                         params={"k": args.k, "nodes": args.nodes,
                                 "level": args.level},
                         multiline=True)


def _render(result: CommandResult, fmt: str | None, command: str) -> str:
    if fmt is None:
        fmt = "dot" if command == "diagram" else "text"
    if fmt == "dot" and command != "diagram":
        raise ValueError("dot output is only available for diagram")
    if fmt == "json":
        payload = {"verdict": result.verdict, "lhs": result.lhs,
                   "rhs": result.rhs, "params": result.params}
        return json.dumps(payload, sort_keys=True)
    return result.verdict


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.handler(args)
        print(_render(result, args.format, args.command))
    except (OracleBoundError, SegmentBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
