"""Command-line front end: one sub-command per library operation.

Machine output (JSON or DOT) goes to stdout and diagnostics to stderr.
Exit status is 0 on success, 1 when a check comes out negative or a
verification finds disagreements, and 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, TextIO

from . import serialize as ser
from .circulant import build_circ, canonicalize_circ, circ_components, classify_circ_planar
from .errors import SynthesisFailed, WhplanarError
from .gamma import build_gamma, canonicalize_gamma, canonicalize_gamma_loose, check_conditions, gamma_components
from .graph import to_dot
from .table import classify_gamma, classify_with_regularity
from .verify import EnumerationBounds, verify_named_claims, verify_theorem_A, verify_prop31
from .whitehead import (
    is_cyclically_reduced,
    parse_word,
    plan_from_word,
    plan_multiplicities,
    reduced_whitehead_spec,
    synthesize_word,
    whitehead_graph,
)

DEFAULT_MAX_N = 16


class UsageError(Exception):
    pass


def max_n() -> int:
    raw = os.environ.get("GAMMA_MAX_N", str(DEFAULT_MAX_N))
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"GAMMA_MAX_N must be an integer, got {raw!r}")
    if value < 1:
        raise UsageError("GAMMA_MAX_N must be positive")
    return value


def _check_n(n: int) -> None:
    if n < 1:
        raise UsageError("--n must be at least 1")
    cap = max_n()
    if n > cap:
        raise UsageError(f"n={n} exceeds GAMMA_MAX_N={cap}")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _output_flags(p: argparse.ArgumentParser) -> None:
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON output (default)")
    fmt.add_argument("--dot", dest="fmt", action="store_const", const="dot", help="DOT output")
    p.set_defaults(fmt="json")


def _gamma_flags(p: argparse.ArgumentParser, loose: bool = True) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--A", type=int, action="append", default=[], metavar="a")
    p.add_argument("--B", type=int, action="append", default=[], metavar="b")
    p.add_argument("--Q", type=int, action="append", default=[], metavar="q")
    if loose:
        p.add_argument("--loose", action="store_true", help="allow 0 in A or B (loops)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="whplanar", description="Cyclically symmetric graphs, circulants and Whitehead graphs.")
    top = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    gamma = top.add_parser("gamma", help="Gamma_n(A, B, Q) graphs").add_subparsers(dest="verb", required=True)
    p = gamma.add_parser("build", help="construct the graph")
    _gamma_flags(p)
    _output_flags(p)
    p = gamma.add_parser("classify", help="matching table rows")
    _gamma_flags(p, loose=False)
    p.add_argument("--regular", action="store_true", help="also require A, B both empty or both non-empty")
    p = gamma.add_parser("components", help="component count and quotient spec")
    _gamma_flags(p)
    p = gamma.add_parser("conditions", help="condition report (1)-(8)")
    _gamma_flags(p)

    circ = top.add_parser("circ", help="circulant graphs").add_subparsers(dest="verb", required=True)
    for verb, text in (("build", "construct the graph"), ("classify", "planarity verdict"), ("components", "components")):
        p = circ.add_parser(verb, help=text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--S", type=int, action="append", default=[], metavar="s")
        if verb == "build":
            _output_flags(p)

    wh = top.add_parser("whitehead", help="cyclic presentations").add_subparsers(dest="verb", required=True)
    for verb, text in (("parse", "parse a word"), ("graph", "Whitehead graph"), ("spec", "reduced Whitehead spec")):
        p = wh.add_parser(verb, help=text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--word", required=True)
        if verb == "graph":
            _output_flags(p)
            p.add_argument("--reduced", action="store_true", help="collapse multiedges and drop loops")
    p = wh.add_parser("synthesize", help="word whose reduced Whitehead graph is the spec")
    _gamma_flags(p, loose=False)

    ver = top.add_parser("verify", help="verification harness").add_subparsers(dest="verb", required=True)
    p = ver.add_parser("theorem", help="classifier vs planarity oracle")
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--max-A", type=int, default=3)
    p.add_argument("--max-B", type=int, default=3)
    p.add_argument("--max-Q", type=int, default=4)
    p = ver.add_parser("prop31", help="non-planar families")
    p.add_argument("--n-max", type=int, default=16)
    p = ver.add_parser("claims", help="named claims")
    p.add_argument("--n", type=int, action="append", default=[], help="even n >= 4 (repeatable; default 4 6 8 10)")
    return parser


def _emit_json(out: TextIO, obj) -> None:
    out.write(json.dumps(obj, indent=2) + "\n")


def _gamma_spec(args, allow_loose: bool = True):
    _check_n(args.n)
    make = canonicalize_gamma_loose if allow_loose and getattr(args, "loose", False) else canonicalize_gamma
    return make(args.n, args.A, args.B, args.Q)


def _graph_out(out: TextIO, g, fmt: str, name: str = "") -> None:
    if fmt == "dot":
        out.write(to_dot(g, name))
    else:
        _emit_json(out, ser.graph_to_json(g))


def _report_out(out: TextIO, err: TextIO, report) -> int:
    data = report.to_json()
    # wall time varies run to run; keep stdout byte-stable
    err.write(f"{report.name}: {report.specs_checked} specs in {data.pop('elapsed')}s\n")
    _emit_json(out, data)
    if not report.verified:
        err.write(f"{len(report.disagreements)} disagreement(s)\n")
        return 1
    return 0


def _run_gamma(args, out: TextIO, err: TextIO) -> int:
    if args.verb == "build":
        spec = _gamma_spec(args)
        _graph_out(out, build_gamma(spec), args.fmt, str(spec))
        return 0
    if args.verb == "classify":
        spec = _gamma_spec(args, allow_loose=False)
        matches = classify_with_regularity(spec) if args.regular else classify_gamma(spec)
        _emit_json(out, [m.to_json() for m in matches])
        if not matches:
            err.write(f"{spec}: no table row matches\n")
            return 1
        return 0
    if args.verb == "components":
        spec = _gamma_spec(args)
        if spec.Q:
            _emit_json(out, ser.decomposition_to_json(gamma_components(spec)))
        else:
            # with Q empty the graph is two circulants side by side
            a = circ_components(canonicalize_circ(spec.n, spec.A))
            b = circ_components(canonicalize_circ(spec.n, spec.B))
            _emit_json(out, {"A": ser.circ_components_to_json(*a), "B": ser.circ_components_to_json(*b)})
        return 0
    spec = _gamma_spec(args)
    _emit_json(out, ser.conditions_to_json(check_conditions(spec)))
    return 0


def _run_circ(args, out: TextIO, err: TextIO) -> int:
    _check_n(args.n)
    spec = canonicalize_circ(args.n, args.S)
    if args.verb == "build":
        _graph_out(out, build_circ(spec), args.fmt, f"circ_{spec.n}")
        return 0
    if args.verb == "components":
        _emit_json(out, ser.circ_components_to_json(*circ_components(spec)))
        return 0
    verdict = classify_circ_planar(spec)
    _emit_json(out, ser.circ_verdict_to_json(verdict))
    return 0 if verdict.planar else 1


def _run_whitehead(args, out: TextIO, err: TextIO) -> int:
    if args.verb == "synthesize":
        spec = _gamma_spec(args, allow_loose=False)
        plan = plan_multiplicities(spec)
        p = synthesize_word(spec)
        data = ser.presentation_to_json(p)
        data["length"] = len(p.word)
        data["plan"] = ser.plan_to_json(plan)
        data["realized"] = ser.plan_to_json(plan_from_word(p))
        _emit_json(out, data)
        return 0
    _check_n(args.n)
    p = parse_word(args.n, args.word)
    if args.verb == "parse":
        data = ser.presentation_to_json(p)
        data["letters"] = [[x.generator, x.sign] for x in p.word]
        data["cyclically_reduced"] = is_cyclically_reduced(p)
        _emit_json(out, data)
        return 0
    if args.verb == "graph":
        g = whitehead_graph(p)
        if args.reduced:
            g = build_gamma(reduced_whitehead_spec(p))
        _graph_out(out, g, args.fmt, f"P_{p.n}")
        return 0
    _emit_json(out, ser.gamma_spec_to_json(reduced_whitehead_spec(p)))
    return 0


def _run_verify(args, out: TextIO, err: TextIO) -> int:
    if args.verb == "theorem":
        _check_n(args.n_max)
        bounds = EnumerationBounds(args.n_min, args.n_max, args.max_A, args.max_B, args.max_Q)
        return _report_out(out, err, verify_theorem_A(bounds))
    if args.verb == "prop31":
        _check_n(args.n_max)
        return _report_out(out, err, verify_prop31(args.n_max))
    n_list = args.n or [4, 6, 8, 10]
    for n in n_list:
        _check_n(n)
    return _report_out(out, err, verify_named_claims(n_list))


_GROUPS = {"gamma": _run_gamma, "circ": _run_circ, "whitehead": _run_whitehead, "verify": _run_verify}


def run(argv: Sequence[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
        return _GROUPS[args.group](args, out, err)
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)
    except SynthesisFailed as exc:
        err.write(f"error: {exc}\n")
        return 1
    except UsageError as exc:
        err.write(build_parser().format_usage())
        err.write(f"error: {exc}\n")
        return 2
    except (WhplanarError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
