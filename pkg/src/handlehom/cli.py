"""Command-line front end.

Exit status: 0 success, 1 usage error, 2 parse/semantic error (including
inapplicable requests), 3 mathematical inconsistency or invariance violation.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import catalog as catalog_entries
from .catalog import get as catalog_entry
from .core import Ring, SignConvention, build_complex, euler_characteristic, validate
from .duality import check_duality, dual_decomposition
from .errors import (
    HandleHomologyError,
    InconsistentBoundary,
    InvarianceViolation,
    NotApplicable,
    ParseError,
)
from .homology import classify_orientability, format_group, homology
from .moves import fuzz_moves, parse_move
from .textio import parse, serialize, serialize_journal, serialize_report

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_MATH = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _load(source: str):
    if source.startswith("catalog:"):
        name = source[len("catalog:"):]
        try:
            return catalog_entry(name).decomposition
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    if source == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from None
    return parse(text)


def _ring(s):
    return Ring.INTEGERS if s == "z" else Ring.MOD2


def _emit(text: str, out_path: str | None, out):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def _cmd_validate(args, out):
    d = _load(args.input)
    rep = validate(d)
    out.write(f"dimension = {rep.dimension}\n")
    out.write("handles = " + " ".join(str(r) for r in rep.ranks) + "\n")
    if rep.ok:
        out.write("ok\n")
        return EXIT_OK
    for v in rep.violations:
        out.write(f"violation {v.kind}: {v.message}\n")
    return EXIT_MATH


def _cmd_homology(args, out):
    d = _load(args.input)
    ring = _ring(args.ring)
    h = homology(build_complex(d, SignConvention(args.sign), ring))
    for k, g in enumerate(h.groups):
        out.write(f"H_{k} = {format_group(g, ring)}\n")
    out.write("betti = " + " ".join(str(b) for b in h.betti) + "\n")
    out.write(f"chi = {h.euler_characteristic}\n")
    return EXIT_OK


def _cmd_euler(args, out):
    d = _load(args.input)
    build_complex(d)
    out.write(f"chi = {euler_characteristic(d)}\n")
    return EXIT_OK


def _cmd_orientability(args, out):
    d = _load(args.input)
    build_complex(d)
    res = classify_orientability(d)
    out.write(f"{res.verdict.value}: {res.reason}\n")
    return EXIT_OK


def _cmd_dual(args, out):
    d = _load(args.input)
    build_complex(d)
    _emit(serialize(dual_decomposition(d, _ring(args.ring))), args.output, out)
    return EXIT_OK


def _cmd_duality_check(args, out):
    d = _load(args.input)
    rep = check_duality(d, _ring(args.ring), SignConvention(args.sign))
    out.write(rep.render())
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(serialize_report(rep))
    return EXIT_OK if rep.all_isomorphic else EXIT_MATH


def _cmd_move(args, out):
    d = _load(args.input)
    build_complex(d)
    for line in args.apply:
        try:
            move = parse_move(line)
        except ValueError as exc:
            raise UsageError(f"bad move {line!r}: {exc}") from None
        try:
            d = move.apply(d)
        except ValueError as exc:
            raise UsageError(f"bad move {line!r}: {exc}") from None
    build_complex(d)
    _emit(serialize(d), args.output, out)
    return EXIT_OK


def _cmd_fuzz(args, out):
    d = _load(args.input)
    build_complex(d)
    try:
        j = fuzz_moves(d, args.steps, args.seed)
    except InvarianceViolation as exc:
        sys.stderr.write(f"invariance violation: {exc}\n")
        sys.stderr.write(serialize_journal(exc.journal))
        return EXIT_MATH
    h = homology(build_complex(j.result))
    out.write(f"steps = {len(j.moves)}\n")
    out.write("handles = " + " ".join(str(len(x)) for x in j.result.handles) + "\n")
    for k, g in enumerate(h.groups):
        out.write(f"H_{k} = {g}\n")
    out.write(f"chi = {h.euler_characteristic}\n")
    if args.output:
        _emit(serialize_journal(j), args.output, out)
    return EXIT_OK


def _cmd_catalog(args, out):
    if args.name is None:
        for e in catalog_entries():
            h = e.expected
            groups = ", ".join(str(g) for g in h.groups)
            flag = "orientable" if e.orientable else "non-orientable"
            out.write(f"{e.name}\tn={e.decomposition.dimension}\t{flag}\t({groups})\n")
        return EXIT_OK
    try:
        e = catalog_entry(args.name)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    _emit(serialize(e.decomposition), args.output, out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="handlehom", description="Handle homology of manifolds.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def cmd(name, func, help, ring=False, sign=False, output=False):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=func)
        if name != "catalog":
            sp.add_argument("input", help="path, '-' for stdin, or catalog:NAME")
        if ring:
            sp.add_argument("--ring", choices=["z", "z2"], default="z")
        if sign:
            sp.add_argument("--sign", choices=["geiges", "plain"], default="geiges")
        if output:
            sp.add_argument("-o", "--output", help="write the text result to this file")
        return sp

    cmd("validate", _cmd_validate, "check structure and that d d = 0")
    cmd("homology", _cmd_homology, "homology groups, Betti numbers, chi", ring=True, sign=True)
    cmd("euler", _cmd_euler, "Euler characteristic from handle counts")
    cmd("orientability", _cmd_orientability, "classify a closed connected manifold")
    cmd("dual", _cmd_dual, "emit the upside-down decomposition", ring=True, output=True)
    cmd("duality-check", _cmd_duality_check, "compare H^k with H_(n-k) of the dual",
        ring=True, sign=True, output=True)
    mv = cmd("move", _cmd_move, "apply moves and emit the result", output=True)
    mv.add_argument("--apply", action="append", required=True, metavar="MOVE",
                    help="move line such as 'slide 1 a b +'; repeatable")
    fz = cmd("fuzz", _cmd_fuzz, "random Cerf moves with invariance checks", output=True)
    fz.add_argument("--steps", type=int, default=100)
    fz.add_argument("--seed", type=int, default=0)
    cat = cmd("catalog", _cmd_catalog, "list builtin entries or print one", output=True)
    cat.add_argument("name", nargs="?")
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError(parser.format_usage().strip())
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"{exc}\n")
        return EXIT_USAGE
    except NotApplicable as exc:
        sys.stderr.write(f"not applicable: {exc}\n")
        return EXIT_INPUT
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_INPUT
    except InconsistentBoundary as exc:
        sys.stderr.write(f"inconsistent: {exc}\n")
        return EXIT_MATH
    except HandleHomologyError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
