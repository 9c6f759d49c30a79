"""Command-line driver.

    causex derive KB            saturation output
    causex optimize KB          plus the optimality filter
    causex verify KB --scenario FILE
    causex emit-asp KB --out DIR
    causex dot KB [--out FILE]

Exit status: 0 ok, 1 usage, 2 input diagnostics, 3 resource cap, 4 W* unsatisfiable.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .emit import emit_asp, emit_dot, emit_json
from .model import ParseError, format_atom, format_clause, parse_kb, parse_scenario, sorted_atoms
from .pipeline import run as run_pipeline
from .saturation import DEFAULT_MAX_ATOMS, ResourceLimitExceeded, UnsatisfiableTheory
from .verify import check_scenario, verify

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_CAP, EXIT_UNSAT = range(5)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("kb", help="knowledge-base file")
    common.add_argument("--raw", action="store_true", help="disable eager weak simplification")
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--ecset", action="store_true", help="render atoms as ecSet(X,Y,{...})")
    common.add_argument("--show-self", action="store_true", help="include self-explanations")
    common.add_argument("--max-atoms", type=int, default=DEFAULT_MAX_ATOMS, metavar="N")
    common.add_argument("--stage-dump", action="store_true",
                        help="print intermediate relations on stderr")

    p = _Parser(prog="causex", description="Causal explanation inference.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("derive", parents=[common], help="all derivable explanation atoms")
    sub.add_parser("optimize", parents=[common], help="keep only optimal explanation atoms")
    v = sub.add_parser("verify", parents=[common], help="check atoms against a scenario")
    v.add_argument("--scenario", required=True)
    v.add_argument("--input-stage", choices=("derive", "optimize"), default="optimize")
    e = sub.add_parser("emit-asp", parents=[common], help="write the three ASP programs")
    e.add_argument("--out", required=True, help="output directory")
    d = sub.add_parser("dot", parents=[common], help="DOT graph of explanation paths")
    d.add_argument("--out", help="output file (default: stdout)")
    d.add_argument("--input-stage", choices=("derive", "optimize"), default="optimize")
    return p


def _read(path: str, err) -> str | None:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        print(f"{path}: error: {exc.strerror or exc}", file=err)
        return None


def _dump(res, err):
    print("% stage: ontt", file=err)
    for a, b in sorted(res.closure):
        print(f"ontt({a},{b}).", file=err)
    print("% stage: W*", file=err)
    for cl in sorted(res.wstar.clauses, key=lambda c: sorted((l.symbol, l.positive) for l in c)):
        print(format_clause(cl), file=err)
    for name, atoms in (("ecinit", res.initial), ("ecSet", res.derived),
                        ("ecSetRes", res.optimal or ())):
        print(f"% stage: {name}", file=err)
        for a in sorted_atoms(atoms):
            print(format_atom(a, ecset=True), file=err)


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    if args.max_atoms < 1:
        print("causex: error: --max-atoms must be positive", file=err)
        return EXIT_USAGE

    src = _read(args.kb, err)
    if src is None:
        return EXIT_INPUT
    diags: list = []
    try:
        kb = parse_kb(src, diags)
    except ParseError:
        pass
    for d in diags:
        print(f"{args.kb}:{d}", file=err)
    if any(d.severity == "error" for d in diags):
        return EXIT_INPUT

    if args.command == "emit-asp":
        emit_asp(kb).write(args.out, Path(args.kb).stem)
        return EXIT_OK

    scenario = None
    if args.command == "verify":
        ssrc = _read(args.scenario, err)
        if ssrc is None:
            return EXIT_INPUT
        sdiags: list = []
        try:
            scenario = parse_scenario(ssrc, sdiags)
        except ParseError:
            pass
        for d in sdiags:
            print(f"{args.scenario}:{d}", file=err)
        if any(d.severity == "error" for d in sdiags):
            return EXIT_INPUT
        unknown = check_scenario(scenario, kb.symbols)
        if unknown:
            for name in unknown:
                print(f"{args.scenario}: error: undeclared symbol {name}", file=err)
            return EXIT_INPUT

    stage = args.command
    if stage in ("verify", "dot"):
        stage = args.input_stage
    try:
        res = run_pipeline(kb, simplify=not args.raw, optimize=(stage == "optimize"),
                           max_atoms=args.max_atoms)
    except UnsatisfiableTheory as exc:
        print(f"{args.kb}: fatal: {exc}", file=err)
        return EXIT_UNSAT
    except ResourceLimitExceeded as exc:
        print(f"{args.kb}: fatal: {exc}", file=err)
        return EXIT_CAP
    if args.stage_dump:
        _dump(res, err)

    if stage == "optimize":
        atoms, status = res.optimal, "optimal"
    else:
        atoms, status = res.derived, "derived"
    if not args.show_self:
        atoms = frozenset(a for a in atoms if a.explainer != a.explained)

    if args.command == "dot":
        text = emit_dot(atoms, kb)
        if args.out:
            Path(args.out).write_bytes(text.encode("utf-8"))
        else:
            out.write(text)
        return EXIT_OK

    if args.command == "verify":
        verified, suppressed = verify(atoms, scenario)
        entries = [(a, "verified") for a in verified] + [(a, "suppressed") for a in suppressed]
        shown = verified
    else:
        entries = [(a, status) for a in atoms]
        shown = atoms

    if args.json:
        out.write(emit_json(entries))
    else:
        for a in sorted_atoms(shown):
            print(format_atom(a, ecset=args.ecset), file=out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
