"""Command-line front end.

    crtkit solve --input FILE --strategy S [--range-start A] [--verify] [--domain int|gfp-poly:P]
    crtkit bench --moduli-count R --moduli-bits K --trials T --seed N [--csv FILE]
    crtkit verify ring-iso M1 M2 ... | unit-iso P Q | theorem5 N

Results are JSON lines on stdout.  Exit codes: 0 success, 2 invalid input
(with ``{"error": code, "detail": ...}`` on stderr), 3 failed internal check.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import bench as bench_mod
from .crt import (
    DEFAULT_SEARCH_BOUND,
    CrtSolution,
    congruence_witnesses,
    shift_to_range,
    solve_euler,
    solve_fold,
    solve_garner,
    solve_generic,
    solve_search,
    validate_system,
)
from .equiv import verify_theorem5
from .errors import CrtKitError, InvalidInput, InvariantViolation
from .euclidean import INTEGERS, domain_from_name
from .integer_core import format_int, parse_int
from .polynomials import poly_from_json, poly_to_json
from .residue_rings import verify_ring_iso, verify_unit_group_iso

EXIT_OK, EXIT_USAGE, EXIT_CHECK = 0, 2, 3

INT_STRATEGIES = {
    "search": solve_search,
    "euler-totient": lambda s: solve_euler(s, "totient"),
    "euler-extgcd": lambda s: solve_euler(s, "extgcd"),
    "garner": solve_garner,
    "fold": solve_fold,
    "generic": lambda s: CrtSolution(solve_generic(INTEGERS, s.moduli, s.residues), s.modulus),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(message)


def _emit(obj) -> None:
    print(json.dumps(obj), flush=True)


def _load_input(path: str) -> dict:
    try:
        if path == "-":
            doc = json.load(sys.stdin)
        else:
            with open(path) as fh:
                doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read input {path!r}: {exc}") from None
    if not isinstance(doc, dict) or not {"moduli", "residues"} <= set(doc):
        raise InvalidInput("input must be an object with 'moduli' and 'residues'")
    if not isinstance(doc["moduli"], list) or not isinstance(doc["residues"], list):
        raise InvalidInput("'moduli' and 'residues' must be lists")
    return doc


def _solve_int(doc: dict, args) -> dict:
    s = validate_system([parse_int(x) for x in doc["moduli"]], [parse_int(x) for x in doc["residues"]])
    sol = INT_STRATEGIES[args.strategy](s)
    start = args.range_start if args.range_start is not None else doc.get("range_start")
    a = parse_int(start) if start is not None else 0
    sol = shift_to_range(sol, a)
    if args.verify:
        for mi, ui in zip(s.moduli, s.residues):
            if (sol.u - ui) % mi:
                raise InvariantViolation(f"u={sol.u} fails the congruence modulo {mi}")
        if not a <= sol.u < a + sol.modulus:
            raise InvariantViolation("u outside the requested range")
        if s.modulus <= DEFAULT_SEARCH_BOUND:
            oracle = shift_to_range(solve_search(s), a)
            if oracle.u != sol.u:
                raise InvariantViolation(f"{args.strategy} gave {sol.u}, exhaustive search gave {oracle.u}")
    return {
        "u": format_int(sol.u),
        "modulus": format_int(sol.modulus),
        "strategy": args.strategy,
        "range_start": format_int(a),
        "witnesses": [format_int(x) for x in congruence_witnesses(sol, s)],
    }


def _solve_poly(doc: dict, args, domain) -> dict:
    if args.strategy != "generic":
        raise InvalidInput("polynomial domains support only --strategy generic")
    if args.range_start is not None or doc.get("range_start") is not None:
        raise InvalidInput("range_start applies only to the integer domain")
    field = domain.one.field
    moduli = [poly_from_json(x, field) for x in doc["moduli"]]
    residues = [poly_from_json(x, field) for x in doc["residues"]]
    u = solve_generic(domain, moduli, residues)
    if args.verify:
        for mi, ri in zip(moduli, residues):
            if not domain.rem(domain.sub(u, ri), mi).is_zero():
                raise InvariantViolation(f"{u} fails the congruence modulo {mi}")
    modulus = domain.product(domain.canonical(mi) for mi in moduli)
    return {"u": poly_to_json(u), "modulus": poly_to_json(modulus), "strategy": "generic"}


def cmd_solve(args) -> int:
    doc = _load_input(args.input)
    domain = domain_from_name(args.domain)
    if domain is INTEGERS:
        _emit(_solve_int(doc, args))
    else:
        _emit(_solve_poly(doc, args, domain))
    return EXIT_OK


def cmd_bench(args) -> int:
    report = bench_mod.run_bench(args.moduli_count, args.moduli_bits, args.trials, args.seed)
    for summary in report.summaries:
        _emit(summary.to_json())
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            bench_mod.write_csv(report, fh)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.target == "ring-iso":
        if not args.values:
            raise InvalidInput("ring-iso needs at least one modulus")
        report = verify_ring_iso(args.values)
    elif args.target == "unit-iso":
        if len(args.values) != 2:
            raise InvalidInput("unit-iso needs exactly two moduli P Q")
        report = verify_unit_group_iso(*args.values)
    else:
        if len(args.values) != 1:
            raise InvalidInput("theorem5 needs exactly one set size N")
        report = verify_theorem5(args.values[0])
    _emit(report.to_json())
    return EXIT_OK if report.ok else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="crtkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve a congruence system read from a JSON file")
    p.add_argument("--input", required=True, help="JSON file, or - for stdin")
    p.add_argument("--strategy", required=True, choices=sorted(INT_STRATEGIES))
    p.add_argument("--range-start", help="decimal integer a; output lies in [a, a+m)")
    p.add_argument("--verify", action="store_true", help="re-check congruences and compare with the search oracle")
    p.add_argument("--domain", default="int", help="int (default) or gfp-poly:P")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="time the constructive strategies on random systems")
    p.add_argument("--moduli-count", type=int, required=True)
    p.add_argument("--moduli-bits", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--csv", help="write per-trial rows to this CSV file")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("verify", help="exhaustively verify an isomorphism or the set-level CRT")
    p.add_argument("target", choices=["ring-iso", "unit-iso", "theorem5"])
    p.add_argument("values", nargs="*", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except InvariantViolation as exc:
        print(json.dumps({"error": exc.code, "detail": str(exc)}), file=sys.stderr)
        return EXIT_CHECK
    except (CrtKitError, ValueError) as exc:
        code = getattr(exc, "code", "invalid_input")
        print(json.dumps({"error": code, "detail": str(exc)}), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
