"""Command-line front end.

One binary, flag-driven:

    spin solve   --input FILE [--pairing standard|FILE]
    spin count   --input FILE [--pairing standard|FILE]
    spin group   --input FILE --input FILE ... [--pairing standard|FILE]
    spin hyper count --genus G --perm "(1 2 3)" [--perm ...]
    spin hyper table2
    spin cyclo decomp --order N --genus G
    spin cyclo phi --d D
    spin klein

Every subcommand takes --format json|table (default json); both formats
carry identical numeric content and are byte-for-byte deterministic for
identical inputs.  Exit codes: 0 success, 2 invalid input, 3 scientific
discrepancy (a closed-form count disagreeing with brute force, or a
catalog row disagreeing with its expected count; both sides are printed
before exiting).

Matrix inputs use the shared JSON shape {"genus": g, "matrix": [[...]],
"pairing": "standard" | [[...]]} with images in matrix COLUMNS.  Input
paths that do not exist on disk fall back to the shipped fixture names
(klein_R.json, klein_S.json, klein_T.json).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import cyclotomic, fixtures, hyperelliptic
from .surface_action import (HomologyAction, Pairing, count_invariant,
                             from_interchange, group_invariant_spins,
                             invariant_spins, standard_pairing, v_vector)


class InputError(ValueError):
    """User input problem; maps to exit code 2."""


class Discrepancy(Exception):
    """Two supposedly equal scientific results disagree; exit code 3."""


def _read_json(path: str) -> object:
    if Path(path).exists():
        text = Path(path).read_text(encoding="utf-8")
    elif path in fixtures.fixture_names():
        text = fixtures.fixture_text(path)
    else:
        raise InputError(f"input file {path!r} does not exist")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_action(path: str, pairing_flag: str | None) -> tuple[HomologyAction, Pairing]:
    try:
        action, pairing = from_interchange(_read_json(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc
    if pairing_flag and pairing_flag != "standard":
        obj = _read_json(pairing_flag)
        try:
            pairing = Pairing(action.genus, obj)
        except (TypeError, ValueError) as exc:
            raise InputError(f"pairing file {pairing_flag}: {exc}") from exc
    elif pairing_flag == "standard":
        pairing = standard_pairing(action.genus)
    return action, pairing


def _render_table(payload: object, indent: str = "") -> list[str]:
    """Flatten a JSON payload to aligned text with identical content."""
    lines: list[str] = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            value = payload[key]
            needs_block = ((isinstance(value, dict) and value) or
                           (isinstance(value, list) and value and
                            not _is_row(value) and not _is_matrix(value)))
            if needs_block:
                lines.append(f"{indent}{key}:")
                lines.extend(_render_table(value, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {_scalar(value)}")
    elif isinstance(payload, list):
        for item in payload:
            if isinstance(item, (dict, list)) and not _is_row(item):
                lines.extend(_render_table(item, indent + "  "))
                lines.append("")
            else:
                lines.append(f"{indent}{_scalar(item)}")
    else:
        lines.append(f"{indent}{_scalar(payload)}")
    return lines


def _is_row(value: object) -> bool:
    return isinstance(value, list) and all(isinstance(x, int) for x in value)


def _is_matrix(value: object) -> bool:
    return isinstance(value, list) and bool(value) and all(_is_row(r) for r in value)


def _scalar(value: object) -> str:
    if _is_matrix(value):
        return "; ".join(" ".join(map(str, row)) for row in value)
    if _is_row(value):
        return " ".join(map(str, value))
    if value is None:
        return "-"
    return str(value)


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print("\n".join(line for line in _render_table(payload)))


def _solution_lists(solset) -> list[list[int]]:
    return [v.to_ints() for v in solset.vectors()]


def _cmd_solve(args: argparse.Namespace) -> int:
    action, pairing = _load_action(args.input, args.pairing)
    sols = invariant_spins(action, pairing)
    _emit({"genus": action.genus,
           "count": sols.cardinality(),
           "solutions": _solution_lists(sols)}, args.format)
    return 0


def _cmd_count(args: argparse.Namespace) -> int:
    action, pairing = _load_action(args.input, args.pairing)
    _emit({"genus": action.genus,
           "count": count_invariant(action, pairing)}, args.format)
    return 0


def _cmd_group(args: argparse.Namespace) -> int:
    loaded = [_load_action(path, args.pairing) for path in args.input]
    actions = [a for a, _ in loaded]
    pairing = loaded[0][1]
    if any(a.genus != actions[0].genus for a in actions):
        raise InputError("all input matrices must share one genus")
    sols = group_invariant_spins(actions, pairing)
    _emit({"genus": actions[0].genus,
           "inputs": list(args.input),
           "count": sols.cardinality(),
           "solutions": _solution_lists(sols)}, args.format)
    return 0


def _parse_perm(genus: int, text: str) -> hyperelliptic.BranchPermutation:
    try:
        return hyperelliptic.BranchPermutation.from_cycles(genus, text)
    except ValueError as exc:
        raise InputError(f"permutation {text!r}: {exc}") from exc


def _cmd_hyper_count(args: argparse.Namespace) -> int:
    perms = [_parse_perm(args.genus, text) for text in args.perm]
    if len(perms) > 1:
        count = hyperelliptic.group_fixed_count(perms)
        _emit({"genus": args.genus,
               "perms": [p.to_cycles() for p in perms],
               "count": count}, args.format)
        return 0
    perm = perms[0]
    brute = hyperelliptic.fixed_count_brute(perm)
    payload: dict = {"genus": args.genus, "perm": perm.to_cycles(),
                     "brute_force": brute, "closed_form": None, "shape": None}
    try:
        shape = hyperelliptic.classify_orbit_shape(perm)
    except ValueError:
        _emit(payload, args.format)
        return 0
    closed = hyperelliptic.fixed_count_closed_form(shape, args.genus)
    payload["shape"] = {"n": shape.order, "fixed": shape.fixed_points,
                        "r": shape.free_orbits}
    payload["closed_form"] = closed
    _emit(payload, args.format)
    if closed != brute:
        raise Discrepancy(f"closed form gives {closed}, brute force gives {brute}")
    return 0


def _cmd_hyper_table2(args: argparse.Namespace) -> int:
    rows = []
    mismatches = []
    for case in hyperelliptic.bolza_table():
        computed = hyperelliptic.group_fixed_count(case.generators)
        rows.append({"case": case.case_label,
                     "group": case.group_name,
                     "generators": [p.to_cycles() for p in case.generators],
                     "expected": case.expected_count,
                     "computed": computed})
        if computed != case.expected_count:
            mismatches.append(case.case_label)
    _emit({"cases": rows, "all_match": not mismatches}, args.format)
    if mismatches:
        raise Discrepancy(f"computed counts disagree with the catalog in case(s) "
                          f"{', '.join(mismatches)}")
    return 0


def _cmd_cyclo_decomp(args: argparse.Namespace) -> int:
    decs = cyclotomic.decompositions(args.order, args.genus)
    rows = []
    for dec in decs:
        row: dict = {"parts": [[d, e] for d, e in dec.parts],
                     "shifted_det_odd": cyclotomic.shifted_det_is_odd(dec),
                     "unique_spin": None,
                     "quotient_genus_eigen": None}
        if args.order % 2 == 1:
            report = cyclotomic.unique_spin_iff_quotient_genus_zero(dec)
            row["unique_spin"] = report.unique
            row["quotient_genus_eigen"] = report.quotient_genus_eigen
        rows.append(row)
    _emit({"order": args.order, "genus": args.genus,
           "decompositions": rows}, args.format)
    return 0


def _cmd_cyclo_phi(args: argparse.Namespace) -> int:
    poly = cyclotomic.cyclotomic_poly(args.d)
    _emit({"d": args.d,
           "coefficients": list(poly.coefficients),
           "pretty": poly.pretty(),
           "phi_at_one": cyclotomic.phi_at_one(args.d),
           "euler_phi": cyclotomic.euler_phi(args.d)}, args.format)
    return 0


def _cmd_klein(args: argparse.Namespace) -> int:
    data = fixtures.klein_data()
    generators = {}
    printed = {"R": data.V_R, "S": data.V_S, "T": data.V_T}
    for letter in "RST":
        action = getattr(data, letter)
        sols = invariant_spins(action, data.pairing)
        generators[letter] = {
            "V_printed": list(printed[letter]),
            "V_mod2": v_vector(action, data.pairing).to_ints(),
            "count": sols.cardinality(),
            "solutions": _solution_lists(sols),
        }
    group = group_invariant_spins([data.R, data.S, data.T], data.pairing)
    _emit({"genus": 3,
           "pairing": "standard",
           "generators": generators,
           "group": {"count": group.cardinality(),
                     "solutions": _solution_lists(group)}}, args.format)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json",
                        help="output format (default: json)")
    matrixy = argparse.ArgumentParser(add_help=False)
    matrixy.add_argument("--pairing", metavar="standard|FILE", default=None,
                         help="override the pairing: 'standard' or a JSON file "
                              "with a 2g x 2g integer matrix")

    parser = argparse.ArgumentParser(
        prog="spin",
        description="Invariant spin structures on Riemann surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, matrixy],
                       help="solve for all invariant spin structures")
    p.add_argument("--input", required=True, help="matrix JSON file")
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("count", parents=[common, matrixy],
                       help="count invariant spin structures")
    p.add_argument("--input", required=True, help="matrix JSON file")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("group", parents=[common, matrixy],
                       help="intersect invariant sets of several matrices")
    p.add_argument("--input", required=True, action="append",
                   help="matrix JSON file (repeatable)")
    p.set_defaults(func=_cmd_group)

    hyper = sub.add_parser("hyper", help="hyperelliptic branch-point model")
    hyper_sub = hyper.add_subparsers(dest="hyper_command", required=True)
    p = hyper_sub.add_parser("count", parents=[common],
                             help="count classes fixed by branch permutations")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--perm", required=True, action="append",
                   help='cycle notation, e.g. "(1 2 3)(4 5 6)" (repeatable)')
    p.set_defaults(func=_cmd_hyper_count)
    p = hyper_sub.add_parser("table2", parents=[common],
                             help="genus-2 catalog, computed vs expected")
    p.set_defaults(func=_cmd_hyper_table2)

    cyclo = sub.add_parser("cyclo", help="cyclotomic order analysis")
    cyclo_sub = cyclo.add_subparsers(dest="cyclo_command", required=True)
    p = cyclo_sub.add_parser("decomp", parents=[common],
                             help="admissible decompositions for an order and genus")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=_cmd_cyclo_decomp)
    p = cyclo_sub.add_parser("phi", parents=[common],
                             help="cyclotomic polynomial and its value at 1")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=_cmd_cyclo_phi)

    p = sub.add_parser("klein", parents=[common],
                       help="full quartic reproduction from shipped fixtures")
    p.set_defaults(func=_cmd_klein)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Discrepancy as exc:
        print(f"discrepancy: {exc}", file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
