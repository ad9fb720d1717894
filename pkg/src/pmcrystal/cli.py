"""Command-line front end: decompositions, characters, truncations, plans,
Schur modules and DOT graph export over JSON.

Every command prints a JSON envelope {"status", "result", "diagnostics"}
(or raw DOT/ASCII with --format) and exits 0.  Validation problems exit 2
with a machine-readable diagnostic; an internal oracle disagreement exits 1.
All output orderings are deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import build_root_datum, weight_str
from .crystal import graph_to_json, to_dot
from .product import (ConsistencyError, multiset_from_pairs, product_crystal,
                      validate_points)
from .truncation import (ThresholdSet, build_plan, char_by_plan, full_character,
                         truncate, truncation_character, up_closure,
                         validate_threshold_set)
from .typea import (diagram_ascii, lr_skew_expand, restrict_coeffs,
                    schur_decompose, sequence_of_diagram, check_sequence,
                    skew_normalise, specht_decompose_bruteforce, stable_bound,
                    stable_coeffs, flagged_schur_char, min_rank)
from .weightring import laurent_str


class ValidationError(ValueError):
    pass


def _parse_datum(args):
    try:
        return build_root_datum(args.cartan, args.rank)
    except ValueError as err:
        raise ValidationError(str(err)) from err


def _parse_multiset(datum, text):
    try:
        pairs = json.loads(text)
        r = multiset_from_pairs(pairs)
        validate_points(datum, r)
        return r
    except (ValueError, TypeError, KeyError) as err:
        raise ValidationError(f"bad point multiset {text!r}: {err}") from err


def _parse_truncation(datum, text):
    try:
        data = json.loads(text)
        thresholds = [None] * len(datum.vertices)
        for key, val in data["thresholds"].items():
            thresholds[int(key) - 1] = int(val)
        j = ThresholdSet(tuple(thresholds))
        validate_threshold_set(datum, j)
        return j
    except (ValueError, TypeError, KeyError) as err:
        raise ValidationError(f"bad truncation {text!r}: {err}") from err


def _decomposition_json(datum, dec):
    """Both serialisations: fundamental coordinates always, and the
    partition-plus-det form for GL."""
    if datum.kind != "GL":
        return {weight_str(w): m for w, m in sorted(dec.items())}
    by_partition = {}
    detail = []
    for w, m in sorted(dec.items()):
        parts = [x for x in w if x > 0]
        fund = {str(i): datum.pairing(i, w) for i in datum.vertices
                if datum.pairing(i, w)}
        det = w[-1]
        by_partition[json.dumps(parts)] = m
        detail.append({"partition": parts, "fundamental": fund, "det": det,
                       "multiplicity": m})
    return {"by_partition": by_partition, "summands": detail}


def cmd_decompose(args):
    from .product import decompose
    datum = _parse_datum(args)
    r = _parse_multiset(datum, args.R)
    dec = decompose(datum, r)
    return {"decomposition": _decomposition_json(datum, dec)}


def cmd_character(args):
    datum = _parse_datum(args)
    r = _parse_multiset(datum, args.R)
    if args.truncation:
        j = _parse_truncation(datum, args.truncation)
        ch = truncation_character(datum, r, j)
    else:
        ch = full_character(datum, r)
    result = {"terms": {weight_str(w): c for w, c in ch.items()}}
    if datum.kind == "GL":
        result["laurent"] = laurent_str(datum, ch)
    return result


def cmd_truncate(args):
    datum = _parse_datum(args)
    r = _parse_multiset(datum, args.R)
    j = (_parse_truncation(datum, args.truncation) if args.truncation
         else up_closure(datum, r.support()))
    try:
        elements = truncate(datum, r, j)
    except ValueError as err:
        raise ValidationError(str(err)) from err
    return {"truncation": j.to_json(),
            "elements": [p.to_json() for p in elements],
            "count": len(elements)}


def cmd_plan(args):
    datum = _parse_datum(args)
    r = _parse_multiset(datum, args.R)
    j = _parse_truncation(datum, args.truncation) if args.truncation else None
    try:
        plan = build_plan(datum, r, j)
    except ValueError as err:
        raise ValidationError(str(err)) from err
    ch = char_by_plan(datum, plan)
    return {"plan": plan.to_json(),
            "character": {weight_str(w): c for w, c in ch.items()}}


def cmd_graph(args):
    datum = _parse_datum(args)
    r = _parse_multiset(datum, args.R)
    graph = product_crystal(datum, r, threads=max(1, args.threads))
    if args.format == "dot":
        return to_dot(graph)
    return {"graph": graph_to_json(graph)}


def cmd_schur(args):
    if (args.sequence is None) == (args.diagram is None):
        raise ValidationError("schur needs exactly one of --sequence/--diagram")
    if args.sequence is not None:
        try:
            seq = check_sequence(json.loads(args.sequence))
        except (ValueError, TypeError) as err:
            raise ValidationError(f"bad sequence: {err}") from err
        n = args.rank if args.rank else max(len(seq), 1)
        if n < len(seq):
            raise ValidationError(f"rank {n} is smaller than the sequence")
        dec = schur_decompose(seq, n)
        datum = build_root_datum("GL", n)
        return {"rank": n,
                "flagged_character": laurent_str(datum, flagged_schur_char(seq, n)),
                "decomposition": {json.dumps(list(lam)): m
                                  for lam, m in sorted(dec.items())}}
    try:
        boxes = frozenset((int(r), int(c)) for r, c in json.loads(args.diagram))
    except (ValueError, TypeError) as err:
        raise ValidationError(f"bad diagram: {err}") from err
    if args.format == "ascii":
        return diagram_ascii(boxes)
    try:
        seq = sequence_of_diagram(boxes)
    except ValueError as err:
        raise ValidationError(str(err)) from err
    n = args.rank if args.rank else max(len(seq), 1)
    dec = schur_decompose(seq, n)
    result = {"rank": n, "sequence": [list(p) for p in seq],
              "decomposition": {json.dumps(list(lam)): m
                                for lam, m in sorted(dec.items())}}
    skew = skew_normalise(boxes)
    if skew is not None:
        lam, mu = skew
        result["skew_shape"] = {"lambda": list(lam), "mu": list(mu)}
        result["skew_lr"] = {json.dumps(list(p)): m
                             for p, m in sorted(lr_skew_expand(lam, mu).items())}
    if len(boxes) <= 7:
        result["specht"] = {json.dumps(list(p)): m for p, m in
                            sorted(specht_decompose_bruteforce(boxes).items())}
    return result


def cmd_stable(args):
    try:
        r = multiset_from_pairs(json.loads(args.R))
        datum = build_root_datum("GL", max(min_rank(r), 2))
        validate_points(datum, r)  # parity check against the GL colouring
    except (ValueError, TypeError) as err:
        raise ValidationError(f"bad point multiset {args.R!r}: {err}") from err
    if args.bound:
        return {"stable_bound": stable_bound(r)}
    coeffs = stable_coeffs(r)
    if args.restrict is not None:
        coeffs = restrict_coeffs(coeffs, args.restrict)
    return {"stable_bound": stable_bound(r),
            "coefficients": {json.dumps(list(lam)): m
                             for lam, m in sorted(coeffs.items())}}


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pmcrystal",
        description="Product monomial crystals, truncation characters, and "
                    "generalised Schur modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_cartan=True):
        if need_cartan:
            p.add_argument("--cartan", default="A", choices=["A", "D", "E6", "E7", "E8", "GL"])
            p.add_argument("--rank", type=int, default=2)
        p.add_argument("--format", default="json", choices=["json", "dot", "ascii"])
        p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("decompose", help="decompose M(R) into irreducibles")
    common(p)
    p.add_argument("--R", required=True, help='JSON [[i,c,mult],...]')
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("character", help="character of M(R) or a truncation")
    common(p)
    p.add_argument("--R", required=True)
    p.add_argument("--truncation", help='JSON {"thresholds": {"i": k}}')
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("truncate", help="list the monomials of M(R, J)")
    common(p)
    p.add_argument("--R", required=True)
    p.add_argument("--truncation")
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("plan", help="emit a build plan for a truncation")
    common(p)
    p.add_argument("--R", required=True)
    p.add_argument("--truncation")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("graph", help="emit the crystal graph of M(R)")
    common(p)
    p.add_argument("--R", required=True)
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("schur", help="Schur module of a sequence or diagram")
    common(p, need_cartan=False)
    p.add_argument("--rank", type=int, default=0)
    p.add_argument("--sequence", help="JSON [[parts],...]")
    p.add_argument("--diagram", help="JSON [[row,col],...]")
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("stable", help="stable coefficients of a multiset")
    common(p, need_cartan=False)
    p.add_argument("--R", required=True)
    p.add_argument("--bound", action="store_true", help="report only the bound")
    p.add_argument("--coeffs", action="store_true")
    p.add_argument("--restrict", type=int)
    p.set_defaults(func=cmd_stable)
    return parser


def run(argv) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return 2 if err.code not in (0, None) else 0
    try:
        result = args.func(args)
    except ConsistencyError as err:
        print(json.dumps({"status": "internal-inconsistency", "result": None,
                          "diagnostics": [str(err)]}, indent=2))
        return 1
    except json.JSONDecodeError as err:
        print(json.dumps({"status": "error", "result": None,
                          "diagnostics": [f"bad JSON: {err}"]}, indent=2))
        return 2
    except (ValidationError, ValueError) as err:
        print(json.dumps({"status": "error", "result": None,
                          "diagnostics": [str(err)]}, indent=2))
        return 2
    if isinstance(result, str):
        sys.stdout.write(result if result.endswith("\n") else result + "\n")
    else:
        print(json.dumps({"status": "ok", "result": result, "diagnostics": []},
                         indent=2, sort_keys=True))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
