"""Command-line interface: JSON answers about Schubert variety singularities.

Permutations are written in one-line notation, either comma-separated
(``4,2,3,1``) or as a digit string when every value is below ten (``4231``).
All output is JSON with sorted keys, so repeated runs with the same
arguments produce byte-identical bytes.  Exit codes: 0 on success, 1 when a
verification reports failures, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .components import classify_component, enumerate_components
from .kl import kl_closed_form, kl_recursion
from .patterns import find_patterns
from .perms import format_permutation, length, parse_permutation
from .slices import (
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    build_slice,
    equation_strings,
    slice_report,
)
from .sweep import verify_all, verify_permutation
from .tangent import singular_components, tangent_dimension

__all__ = ["main"]

_VERIFY_MAX_N = 8


def _print(data: object, pretty: bool = True) -> None:
    if pretty:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print(json.dumps(data, sort_keys=True, separators=(",", ":")))


def _poly_str(coefficients: list[int]) -> str:
    terms = []
    for power, coeff in enumerate(coefficients):
        if coeff == 0:
            continue
        if power == 0:
            terms.append(str(coeff))
        else:
            q = "q" if power == 1 else f"q^{power}"
            terms.append(q if coeff == 1 else f"{coeff}*{q}")
    return " + ".join(terms) if terms else "0"


def cmd_smooth(args: argparse.Namespace) -> int:
    w = parse_permutation(args.w)
    occurrences = find_patterns(w)
    _print(
        {
            "w": format_permutation(w),
            "smooth": not occurrences,
            "witnesses": [
                {"kind": occ.kind, "positions": list(occ.positions)}
                for occ in occurrences
            ],
        }
    )
    return 0


def cmd_tangent(args: argparse.Namespace) -> int:
    v = parse_permutation(args.v)
    w = parse_permutation(args.w)
    report = tangent_dimension(v, w)
    _print(
        {
            "v": format_permutation(v),
            "w": format_permutation(w),
            "m": report.dim,
            "length": length(w),
            "excess": report.excess,
        }
    )
    return 0


def cmd_singular_locus(args: argparse.Namespace) -> int:
    w = parse_permutation(args.w)
    entries = []
    for c in enumerate_components(w):
        model = build_slice(c, w)
        entries.append(
            {
                "v": format_permutation(c.v),
                "type": c.ctype,
                "l": c.l,
                "m": c.m,
                "codim": c.codim,
                "excess": c.excess,
                "kl": list(kl_recursion(c.v, w)),
                "slice": {
                    "free": [list(cell) for cell in model.free],
                    "equations": equation_strings(model)["closed"],
                },
            }
        )
    _print(entries)
    return 0


def cmd_kl(args: argparse.Namespace) -> int:
    v = parse_permutation(args.v)
    w = parse_permutation(args.w)
    recursion = kl_recursion(v, w)
    closed: tuple[int, ...] | None = None
    if v != w and v in singular_components(w):
        closed = kl_closed_form(classify_component(v, w))
    _print(
        {
            "v": format_permutation(v),
            "w": format_permutation(w),
            "closed_form": None if closed is None else list(closed),
            "recursion": list(recursion),
            "agree": closed is None or closed == recursion,
            "polynomial": _poly_str(list(recursion)),
        }
    )
    return 0


def cmd_slice(args: argparse.Namespace) -> int:
    v = parse_permutation(args.v)
    w = parse_permutation(args.w)
    report = slice_report(v, w, trials=args.trials, seed=args.seed)
    report["v"] = format_permutation(v)
    report["w"] = format_permutation(w)
    _print(report)
    verdict = report["verdict"]
    if verdict is not None and not all(
        verdict[key]
        for key in (
            "tangent_ok",
            "dim_ok",
            "containment_ok",
            "exclusion_ok",
            "equivalence_ok",
        )
    ):
        return 1
    return 0


def cmd_report(args: argparse.Namespace) -> int:
    w = parse_permutation(args.w)
    record = verify_permutation(w, trials=args.trials, seed=args.seed)
    _print(record)
    return 0 if record["ok"] else 1


def cmd_verify_all(args: argparse.Namespace) -> int:
    if not 2 <= args.n <= _VERIFY_MAX_N:
        print(
            f"error: --n must be between 2 and {_VERIFY_MAX_N}", file=sys.stderr
        )
        return 2
    progress = args.progress or args.n >= 7
    report = verify_all(
        args.n,
        trials=args.trials,
        seed=args.seed,
        jobs=args.jobs,
        progress=progress,
    )
    _print(report, pretty=args.pretty)
    return 0 if report["ok"] else 1


def _add_trials_seed(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--trials",
        type=int,
        default=DEFAULT_TRIALS,
        help=f"number of sample points per slice check (default {DEFAULT_TRIALS})",
    )
    sub.add_argument(
        "--seed",
        type=int,
        default=DEFAULT_SEED,
        help=f"base seed for deterministic sampling (default {DEFAULT_SEED})",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubsing",
        description="Singularities of Schubert varieties in type A flag varieties.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("smooth", help="pattern-based smoothness test")
    p.add_argument("w", help="permutation, e.g. 4231 or 4,2,3,1")
    p.set_defaults(func=cmd_smooth)

    p = subs.add_parser("tangent", help="tangent space dimension at a point")
    p.add_argument("v", help="Bruhat-smaller permutation (the point)")
    p.add_argument("w", help="permutation defining the variety")
    p.set_defaults(func=cmd_tangent)

    p = subs.add_parser(
        "singular-locus", help="singular points and maximal components"
    )
    p.add_argument("w", help="permutation defining the variety")
    p.set_defaults(func=cmd_singular_locus)

    p = subs.add_parser("kl", help="Kazhdan-Lusztig polynomial by recursion")
    p.add_argument("v", help="Bruhat-smaller permutation")
    p.add_argument("w", help="Bruhat-larger permutation")
    p.set_defaults(func=cmd_kl)

    p = subs.add_parser("slice", help="slice equations and verification")
    p.add_argument("v", help="point of the variety, in particular v <= w")
    p.add_argument("w", help="permutation defining the variety")
    _add_trials_seed(p)
    p.set_defaults(func=cmd_slice)

    p = subs.add_parser("report", help="all cross-checks for one permutation")
    p.add_argument("w", help="permutation defining the variety")
    _add_trials_seed(p)
    p.set_defaults(func=cmd_report)

    p = subs.add_parser(
        "verify-all", help="cross-check every permutation of S_n"
    )
    p.add_argument(
        "--n", type=int, default=6, help="symmetric group size (default 6)"
    )
    _add_trials_seed(p)
    p.add_argument(
        "--jobs", type=int, default=1, help="worker processes (default 1)"
    )
    p.add_argument(
        "--pretty", action="store_true", help="indent the JSON report"
    )
    p.add_argument(
        "--progress",
        action="store_true",
        help="print progress to stderr (always on for n >= 7)",
    )
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
