"""Command line interface.

Subcommands operate on Seifert symbols given as inline JSON or @file, or on
triangulation files.  Output is JSON (default) or CSV on stdout; errors go
to stderr with exit codes 2 (usage), 3 (malformed input), 4 (domain
precondition), 5 (numeric inconsistency).

With the default --deterministic flag the output is a pure function of the
inputs (no timing field), byte-identical across runs; --no-deterministic
adds a timing_ms field.  --threads is accepted and recorded for
compatibility; evaluation is vectorized in a single thread.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from .congruence import certificate_to_dict, classify_system, dedekind_sum, system_modulus
from .errors import MalformedInputError, SeifertQError
from .growth import lower_bound, ltv_scan, verify_lemma
from .rootdata import RootContext, six_j
from .rt import rt_closed
from .statesum import tv_statesum
from .symbols import (
    SeifertSymbol,
    _require_multiplicities,
    double,
    euler_number,
    normalize,
    orbifold_euler_characteristic,
    symbol_from_json,
    symbol_to_dict,
)
from .triangulation import load_triangulation
from .tv import tv_bounded, tv_closed

SCHEMA_VERSION = 1


def _load_symbol(source: str) -> SeifertSymbol:
    if source.startswith("@"):
        try:
            text = open(source[1:], "r", encoding="utf-8").read()
        except OSError as exc:
            raise MalformedInputError(f"cannot read symbol file {source[1:]!r}: {exc}") from exc
    else:
        text = source
    return symbol_from_json(text)


def _complex_dict(value: complex) -> dict:
    return {"re": value.real, "im": value.imag}


def _parse_levels(text: str) -> list[int]:
    try:
        levels = [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise MalformedInputError(f"bad level list {text!r}: {exc}") from exc
    if not levels:
        raise MalformedInputError(f"bad level list {text!r}: no levels")
    return levels


# -- subcommand handlers ------------------------------------------------------


def _cmd_rt(args: argparse.Namespace) -> dict:
    symbol = _load_symbol(args.symbol)
    inv = rt_closed(symbol, args.r)
    return {
        "symbol": symbol_to_dict(symbol),
        "r": args.r,
        "value": _complex_dict(complex(inv.value)),
        "method": inv.method,
        "term_count": inv.term_count,
        "term_magnitude_sum": inv.term_magnitude_sum,
        "warnings": list(inv.warnings),
    }


def _cmd_tv(args: argparse.Namespace) -> dict:
    if (args.symbol is None) == (args.tri is None):
        raise MalformedInputError("tv needs exactly one of --symbol or --tri")
    if args.tri is not None:
        tri = load_triangulation(args.tri)
        inv = tv_statesum(tri, args.r)
        return {
            "triangulation": args.tri,
            "r": args.r,
            "value": float(inv.value.real),
            "method": inv.method,
            "term_count": inv.term_count,
            "term_magnitude_sum": inv.term_magnitude_sum,
            "tetrahedra": tri.tet_count,
            "vertices": tri.vertex_count,
            "edges": tri.edge_count,
            "faces": tri.face_count,
            "euler_characteristic": tri.euler_characteristic,
            "warnings": list(inv.warnings),
        }
    symbol = _load_symbol(args.symbol)
    inv = tv_bounded(symbol, args.r) if symbol.has_boundary else tv_closed(symbol, args.r)
    return {
        "symbol": symbol_to_dict(symbol),
        "r": args.r,
        "value": float(inv.value.real),
        "method": inv.method,
        "term_count": inv.term_count,
        "term_magnitude_sum": inv.term_magnitude_sum,
        "warnings": list(inv.warnings),
    }


def _cmd_double(args: argparse.Namespace) -> dict:
    symbol = _load_symbol(args.symbol)
    doubled = double(symbol)
    return {
        "symbol": symbol_to_dict(symbol),
        "double": symbol_to_dict(doubled),
        "euler_number": str(euler_number(doubled)),
        "orbifold_euler_characteristic": str(orbifold_euler_characteristic(doubled)),
    }


def _cmd_normalize(args: argparse.Namespace) -> dict:
    symbol = _load_symbol(args.symbol)
    normalized = normalize(symbol)
    return {
        "symbol": symbol_to_dict(symbol),
        "normalized": symbol_to_dict(normalized),
        "euler_number": str(euler_number(normalized)),
        "orbifold_euler_characteristic": str(orbifold_euler_characteristic(normalized)),
    }


def _cmd_certify(args: argparse.Namespace) -> dict:
    symbol = _load_symbol(args.symbol)
    _require_multiplicities(symbol)
    classification = classify_system(symbol.fibers)
    certificate = classification.certificate
    return {
        "symbol": symbol_to_dict(symbol),
        "case": classification.case,
        "certificate": certificate_to_dict(certificate) if certificate else None,
        "warnings": list(classification.warnings),
    }


def _cmd_dedekind(args: argparse.Namespace) -> dict:
    value = dedekind_sum(args.b, args.a)
    return {"b": args.b, "a": args.a, "exact": str(value), "float": float(value)}


def _cmd_sixj(args: argparse.Namespace) -> dict:
    ctx = RootContext(args.r)
    value = six_j(ctx, *args.colors)
    return {"r": args.r, "colors": list(args.colors), "value": _complex_dict(value)}


def _resolve_levels(args: argparse.Namespace, symbol: SeifertSymbol) -> list[int]:
    if (args.r is None) == (args.k is None):
        raise MalformedInputError("give exactly one of --r or --k")
    if args.r is not None:
        return _parse_levels(args.r)
    modulus = system_modulus(symbol.fibers)
    return [k * modulus for k in _parse_levels(args.k)]


def _cmd_scan(args: argparse.Namespace) -> dict:
    symbol = _load_symbol(args.symbol)
    levels = _resolve_levels(args, symbol)
    samples, slope = ltv_scan(symbol, levels)
    return {
        "symbol": symbol_to_dict(symbol),
        "samples": [{"r": s.r, "tv": s.tv_value, "ltv": s.ltv} for s in samples],
        "growth_exponent": slope,
    }


def _cmd_bound(args: argparse.Namespace) -> dict:
    symbol = _load_symbol(args.symbol)
    levels = _resolve_levels(args, symbol)
    if len(levels) != 1:
        raise MalformedInputError("bound takes a single level")
    (r,) = levels
    bound = lower_bound(symbol, r)
    payload = {
        "symbol": symbol_to_dict(symbol),
        "r": bound.r,
        "value": bound.value,
        "modulus": bound.modulus,
        "multiplier": bound.multiplier,
        "cardinality": bound.cardinality,
        "warnings": list(bound.warnings),
    }
    if args.verify:
        check = verify_lemma(symbol, r)
        payload["verify"] = {
            "tv_bounded": check.tv_bounded_value,
            "tv_closed_double": check.tv_closed_double_value,
            "satisfied": check.satisfied,
        }
    return payload


# -- output formatting --------------------------------------------------------


def _flatten(payload: dict) -> list[tuple[str, str]]:
    rows = []
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            rows.append((key, json.dumps(value)))
        else:
            rows.append((key, "" if value is None else str(value)))
    return rows


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
        return
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    samples = payload.get("samples")
    if isinstance(samples, list) and samples and isinstance(samples[0], dict):
        header = list(samples[0])
        writer.writerow(header)
        for sample in samples:
            writer.writerow([sample[h] for h in header])
    else:
        writer.writerow(["key", "value"])
        for key, value in _flatten(payload):
            writer.writerow([key, value])
    sys.stdout.write(buffer.getvalue())


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seifertq",
        description="Quantum invariants of Seifert fibered 3-manifolds",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--threads", type=int, default=1, help="recorded; evaluation is single-threaded")
    common.add_argument(
        "--deterministic",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="omit timing so identical inputs give identical bytes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rt", parents=[common], help="RT invariant of a closed symbol")
    p.add_argument("--symbol", required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_rt)

    p = sub.add_parser("tv", parents=[common], help="TV invariant of a symbol or triangulation")
    p.add_argument("--symbol")
    p.add_argument("--tri", help="triangulation file (state sum)")
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_tv)

    p = sub.add_parser("double", parents=[common], help="orientation double of a bounded symbol")
    p.add_argument("--symbol", required=True)
    p.set_defaults(func=_cmd_double)

    p = sub.add_parser("normalize", parents=[common], help="normal form of a symbol")
    p.add_argument("--symbol", required=True)
    p.set_defaults(func=_cmd_normalize)

    p = sub.add_parser("certify", parents=[common], help="congruence system classification")
    p.add_argument("--symbol", required=True)
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("dedekind", parents=[common], help="exact Dedekind sum s(b, a)")
    p.add_argument("b", type=int)
    p.add_argument("a", type=int)
    p.set_defaults(func=_cmd_dedekind)

    p = sub.add_parser("sixj", parents=[common], help="six-j symbol at level r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("colors", type=int, nargs=6)
    p.set_defaults(func=_cmd_sixj)

    p = sub.add_parser("scan", parents=[common], help="LTV samples along a level sequence")
    p.add_argument("--symbol", required=True)
    p.add_argument("--r", help="comma-separated levels")
    p.add_argument("--k", help="comma-separated multiples of the system modulus")
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("bound", parents=[common], help="growth lower bound at a level")
    p.add_argument("--symbol", required=True)
    p.add_argument("--r", help="level (odd multiple of the modulus)")
    p.add_argument("--k", help="multiple of the system modulus")
    p.add_argument("--verify", action="store_true", help="also compute the invariants")
    p.set_defaults(func=_cmd_bound)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        payload = args.func(args)
    except SeifertQError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    result = {"schema": SCHEMA_VERSION, "command": args.command}
    result.update(payload)
    result["threads"] = args.threads
    if not args.deterministic:
        result["timing_ms"] = round(1000.0 * (time.perf_counter() - started), 3)
    _emit(result, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())
