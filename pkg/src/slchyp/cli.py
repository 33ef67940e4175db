"""Command-line front end with deterministic JSON reports.

Commands:
    classify / slc   semi-log canonicity (plus the mld verdict)
    mld              minimal log discrepancy only
    fpure            Frobenius-splitting test for (A, (f))
    jet-profile      contact-locus table from the jet oracle
    bounds           witness bound report for the uniform-bound conjecture
    verify           replay a report produced by classify/slc/mld

Exit codes: 0 verdict, 2 input error, 3 needs an algebraic extension,
4 jet-oracle budget exceeded, 1 failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Optional

from .classifier import (
    Verdict,
    ZeroPolynomial,
    check_conjecture_bounds,
    classify_mld,
    classify_slc,
)
from .fields import (
    CoefficientError,
    FieldContext,
    NeedsAlgebraicExtension,
    RATIONALS,
    is_prime,
    prime_field,
)
from .frobenius import CharZero, fedder_is_fpure
from .jets import OracleOverflow, mld_profile
from .parse import PolySyntaxError, parse_poly
from .poly import NonLocalSubstitution, TriPoly, tripoly_from_json
from .toricdiv import discrepancy, witness_search
from .normalize.auto import automorphism_from_json

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT = 2
EXIT_EXTENSION = 3
EXIT_OVERFLOW = 4

GRAMMAR = (
    'expr := term (("+"|"-") term)*; term := factor ("*" factor)*; '
    'factor := integer | integer "/" integer | var | var "^" uint | "(" expr ")"; '
    "var in {x, y, z}; whitespace insignificant; no implicit multiplication"
)


def _field_json(ctx: FieldContext):
    return {
        "characteristic": ctx.characteristic,
        "extension_degree": ctx.extension_degree,
        "modulus": _modulus_str(ctx),
    }


def _modulus_str(ctx: FieldContext) -> Optional[str]:
    if ctx.modulus is None:
        return None
    parts = []
    for i, c in enumerate(ctx.modulus):
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append("t" if c == 1 else f"{c}*t")
        else:
            parts.append(f"t^{i}" if c == 1 else f"{c}*t^{i}")
    return "+".join(reversed(parts))


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        sys.stdout.write(json.dumps(report, indent=2) + "\n")
    else:
        sys.stdout.write(json.dumps(report, separators=(",", ":")) + "\n")


def _context_for(char: int) -> FieldContext:
    if char == 0:
        return RATIONALS
    if not is_prime(char):
        raise CoefficientError(f"characteristic {char} is not prime")
    return prime_field(char)


def _base_report(args, command: str, ctx: FieldContext) -> dict:
    return {
        "input": args.poly,
        "field": _field_json(ctx),
        "command": command,
        "verdict": None,
        "timing_ms": 0,
    }


def _verdict_payload(verdict: Verdict) -> dict:
    data = verdict.to_json()
    data["final_field"] = _field_json(verdict.context)
    data["bounds"] = check_conjecture_bounds(verdict).to_json()
    return data


def run(argv) -> int:
    parser = argparse.ArgumentParser(
        prog="slchyp",
        description="exact semi-log canonicity and minimal log discrepancy "
        "classifier for surface germs f in k[[x,y,z]]",
        epilog=f"polynomial grammar: {GRAMMAR}",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, need_poly=True):
        p.add_argument("--char", type=int, required=True,
                       help="field characteristic: a prime, or 0 for Q")
        if need_poly:
            p.add_argument("--poly", type=str, required=True,
                           help="polynomial in the documented grammar")
        p.add_argument("--max-weight", type=int, default=8,
                       help="bound for auxiliary witness searches (default 8)")
        p.add_argument("--strict-q", action="store_true",
                       help="forbid algebraic extensions over Q (documents the "
                            "only supported Q behaviour; always in effect)")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="pretty", action="store_false",
                         default=False, help="canonical single-line JSON (default)")
        fmt.add_argument("--pretty", dest="pretty", action="store_true",
                         help="indented JSON with measured timing")

    for name in ("classify", "slc", "mld", "fpure", "bounds"):
        add_common(sub.add_parser(name))
    jp = sub.add_parser("jet-profile")
    add_common(jp)
    jp.add_argument("--m", type=int, default=3, help="maximum jet level")
    jp.add_argument("--expected-mld", type=int, default=None)
    vf = sub.add_parser("verify")
    vf.add_argument("report", nargs="?", default="-",
                    help="path to a report JSON, or - for stdin")

    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code not in (0, None) else 0

    if args.command == "verify":
        return _cmd_verify(args)

    started = time.monotonic()
    try:
        ctx = _context_for(args.char)
        f = parse_poly(args.poly, ctx)
        report = _base_report(args, args.command, ctx)
        if args.command in ("classify", "slc"):
            verdict = classify_slc(f, args.char)
            report["verdict"] = _verdict_payload(verdict)
        elif args.command == "mld":
            verdict = classify_mld(f, args.char)
            report["verdict"] = _verdict_payload(verdict)
        elif args.command == "fpure":
            cert = fedder_is_fpure(f)
            report["verdict"] = cert.to_json()
        elif args.command == "jet-profile":
            summary = mld_profile(f, args.m, expected_mld=args.expected_mld)
            payload = summary.to_json()
            payload["entries"] = payload.pop("contact")
            report["verdict"] = payload
        elif args.command == "bounds":
            verdict = classify_mld(f, args.char)
            payload = check_conjecture_bounds(verdict).to_json()
            payload["mld"] = verdict.mld.to_json()
            search = witness_search(
                verdict.transformed, args.max_weight, require_origin_center=True
            )
            payload["independent_witness_search"] = (
                search.to_json() if search else None
            )
            report["verdict"] = payload
    except (PolySyntaxError, CoefficientError, ZeroPolynomial,
            NonLocalSubstitution, ValueError) as exc:
        _emit({"error": str(exc), "grammar": GRAMMAR}, False)
        return EXIT_INPUT
    except CharZero as exc:
        _emit({"error": str(exc)}, False)
        return EXIT_INPUT
    except NeedsAlgebraicExtension as exc:
        payload = {"error": str(exc), "kind": "needs_algebraic_extension"}
        if exc.polynomial is not None:
            payload["polynomial"] = str(exc.polynomial)
        _emit(payload, False)
        return EXIT_EXTENSION
    except OracleOverflow as exc:
        _emit({"error": str(exc), "kind": "oracle_overflow"}, False)
        return EXIT_OVERFLOW

    if args.pretty:
        report["timing_ms"] = int((time.monotonic() - started) * 1000)
    _emit(report, args.pretty)
    return EXIT_OK


def _cmd_verify(args) -> int:
    """Replay automorphism, initial form and discrepancy from a report."""
    if args.report == "-":
        text = sys.stdin.read()
    else:
        with open(args.report, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        report = json.loads(text)
        verdict = report["verdict"]
        char = report["field"]["characteristic"]
        base_ctx = _context_for(char)
        f = parse_poly(report["input"], base_ctx)
        final = verdict["final_field"]
        if final["characteristic"] != char:
            raise ValueError("field characteristic changed in report")
        final_ctx = _reconstruct_context(final)
        f_final = _lift(f, base_ctx, final_ctx)
        auto = automorphism_from_json(verdict["automorphism"], final_ctx)
        transformed = auto.apply(f_final)
        weight = tuple(verdict["initial_weight"])
        initial = transformed.in_w(weight)
        recorded = tripoly_from_json(final_ctx, verdict["initial_form_terms"])
        if initial != recorded:
            raise ValueError("initial form does not replay")
        wit = verdict.get("witness")
        if wit is not None:
            rep = discrepancy(initial, tuple(wit["weight"]))
            if rep.ord != wit["ord"] or rep.a != wit["a"]:
                raise ValueError("witness discrepancy does not replay")
            if rep.divisor.k_e != wit["k_E"]:
                raise ValueError("witness k_E does not replay")
        mld = verdict["mld"]
        if mld == "-inf" and (wit is None or wit["a"] >= 0):
            raise ValueError("negative verdict lacks a negative witness")
    except (KeyError, ValueError, PolySyntaxError, CoefficientError) as exc:
        _emit({"verified": False, "error": str(exc)}, False)
        return EXIT_VERIFY_FAILED
    _emit({"verified": True}, False)
    return EXIT_OK


def _reconstruct_context(data) -> FieldContext:
    char = data["characteristic"]
    deg = data["extension_degree"]
    if char == 0:
        return RATIONALS
    if deg == 1:
        return prime_field(char)
    from .fields import extension_field

    ctx = extension_field(char, deg)
    if _modulus_str(ctx) != data["modulus"]:
        raise ValueError("report modulus is not the canonical one")
    return ctx


def _lift(f: TriPoly, base: FieldContext, final: FieldContext) -> TriPoly:
    if base == final:
        return f
    if base.is_rational:
        raise ValueError("rational fields never extend")
    # inputs are parsed over the prime field, so lifting is coefficientwise
    if base.extension_degree != 1:
        raise ValueError("unexpected non-prime base field")
    return f.map_coefficients(
        lambda c: final.from_int(c.payload[0]), final
    )


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
