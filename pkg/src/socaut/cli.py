"""Command-line front end: check, factor, compose, sample, verify.

Exit codes form a strict contract: 0 = success/accepted, 1 = mathematical
rejection (not an automorphism, or a factorization file whose payload breaks
an invariant), 2 = malformed input (unparsable documents, bad shapes, bad
argument ranges).  Reports go to standard output as one ``key value`` pair
per line; diagnostics go to standard error.  ``--output`` redirects the
payload (report, document, or sample directory); ``--quiet`` suppresses the
standard-output copy.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

import numpy as np

from ._validate import DEFAULT_TOL
from .automorphism import (
    CanonicalFactorization,
    NotAutomorphismError,
    check_automorphism,
    compose_canonical,
    compose_compact,
    factor_canonical,
    factor_compact,
    property_report,
    sample_automorphism,
)
from .fileio import (
    FileFormatError,
    InvalidFactorizationError,
    dumps_factorization,
    dumps_matrix,
    format_float,
    parse_factorization,
    parse_matrix,
)

EXIT_OK = 0
EXIT_REJECTED = 1
EXIT_MALFORMED = 2


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, output: str | None, quiet: bool) -> None:
    """Write payload text to --output (if given) and/or standard output."""
    if output is not None:
        Path(output).write_text(text)
    elif not quiet:
        sys.stdout.write(text)


def _bool_word(flag: bool) -> str:
    return "true" if flag else "false"


def _relative_residual(A, B) -> float:
    diff = float(np.linalg.norm(np.asarray(A) - np.asarray(B)))
    scale = max(1.0, float(np.linalg.norm(B)))
    return diff / scale


def _cmd_check(args: argparse.Namespace) -> int:
    S = parse_matrix(_read_input(args.input))
    result = check_automorphism(S, args.tol)
    lines = [
        f"is_automorphism {_bool_word(result.is_automorphism)}",
        f"mu {format_float(result.mu)}",
        f"residual_congruence {format_float(result.residual_congruence)}",
        f"cone_forward {_bool_word(result.cone_forward)}",
    ]
    _emit("\n".join(lines) + "\n", args.output, args.quiet)
    return EXIT_OK if result.is_automorphism else EXIT_REJECTED


def _cmd_factor(args: argparse.Namespace) -> int:
    S = parse_matrix(_read_input(args.input))
    if args.form == "canonical":
        f = factor_canonical(S, args.tol)
        reconstructed = compose_canonical(f, args.tol)
    else:
        f = factor_compact(S, args.tol)
        reconstructed = compose_compact(f, args.tol)
    residual = _relative_residual(reconstructed, S)
    doc = dumps_factorization(f, tol=args.tol, reconstruction_residual=residual)
    _emit(doc, args.output, args.quiet)
    return EXIT_OK


def _cmd_compose(args: argparse.Namespace) -> int:
    f, file_tol = parse_factorization(_read_input(args.input))
    if isinstance(f, CanonicalFactorization):
        S = compose_canonical(f, file_tol)
    else:
        S = compose_compact(f, file_tol)
    result = check_automorphism(S, args.tol)
    if not result.is_automorphism:
        print(
            "error: composed matrix fails the membership test "
            f"(mu={format_float(result.mu)}, "
            f"residual={format_float(result.residual_congruence)})",
            file=sys.stderr,
        )
        return EXIT_REJECTED
    _emit(dumps_matrix(S), args.output, args.quiet)
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise ValueError(f"COUNT must be >= 1, got {args.count}")
    matrices = [
        sample_automorphism(
            args.n,
            alpha_max=args.alpha_max,
            nu_range=(args.nu_min, args.nu_max),
            seed=args.seed + i,
        )
        for i in range(args.count)
    ]
    if args.output is not None:
        out_dir = Path(args.output)
        out_dir.mkdir(parents=True, exist_ok=True)
        for i, S in enumerate(matrices):
            (out_dir / f"automorphism_{i:04d}.json").write_text(dumps_matrix(S))
    elif not args.quiet:
        for S in matrices:
            sys.stdout.write(dumps_matrix(S, compact=True) + "\n")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    S = parse_matrix(_read_input(args.input))
    result = check_automorphism(S, args.tol)
    report = property_report(S, n_samples=args.samples, tol=args.tol, seed=args.seed)
    ok = (
        result.is_automorphism
        and report.max_identity_residual() <= args.tol
        and report.cone_violation_max <= args.tol
        and report.boundary_drift_max <= args.tol
    )
    lines = [
        f"mu {format_float(result.mu)}",
        f"residual_congruence {format_float(result.residual_congruence)}",
        f"residual_A1 {format_float(report.residual_A1)}",
        f"residual_A2 {format_float(report.residual_A2)}",
        f"residual_A3 {format_float(report.residual_A3)}",
        f"residual_B1 {format_float(report.residual_B1)}",
        f"residual_B2 {format_float(report.residual_B2)}",
        f"residual_B3 {format_float(report.residual_B3)}",
        f"cone_violation_max {format_float(report.cone_violation_max)}",
        f"boundary_drift_max {format_float(report.boundary_drift_max)}",
        f"all_within_tol {_bool_word(ok)}",
    ]
    _emit("\n".join(lines) + "\n", args.output, args.quiet)
    return EXIT_OK if ok else EXIT_REJECTED


def _add_common(parser: argparse.ArgumentParser, *, tol: bool = True) -> None:
    if tol:
        parser.add_argument(
            "--tol",
            type=float,
            default=DEFAULT_TOL,
            help=f"acceptance tolerance (default {DEFAULT_TOL:g})",
        )
    parser.add_argument(
        "--output",
        metavar="PATH",
        default=None,
        help="write the payload here instead of standard output",
    )
    parser.add_argument(
        "--quiet",
        action="store_true",
        help="suppress the standard-output copy of the payload",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="socaut",
        description=(
            "Test, factor, compose, sample, and verify automorphisms of the "
            "second-order (Lorentz) cone."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="membership test for a matrix document")
    p.add_argument("input", help="matrix document path, or - for standard input")
    _add_common(p)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("factor", help="factor an automorphism into a document")
    p.add_argument("input", help="matrix document path, or - for standard input")
    p.add_argument(
        "--form",
        choices=("canonical", "compact"),
        default="canonical",
        help="factorization form (default canonical)",
    )
    _add_common(p)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("compose", help="multiply a factorization document back out")
    p.add_argument("input", help="factorization document path, or - for standard input")
    _add_common(p)
    p.set_defaults(func=_cmd_compose)

    p = sub.add_parser("sample", help="draw seeded random automorphisms")
    p.add_argument("n", type=int, help="ambient dimension (>= 2)")
    p.add_argument("count", type=int, help="number of matrices to draw (>= 1)")
    p.add_argument("--alpha-max", type=float, default=10.0, help="boost range (default 10)")
    p.add_argument("--nu-min", type=float, default=1.0, help="scale lower bound (default 1)")
    p.add_argument("--nu-max", type=float, default=1.0, help="scale upper bound (default 1)")
    p.add_argument("--seed", type=int, default=0, help="base seed; file i uses seed+i")
    p.add_argument(
        "--output",
        metavar="DIR",
        default=None,
        help="write automorphism_<index>.json files here instead of one-per-line output",
    )
    p.add_argument(
        "--quiet", action="store_true", help="suppress the standard-output copy"
    )
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("verify", help="identity residuals and cone-image statistics")
    p.add_argument("input", help="matrix document path, or - for standard input")
    p.add_argument(
        "--samples",
        type=int,
        default=10000,
        help="cone points per class for the image statistics (default 10000)",
    )
    p.add_argument("--seed", type=int, default=0, help="sampling seed (default 0)")
    _add_common(p)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI; returns the exit code instead of raising SystemExit."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (NotAutomorphismError, InvalidFactorizationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_REJECTED
    except FileFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


def entrypoint() -> None:  # pragma: no cover - thin wrapper
    raise SystemExit(main())
