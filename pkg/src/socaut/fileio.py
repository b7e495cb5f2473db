"""Reading and writing the matrix and factorization documents used by the CLI.

Matrix document: JSON text with fields ``n`` (integer) and ``data`` (n rows
of n numbers).  Every number is serialized with 17 significant decimal
digits, which round-trips doubles exactly, so parse -> emit is byte-stable.
A bare whitespace-separated k x k numeric grid (k inferred) is also accepted
on input.

Factorization document: JSON text with ``form`` ("canonical" or "compact"),
``nu``, the form's own fields (``alpha``/``V`` or ``c``), ``U``, and two
optional bookkeeping fields: ``tol`` (the tolerance the factors were
validated at; also applied when loading) and ``reconstruction_residual``.

Structural problems (bad syntax, missing or mismatched fields, non-numbers,
wrong shapes) raise FileFormatError.  Well-formed documents whose payload
breaks a mathematical invariant (``nu <= 0``, ``alpha < 0``, orthogonality
residual beyond the declared tolerance) raise InvalidFactorizationError —
the CLI maps the former to exit 2 and the latter to exit 1.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from ._validate import DEFAULT_TOL
from .automorphism import CanonicalFactorization, CompactFactorization
from .kernels import orthogonality_residual

__all__ = [
    "FileFormatError",
    "InvalidFactorizationError",
    "format_float",
    "dumps_matrix",
    "parse_matrix",
    "load_matrix",
    "dumps_factorization",
    "parse_factorization",
    "load_factorization",
]


class FileFormatError(ValueError):
    """Structurally malformed matrix or factorization document."""


class InvalidFactorizationError(ValueError):
    """Well-formed factorization document violating a mathematical invariant."""


def format_float(x: float) -> str:
    """Serialize a double with 17 significant digits (exact round-trip)."""
    return format(float(x), ".17g")


def _reject_constant(token: str):
    raise FileFormatError(f"non-finite constant {token!r} is not allowed")


def _require_number(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FileFormatError(f"{where} is not a number")
    out = float(value)
    if not math.isfinite(out):
        raise FileFormatError(f"{where} is not finite")
    return out


def _loads(text: str) -> dict:
    try:
        obj = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"invalid document: {exc}") from None
    if not isinstance(obj, dict):
        raise FileFormatError(
            f"document root must be an object, got {type(obj).__name__}"
        )
    return obj


def _check_keys(obj: dict, required: set[str], optional: set[str], what: str) -> None:
    keys = set(obj)
    missing = sorted(required - keys)
    if missing:
        raise FileFormatError(f"{what} is missing field(s): {', '.join(missing)}")
    unknown = sorted(keys - required - optional)
    if unknown:
        raise FileFormatError(f"{what} has unexpected field(s): {', '.join(unknown)}")


def _parse_vector(value, name: str) -> np.ndarray:
    if not isinstance(value, list) or not value:
        raise FileFormatError(f"field {name!r} must be a non-empty array of numbers")
    return np.array(
        [_require_number(v, f"{name}[{i}]") for i, v in enumerate(value)]
    )


def _parse_square(value, name: str) -> np.ndarray:
    if not isinstance(value, list) or not value:
        raise FileFormatError(f"field {name!r} must be a non-empty array of rows")
    m = len(value)
    out = np.empty((m, m))
    for i, row in enumerate(value):
        if not isinstance(row, list):
            raise FileFormatError(f"{name} row {i} is not an array")
        if len(row) != m:
            raise FileFormatError(
                f"{name} row {i} has {len(row)} entries, expected {m} (square matrix)"
            )
        for k, v in enumerate(row):
            out[i, k] = _require_number(v, f"{name}[{i}][{k}]")
    return out


# -- matrix documents --------------------------------------------------------


def dumps_matrix(M, compact: bool = False) -> str:
    """Serialize a square matrix as a matrix document.

    ``compact=True`` emits a single line (used for streaming one matrix per
    line); the default is an indented, row-per-line layout.  Both parse back
    identically.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"matrix must be square, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    n = M.shape[0]
    rows = [
        "[" + ", ".join(format_float(v) for v in M[i]) + "]" for i in range(n)
    ]
    if compact:
        return '{"n": %d, "data": [%s]}' % (n, ", ".join(rows))
    body = ",\n    ".join(rows)
    return '{\n  "n": %d,\n  "data": [\n    %s\n  ]\n}\n' % (n, body)


def parse_matrix(text: str) -> np.ndarray:
    """Parse a matrix document or a bare numeric grid into an ndarray.

    Raises FileFormatError with a diagnostic naming the offending row,
    column, or token.
    """
    stripped = text.strip()
    if not stripped:
        raise FileFormatError("empty input")
    if stripped.startswith(("{", "[")):
        return _parse_matrix_json(stripped)
    return _parse_matrix_grid(stripped)


def _parse_matrix_json(text: str) -> np.ndarray:
    obj = _loads(text)
    _check_keys(obj, {"n", "data"}, set(), "matrix document")
    n = obj["n"]
    if isinstance(n, bool) or not isinstance(n, int):
        raise FileFormatError("field 'n' must be an integer")
    if n < 2:
        raise FileFormatError(f"matrix size n must be >= 2, got {n}")
    data = obj["data"]
    if not isinstance(data, list):
        raise FileFormatError("field 'data' must be an array of rows")
    if len(data) != n:
        raise FileFormatError(f"data has {len(data)} rows, expected n = {n}")
    M = np.empty((n, n))
    for i, row in enumerate(data):
        if not isinstance(row, list):
            raise FileFormatError(f"data row {i} is not an array")
        if len(row) != n:
            raise FileFormatError(
                f"data row {i} has {len(row)} entries, expected n = {n}"
            )
        for k, v in enumerate(row):
            M[i, k] = _require_number(v, f"data[{i}][{k}]")
    return M


def _parse_matrix_grid(text: str) -> np.ndarray:
    tokens = text.split()
    values = np.empty(len(tokens))
    for idx, token in enumerate(tokens):
        try:
            values[idx] = float(token)
        except ValueError:
            raise FileFormatError(
                f"grid token {idx + 1} ({token!r}) is not a number"
            ) from None
    if not np.all(np.isfinite(values)):
        bad = int(np.flatnonzero(~np.isfinite(values))[0])
        raise FileFormatError(f"grid token {bad + 1} is not finite")
    k = math.isqrt(len(tokens))
    if k * k != len(tokens) or k < 2:
        raise FileFormatError(
            f"grid must contain k*k numbers for some k >= 2, got {len(tokens)}"
        )
    return values.reshape(k, k)


def load_matrix(path) -> np.ndarray:
    """Read and parse a matrix document from ``path``."""
    return parse_matrix(Path(path).read_text())


# -- factorization documents -------------------------------------------------


def dumps_factorization(
    f,
    tol: float | None = None,
    reconstruction_residual: float | None = None,
) -> str:
    """Serialize a CompactFactorization or CanonicalFactorization.

    ``tol`` records the tolerance the orthogonal factors were validated at
    (and governs re-validation on load); ``reconstruction_residual`` records
    the achieved factor-then-compose residual.  Both are omitted when None.
    """
    lines = []
    if isinstance(f, CanonicalFactorization):
        lines.append('  "form": "canonical"')
        lines.append(f'  "nu": {format_float(f.nu)}')
        lines.append(f'  "alpha": {format_float(f.alpha)}')
        lines.append('  "V": [\n%s\n  ]' % _matrix_rows(f.V))
    elif isinstance(f, CompactFactorization):
        lines.append('  "form": "compact"')
        lines.append(f'  "nu": {format_float(f.nu)}')
        lines.append(
            '  "c": [%s]' % ", ".join(format_float(v) for v in f.c)
        )
    else:
        raise TypeError(f"cannot serialize {type(f).__name__} as a factorization")
    lines.append('  "U": [\n%s\n  ]' % _matrix_rows(f.U))
    if tol is not None:
        lines.append(f'  "tol": {format_float(tol)}')
    if reconstruction_residual is not None:
        lines.append(
            f'  "reconstruction_residual": {format_float(reconstruction_residual)}'
        )
    return "{\n" + ",\n".join(lines) + "\n}\n"


def _matrix_rows(M: np.ndarray) -> str:
    return ",\n".join(
        "    [" + ", ".join(format_float(v) for v in row) + "]" for row in M
    )


def parse_factorization(text: str):
    """Parse a factorization document.

    Returns ``(factorization, tol)`` where ``tol`` is the file-declared
    tolerance (DEFAULT_TOL when absent).  Structural problems raise
    FileFormatError; mathematical invariant violations (nu <= 0, alpha < 0,
    non-orthogonal factors beyond ``tol * m``) raise
    InvalidFactorizationError.
    """
    obj = _loads(text.strip() or "{}")
    form = obj.get("form")
    if form not in ("canonical", "compact"):
        raise FileFormatError(
            f"field 'form' must be \"canonical\" or \"compact\", got {form!r}"
        )
    optional = {"tol", "reconstruction_residual"}
    if form == "canonical":
        _check_keys(
            obj, {"form", "nu", "alpha", "V", "U"}, optional, "canonical document"
        )
    else:
        _check_keys(obj, {"form", "nu", "c", "U"}, optional, "compact document")

    nu = _require_number(obj["nu"], "field 'nu'")
    tol = (
        _require_number(obj["tol"], "field 'tol'") if "tol" in obj else DEFAULT_TOL
    )
    if tol < 0.0:
        raise FileFormatError("field 'tol' must be >= 0")
    if "reconstruction_residual" in obj:
        _require_number(obj["reconstruction_residual"], "field 'reconstruction_residual'")
    U = _parse_square(obj["U"], "U")
    m = U.shape[0]

    if form == "canonical":
        alpha = _require_number(obj["alpha"], "field 'alpha'")
        V = _parse_square(obj["V"], "V")
        if V.shape != U.shape:
            raise FileFormatError(
                f"V is {V.shape[0]}x{V.shape[1]} but U is {m}x{m}; sizes must match"
            )
        if nu <= 0.0:
            raise InvalidFactorizationError(f"nu must be > 0, got {format_float(nu)}")
        if alpha < 0.0:
            raise InvalidFactorizationError(
                f"alpha must be >= 0, got {format_float(alpha)}"
            )
        for name, M in (("V", V), ("U", U)):
            res = orthogonality_residual(M)
            if res > tol * m:
                raise InvalidFactorizationError(
                    f"{name} is not orthogonal within the declared tolerance: "
                    f"residual {res:.3e} > {tol * m:.3e}"
                )
        return CanonicalFactorization(nu=nu, alpha=alpha, V=V, U=U), tol

    c = _parse_vector(obj["c"], "c")
    if c.size != m:
        raise FileFormatError(f"c has length {c.size} but U is {m}x{m}")
    if nu <= 0.0:
        raise InvalidFactorizationError(f"nu must be > 0, got {format_float(nu)}")
    res = orthogonality_residual(U)
    if res > tol * m:
        raise InvalidFactorizationError(
            f"U is not orthogonal within the declared tolerance: "
            f"residual {res:.3e} > {tol * m:.3e}"
        )
    return CompactFactorization(nu=nu, c=c, U=U), tol


def load_factorization(path):
    """Read and parse a factorization document from ``path``."""
    return parse_factorization(Path(path).read_text())
