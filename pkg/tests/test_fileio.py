"""Matrix and factorization documents: parsing, serialization, byte stability."""

from __future__ import annotations

import numpy as np
import pytest
from numpy.testing import assert_array_equal

from socaut import (
    CanonicalFactorization,
    CompactFactorization,
    boost_matrix,
    sample_automorphism,
    sample_haar_orthogonal,
)
from socaut.fileio import (
    FileFormatError,
    InvalidFactorizationError,
    dumps_factorization,
    dumps_matrix,
    format_float,
    parse_factorization,
    parse_matrix,
)


class TestFloatFormat:
    @pytest.mark.parametrize(
        "x", [0.0, 1.0, -1.0, 0.1, 1.0 / 3.0, np.pi, 1e-300, 1e300, 123456789.123456789]
    )
    def test_round_trips_exactly(self, x):
        assert float(format_float(x)) == x

    def test_negative_zero_keeps_sign(self):
        assert format_float(-0.0) == "-0"
        assert np.signbit(float(format_float(-0.0)))

    def test_integral_values_are_short(self):
        assert format_float(1.0) == "1"
        assert format_float(-2.0) == "-2"


class TestMatrixDocuments:
    def test_known_layout(self):
        doc = dumps_matrix(np.eye(2))
        assert doc == '{\n  "n": 2,\n  "data": [\n    [1, 0],\n    [0, 1]\n  ]\n}\n'

    def test_byte_stable(self):
        S = sample_automorphism(4, seed=13)
        doc = dumps_matrix(S)
        M = parse_matrix(doc)
        assert_array_equal(M, S)
        assert dumps_matrix(M) == doc

    def test_compact_layout_parses_identically(self):
        S = boost_matrix(1.0, 3)
        assert_array_equal(parse_matrix(dumps_matrix(S, compact=True)), S)

    def test_grid_fallback(self):
        assert_array_equal(parse_matrix("1 0\n0 1"), np.eye(2))
        assert_array_equal(parse_matrix("  1 2 3 4 5 6 7 8 9 "), np.arange(1.0, 10.0).reshape(3, 3))

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("", "empty"),
            ("1 2 3", "k*k"),
            ("5", "k*k"),
            ("1 0 0 x", "token 4"),
            ("1 0 0 nan", "not finite"),
            ('{"n": 2}', "missing"),
            ('{"n": 2, "data": [[1, 0], [0, 1]], "extra": 1}', "unexpected"),
            ('{"n": "2", "data": [[1, 0], [0, 1]]}', "integer"),
            ('{"n": 1, "data": [[1]]}', ">= 2"),
            ('{"n": 2, "data": [[1, 0]]}', "1 rows"),
            ('{"n": 2, "data": [[1, 0], [0]]}', "row 1 has 1 entries"),
            ('{"n": 2, "data": [[1, 0], [0, "a"]]}', "not a number"),
            ('{"n": 2, "data": [[1, 0], [0, true]]}', "not a number"),
            ('{"n": 2, "data": [[1, 0], [0, Infinity]]}', "Infinity"),
            ("[1, 2]", "root"),
            ('{"n": 2 "data"', "invalid document"),
        ],
    )
    def test_malformed_documents(self, text, fragment):
        with pytest.raises(FileFormatError, match=fragment):
            parse_matrix(text)

    def test_dumps_rejects_bad_matrices(self):
        with pytest.raises(ValueError):
            dumps_matrix(np.ones((2, 3)))
        with pytest.raises(ValueError):
            dumps_matrix(np.array([[1.0, np.inf], [0.0, 1.0]]))


class TestFactorizationDocuments:
    def test_canonical_round_trip(self):
        f = CanonicalFactorization(
            nu=2.5,
            alpha=1.25,
            V=sample_haar_orthogonal(3, seed=1),
            U=sample_haar_orthogonal(3, seed=2),
        )
        doc = dumps_factorization(f, tol=1e-9, reconstruction_residual=3e-16)
        g, tol = parse_factorization(doc)
        assert isinstance(g, CanonicalFactorization)
        assert (g.nu, g.alpha) == (f.nu, f.alpha)
        assert_array_equal(g.V, f.V)
        assert_array_equal(g.U, f.U)
        assert tol == 1e-9
        assert dumps_factorization(g, tol=1e-9, reconstruction_residual=3e-16) == doc

    def test_compact_round_trip(self):
        f = CompactFactorization(
            nu=0.75, c=np.array([1.0, -2.0]), U=sample_haar_orthogonal(2, seed=3)
        )
        doc = dumps_factorization(f)
        g, tol = parse_factorization(doc)
        assert isinstance(g, CompactFactorization)
        assert g.nu == f.nu
        assert_array_equal(g.c, f.c)
        assert_array_equal(g.U, f.U)
        assert tol == 1e-9  # default when the file declares none

    def test_declared_tol_governs_orthogonality(self):
        U = np.eye(2)
        U[0, 0] += 1e-6
        body = (
            '{"form": "compact", "nu": 1, "c": [0, 0], '
            '"U": [[%s, 0], [0, 1]]%s}'
        )
        loose = body % (format_float(U[0, 0]), ', "tol": 1e-3')
        f, tol = parse_factorization(loose)
        assert tol == 1e-3
        strict = body % (format_float(U[0, 0]), "")
        with pytest.raises(InvalidFactorizationError, match="orthogonal"):
            parse_factorization(strict)

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("", "form"),
            ('{"form": "sideways", "nu": 1}', "form"),
            ('{"form": "compact", "nu": 1, "U": [[1]]}', "missing"),
            ('{"form": "compact", "nu": 1, "c": [0], "U": [[1]], "alpha": 0}', "unexpected"),
            (
                '{"form": "canonical", "nu": 1, "alpha": 0, "c": [0], '
                '"V": [[1]], "U": [[1]]}',
                "unexpected",
            ),
            ('{"form": "compact", "nu": "x", "c": [0], "U": [[1]]}', "nu"),
            ('{"form": "compact", "nu": 1, "c": [0, 0], "U": [[1]]}', "length 2"),
            (
                '{"form": "canonical", "nu": 1, "alpha": 0, "V": [[1, 0], [0, 1]], '
                '"U": [[1]]}',
                "must match",
            ),
            ('{"form": "compact", "nu": 1, "c": [0], "U": [[1, 0]]}', "row 0 has 2"),
            ('{"form": "compact", "nu": 1, "c": [], "U": [[1]]}', "non-empty"),
            ('{"form": "compact", "nu": 1, "c": [0], "U": [[1]], "tol": -1}', "tol"),
        ],
    )
    def test_malformed_documents(self, text, fragment):
        with pytest.raises(FileFormatError, match=fragment):
            parse_factorization(text)

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ('{"form": "compact", "nu": 0, "c": [0], "U": [[1]]}', "nu"),
            ('{"form": "compact", "nu": -1, "c": [0], "U": [[1]]}', "nu"),
            (
                '{"form": "canonical", "nu": 1, "alpha": -0.5, "V": [[1]], "U": [[1]]}',
                "alpha",
            ),
            ('{"form": "compact", "nu": 1, "c": [0], "U": [[2]]}', "orthogonal"),
            (
                '{"form": "canonical", "nu": 1, "alpha": 1, "V": [[0.5]], "U": [[1]]}',
                "V is not orthogonal",
            ),
        ],
    )
    def test_invariant_violations(self, text, fragment):
        with pytest.raises(InvalidFactorizationError, match=fragment):
            parse_factorization(text)

    def test_dumps_rejects_other_types(self):
        with pytest.raises(TypeError):
            dumps_factorization(np.eye(2))
