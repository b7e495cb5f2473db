"""Shared helpers for the test suite."""

from __future__ import annotations

import numpy as np
import pytest

from socaut import sample_automorphism, signature_matrix


def rel_fro(A, B) -> float:
    """Relative Frobenius distance ||A - B||_F / max(1, ||B||_F)."""
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    return float(np.linalg.norm(A - B)) / max(1.0, float(np.linalg.norm(B)))


def congruence_defect(S, mu=None) -> float:
    """Raw ||S^T J S - mu J||_F, with mu read from entry (0,0) when absent."""
    S = np.asarray(S, dtype=float)
    J = signature_matrix(S.shape[0])
    G = S.T @ J @ S
    if mu is None:
        mu = G[0, 0]
    return float(np.linalg.norm(G - mu * J))


@pytest.fixture
def rng():
    return np.random.default_rng(20260821)


def random_automorphisms(count, n, seed0, alpha_max=10.0, nu_range=(0.1, 10.0)):
    """Yield `count` seeded automorphisms of size n."""
    for i in range(count):
        yield sample_automorphism(n, alpha_max=alpha_max, nu_range=nu_range, seed=seed0 + i)
