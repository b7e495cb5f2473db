"""Membership, factorization, composition, and sampling for cone automorphisms.

An invertible linear map S preserves the second-order cone
``{x : ||xbar|| <= x0}`` exactly when it satisfies the two-sided congruence

    S^T J S = mu J = S J S^T,   mu > 0,   J = diag(1, -1, ..., -1),

and keeps the cone axis forward, ``(S e)_0 > 0``.  Every such S factors as

    S = nu * [[a, c^T], [c, P]] @ diag(1, U)                      (compact)
      = nu * diag(1, V) @ T_alpha @ diag(1, V^T) @ diag(1, U)     (canonical)

with nu > 0, c in R^(n-1), a = sqrt(1 + ||c||^2), P = sqrt(I + c c^T),
alpha = ||c||, V and U orthogonal, and T_alpha the hyperbolic boost.  This
module implements the membership test, both factorizations, their inverses
(composition), a seeded sampler, and a residual report for the six block
identities behind the factorization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._validate import (
    DEFAULT_TOL,
    as_index,
    as_nonnegative_float,
    as_positive_float,
    as_square_matrix,
)
from .kernels import (
    RankOneSqrt,
    boost_matrix,
    haar_orthogonal,
    householder_to_direction,
    orthogonality_residual,
)
from .spin import SpinVector

__all__ = [
    "NotAutomorphismError",
    "BlockView",
    "AutCheckResult",
    "CompactFactorization",
    "CanonicalFactorization",
    "PropertyReport",
    "split_blocks",
    "check_automorphism",
    "normalize",
    "factor_compact",
    "factor_canonical",
    "compose_compact",
    "compose_canonical",
    "sample_automorphism",
    "property_report",
    "apply",
    "algebra_automorphism",
]


class NotAutomorphismError(ValueError):
    """Raised when an operation needs a cone automorphism and the input fails.

    When available, the failing membership test is attached as ``check``.
    """

    def __init__(self, message: str, check: "AutCheckResult | None" = None):
        super().__init__(message)
        self.check = check


def _frozen_vector(v: np.ndarray) -> np.ndarray:
    out = np.array(v, dtype=float)
    out.flags.writeable = False
    return out


def _frozen_matrix(M: np.ndarray) -> np.ndarray:
    out = np.array(M, dtype=float)
    out.flags.writeable = False
    return out


@dataclass(frozen=True, eq=False)
class BlockView:
    """The block split S = [[a, b^T], [c, D]] of an n x n matrix, n >= 2."""

    a: float
    b: np.ndarray
    c: np.ndarray
    D: np.ndarray

    def reassemble(self) -> np.ndarray:
        """Rebuild the source matrix exactly from the four blocks."""
        m = self.b.size
        S = np.empty((m + 1, m + 1))
        S[0, 0] = self.a
        S[0, 1:] = self.b
        S[1:, 0] = self.c
        S[1:, 1:] = self.D
        return S


@dataclass(frozen=True)
class AutCheckResult:
    """Outcome of the two-sided congruence membership test.

    Attributes
    ----------
    is_automorphism : bool
        True when ``mu > tol``, ``residual_congruence <= tol``, and
        ``cone_forward`` all hold.
    mu : float
        Congruence scale, read from entry (0,0) of ``S^T J S``.
    residual_congruence : float
        ``max(||S^T J S - mu J||_F, ||S J S^T - mu J||_F) / max(1, ||S||_F^2)``.
    cone_forward : bool
        True when ``(S e)_0 > 0``, i.e. the cone axis is not reversed.
    """

    is_automorphism: bool
    mu: float
    residual_congruence: float
    cone_forward: bool


@dataclass(frozen=True, eq=False)
class CompactFactorization:
    """S = nu * [[a, c^T], [c, P]] @ diag(1, U) with P = sqrt(I + c c^T).

    Only ``nu``, ``c``, and ``U`` are stored; ``a`` and ``P`` are derived.
    Shape and positivity are validated on construction; U's orthogonality is
    gated where the factorization crosses an operation (compose, file load).
    """

    nu: float
    c: np.ndarray
    U: np.ndarray

    def __post_init__(self) -> None:
        nu = as_positive_float(self.nu, "nu")
        c = _frozen_vector(self.c)
        U = _frozen_matrix(self.U)
        if c.ndim != 1 or c.size < 1 or not np.all(np.isfinite(c)):
            raise ValueError("c must be a finite vector of length n-1 >= 1")
        if U.shape != (c.size, c.size) or not np.all(np.isfinite(U)):
            raise ValueError(
                f"U must be a finite {c.size}x{c.size} matrix, got shape {U.shape}"
            )
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "U", U)

    @property
    def n(self) -> int:
        """Ambient dimension ``1 + len(c)``."""
        return 1 + self.c.size

    @property
    def a(self) -> float:
        """``sqrt(1 + ||c||^2)``."""
        return RankOneSqrt.from_vector(self.c).a

    @property
    def P(self) -> np.ndarray:
        """``sqrt(I + c c^T)`` materialized."""
        return RankOneSqrt.from_vector(self.c).matrix()


@dataclass(frozen=True, eq=False)
class CanonicalFactorization:
    """S = nu * diag(1, V) @ T_alpha @ diag(1, V^T) @ diag(1, U).

    ``V`` and ``U`` are (n-1) x (n-1) orthogonal factors; orthogonality is
    gated at operation boundaries, shape and sign constraints here.
    """

    nu: float
    alpha: float
    V: np.ndarray
    U: np.ndarray

    def __post_init__(self) -> None:
        nu = as_positive_float(self.nu, "nu")
        alpha = as_nonnegative_float(self.alpha, "alpha")
        V = _frozen_matrix(self.V)
        U = _frozen_matrix(self.U)
        if V.ndim != 2 or V.shape[0] != V.shape[1] or V.shape[0] < 1:
            raise ValueError(f"V must be square of size >= 1, got shape {V.shape}")
        if U.shape != V.shape:
            raise ValueError(f"U must match V's shape {V.shape}, got {U.shape}")
        if not (np.all(np.isfinite(V)) and np.all(np.isfinite(U))):
            raise ValueError("V and U must have finite entries")
        object.__setattr__(self, "nu", nu)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "V", V)
        object.__setattr__(self, "U", U)

    @property
    def n(self) -> int:
        """Ambient dimension ``1 + V.shape[0]``."""
        return 1 + self.V.shape[0]


@dataclass(frozen=True)
class PropertyReport:
    """Residuals of the six block identities plus cone-image statistics.

    The identities, for a normalized S = [[a, b^T], [c, D]]:

        A1: a = sqrt(1 + ||c||^2)     B1: a = sqrt(1 + ||b||^2)
        A2: a b = D^T c               B2: a c = D b
        A3: D^T D = I + b b^T         B3: D D^T = I + c c^T

    The A family comes from ``S^T J S = J``, the B family from
    ``S J S^T = J``.  Residuals are raw Euclidean/Frobenius norms evaluated
    on the (internally normalized) matrix.  Cone statistics are absolute
    slacks ``||ybar|| - y0`` over images of sampled cone points.
    """

    residual_A1: float
    residual_A2: float
    residual_A3: float
    residual_B1: float
    residual_B2: float
    residual_B3: float
    cone_violation_max: float
    boundary_drift_max: float

    def max_identity_residual(self) -> float:
        """Largest of the six identity residuals."""
        return max(
            self.residual_A1,
            self.residual_A2,
            self.residual_A3,
            self.residual_B1,
            self.residual_B2,
            self.residual_B3,
        )


def split_blocks(S) -> BlockView:
    """Split S into ``a = S[0,0]``, ``b = S[0,1:]``, ``c = S[1:,0]``, ``D``.

    Lossless: ``split_blocks(S).reassemble()`` equals S bit for bit.
    """
    S = as_square_matrix(S, "S", min_n=2)
    return BlockView(
        a=float(S[0, 0]),
        b=_frozen_vector(S[0, 1:]),
        c=_frozen_vector(S[1:, 0]),
        D=_frozen_matrix(S[1:, 1:]),
    )


def _congruence_parts(S: np.ndarray) -> tuple[float, float]:
    """Return (mu, residual_congruence) for the two-sided J-congruence."""
    n = S.shape[0]
    j = -np.ones(n)
    j[0] = 1.0
    left = S.T @ (j[:, None] * S)  # S^T J S
    right = (S * j[np.newaxis, :]) @ S.T  # S J S^T
    mu = float(left[0, 0])
    target = mu * j
    left[np.diag_indices(n)] -= target
    right[np.diag_indices(n)] -= target
    scale = max(1.0, float(np.sum(S * S)))
    res = max(float(np.linalg.norm(left)), float(np.linalg.norm(right))) / scale
    return mu, res


def check_automorphism(S, tol: float = DEFAULT_TOL) -> AutCheckResult:
    """Two-sided congruence membership test for the cone automorphism group.

    Accepts iff ``mu > tol``, ``residual_congruence <= tol`` (both
    ``S^T J S = mu J`` and ``S J S^T = mu J`` enter the residual), and
    ``(S e)_0 = S[0,0] > 0``.  ``mu`` is read from entry (0,0) of
    ``S^T J S``; any inconsistency with the rest of the congruence shows up
    in the residual.  Rejection is a normal result, not an exception.
    """
    S = as_square_matrix(S, "S", min_n=2)
    tol = as_nonnegative_float(tol, "tol")
    mu, res = _congruence_parts(S)
    cone_forward = bool(S[0, 0] > 0.0)
    accepted = (mu > tol) and (res <= tol) and cone_forward
    return AutCheckResult(
        is_automorphism=accepted,
        mu=mu,
        residual_congruence=res,
        cone_forward=cone_forward,
    )


def normalize(S, check: AutCheckResult) -> tuple[float, np.ndarray]:
    """Strip the homogeneous scale: return ``(nu, S/nu)`` with ``nu = sqrt(mu)``.

    The result satisfies ``S_hat^T J S_hat = J`` within the tolerance that
    accepted ``check``.  Raises NotAutomorphismError when ``check`` is a
    rejection.
    """
    S = as_square_matrix(S, "S", min_n=2)
    if not check.is_automorphism:
        raise NotAutomorphismError(
            "normalize requires an accepted matrix "
            f"(mu={check.mu:.6g}, residual={check.residual_congruence:.3e}, "
            f"cone_forward={check.cone_forward})",
            check,
        )
    nu = math.sqrt(check.mu)
    return nu, S / nu


def _describe_rejection(check: AutCheckResult) -> str:
    reasons = []
    if not check.mu > 0.0:
        reasons.append(f"congruence scale mu={check.mu:.6g} is not positive")
    if not check.cone_forward:
        reasons.append("cone-reversing: (S e)_0 <= 0")
    reasons.append(f"congruence residual {check.residual_congruence:.3e}")
    return "; ".join(reasons)


def factor_compact(S, tol: float = DEFAULT_TOL) -> CompactFactorization:
    """Factor an accepted S as ``nu * [[a, c^T], [c, P]] @ diag(1, U)``.

    After normalizing the scale away, ``c`` is the first column tail and
    ``U = P^{-1} D`` is recovered through the closed-form rank-one inverse
    of ``P = sqrt(I + c c^T)`` — an O(n^2) update of the D block.  If the
    recovered U fails ``orthogonality_residual(U) <= tol * (n-1)``, S is
    rejected: the congruence test then passed only within noise.
    """
    S = as_square_matrix(S, "S", min_n=2)
    check = check_automorphism(S, tol)
    if not check.is_automorphism:
        raise NotAutomorphismError(
            "cannot factor: " + _describe_rejection(check), check
        )
    nu, S_hat = normalize(S, check)
    blocks = split_blocks(S_hat)
    c = blocks.c
    root = RankOneSqrt.from_vector(c)
    # U = P^{-1} D = (I + gamma c c^T) D, applied as a rank-one update.
    U = blocks.D + root.gamma * np.outer(c, c @ blocks.D)
    m = c.size
    res_U = orthogonality_residual(U)
    if res_U > tol * m:
        raise NotAutomorphismError(
            f"recovered orthogonal factor fails its gate: residual {res_U:.3e} "
            f"> {tol * m:.3e}; the congruence held only within noise",
            check,
        )
    return CompactFactorization(nu=nu, c=c, U=U)


def factor_canonical(S, tol: float = DEFAULT_TOL) -> CanonicalFactorization:
    """Factor an accepted S as ``nu * diag(1,V) T_alpha diag(1,V^T) diag(1,U)``.

    Built on factor_compact: ``alpha = ||c||`` and ``V`` is the Householder
    reflector aligning ``e1`` with ``c`` (identity when ``c = 0``), so that
    ``c = alpha V e1`` with ``alpha >= 0``.  (V, U) are not unique; only the
    reconstruction ``compose_canonical(result) ~ S`` is contractual.
    """
    compact = factor_compact(S, tol)
    alpha = float(np.linalg.norm(compact.c))
    V = householder_to_direction(compact.c)
    return CanonicalFactorization(nu=compact.nu, alpha=alpha, V=V, U=compact.U)


def _require_orthogonal(M: np.ndarray, name: str, tol: float) -> None:
    res = orthogonality_residual(M)
    if res > tol * M.shape[0]:
        raise ValueError(
            f"{name} is not orthogonal within tolerance: residual {res:.3e} "
            f"> {tol * M.shape[0]:.3e}"
        )


def compose_compact(f: CompactFactorization, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Multiply a compact factorization back into a dense matrix.

    Assembled blockwise in O(n^2): with ``a = sqrt(1+||c||^2)`` and
    ``P = I + beta c c^T``, the product ``nu * [[a, c^T],[c, P]] diag(1,U)``
    has first row ``nu * [a, (c^T U)]``, first column ``nu * [a; c]``, and
    lower block ``nu * (U + beta c (c^T U))``.  U's orthogonality gate
    (``<= tol * (n-1)``) is enforced here.
    """
    if not isinstance(f, CompactFactorization):
        raise TypeError(f"expected CompactFactorization, got {type(f).__name__}")
    tol = as_nonnegative_float(tol, "tol")
    _require_orthogonal(f.U, "U", tol)
    root = RankOneSqrt.from_vector(f.c)
    cU = f.c @ f.U
    n = f.n
    S = np.empty((n, n))
    S[0, 0] = root.a
    S[0, 1:] = cU
    S[1:, 0] = f.c
    S[1:, 1:] = f.U + root.beta * np.outer(f.c, cU)
    S *= f.nu
    return S


def _embed(M: np.ndarray) -> np.ndarray:
    """diag(1, M) for an m x m block."""
    m = M.shape[0]
    out = np.zeros((m + 1, m + 1))
    out[0, 0] = 1.0
    out[1:, 1:] = M
    return out


def compose_canonical(f: CanonicalFactorization, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Multiply a canonical factorization back into a dense matrix.

    Evaluates the four-factor product
    ``nu * diag(1,V) @ T_alpha @ diag(1,V^T) @ diag(1,U)`` literally, as an
    independent route from compose_compact (the two agree: the product of
    the first three factors equals ``[[a, c^T], [c, P]]`` for
    ``c = alpha V e1``).  Both orthogonality gates are enforced here.
    """
    if not isinstance(f, CanonicalFactorization):
        raise TypeError(f"expected CanonicalFactorization, got {type(f).__name__}")
    tol = as_nonnegative_float(tol, "tol")
    _require_orthogonal(f.V, "V", tol)
    _require_orthogonal(f.U, "U", tol)
    T = boost_matrix(f.alpha, f.n)
    S = _embed(f.V) @ T @ _embed(f.V.T) @ _embed(f.U)
    S *= f.nu
    return S


def sample_automorphism(
    n: int,
    alpha_max: float = 10.0,
    nu_range: tuple[float, float] = (1.0, 1.0),
    seed: int = 0,
) -> np.ndarray:
    """Draw a random cone automorphism, deterministically per seed.

    ``nu`` is uniform over ``nu_range``, ``alpha`` uniform over
    ``[0, alpha_max]``, and V, U are Haar orthogonal; the result is the
    canonical composition of those factors.  The draw order (nu, alpha, V,
    U) from ``np.random.default_rng(seed)`` is fixed.
    """
    n = as_index(n, "n", minimum=2)
    alpha_max = as_nonnegative_float(alpha_max, "alpha_max")
    nu_min, nu_max = (float(nu_range[0]), float(nu_range[1]))
    if not (np.isfinite(nu_min) and np.isfinite(nu_max)) or not 0.0 < nu_min <= nu_max:
        raise ValueError(
            f"nu_range must satisfy 0 < nu_min <= nu_max, got ({nu_min!r}, {nu_max!r})"
        )
    seed = as_index(seed, "seed", minimum=0)
    rng = np.random.default_rng(seed)
    nu = float(rng.uniform(nu_min, nu_max))
    alpha = float(rng.uniform(0.0, alpha_max))
    V = haar_orthogonal(rng, n - 1)
    U = haar_orthogonal(rng, n - 1)
    return compose_canonical(CanonicalFactorization(nu=nu, alpha=alpha, V=V, U=U))


def _sample_cone_points(
    rng: np.random.Generator, n: int, count: int, boundary: bool
) -> np.ndarray:
    """Sample cone points as rows: tail uniform on a sphere of radius
    r in (0, 10], head r (boundary) or r*(1+u), u in (0, 1] (interior)."""
    if count == 0:
        return np.empty((0, n))
    G = rng.standard_normal((count, n - 1))
    norms = np.linalg.norm(G, axis=1)
    norms[norms == 0.0] = 1.0
    r = 10.0 - rng.uniform(0.0, 10.0, size=count)  # uniform on (0, 10]
    X = np.empty((count, n))
    X[:, 1:] = G * (r / norms)[:, np.newaxis]
    if boundary:
        X[:, 0] = r
    else:
        u = 1.0 - rng.random(size=count)  # uniform on (0, 1]
        X[:, 0] = r * (1.0 + u)
    return X


def property_report(
    S,
    n_samples: int = 10000,
    tol: float = DEFAULT_TOL,
    seed: int = 0,
) -> PropertyReport:
    """Evaluate the six block identities and cone-image statistics for S.

    S must be normalized (mu = 1) or normalizable: when ``|mu - 1| > 0.1``
    the matrix is rescaled by ``1/sqrt(mu)`` internally; near-normalized
    input is evaluated verbatim, so a single broken entry is never partially
    reabsorbed by the rescale.  Residuals are raw norms of the six identity
    defects.  Gross non-automorphisms (``mu <= 0``, cone-reversing) raise
    NotAutomorphismError; tolerance-level failures still produce a report —
    that is the diagnostic purpose of this function.

    Cone statistics sample ``n_samples`` interior and ``n_samples`` boundary
    points (seeded), mapping them through the normalized matrix (the cone is
    scale-invariant, and this keeps the absolute slacks meaningful at any
    mu): ``cone_violation_max`` is the largest positive slack
    ``||ybar|| - y0`` over all images, ``boundary_drift_max`` the largest
    ``| ||ybar|| - y0 |`` over boundary images.
    """
    S = as_square_matrix(S, "S", min_n=2)
    n_samples = as_index(n_samples, "n_samples", minimum=0)
    as_nonnegative_float(tol, "tol")
    seed = as_index(seed, "seed", minimum=0)
    n = S.shape[0]
    col0 = S[:, 0]
    mu = float(col0[0] * col0[0] - col0[1:] @ col0[1:])
    if not np.isfinite(mu) or mu <= 0.0:
        raise NotAutomorphismError(
            f"congruence scale mu={mu:.6g} is not positive; cannot normalize"
        )
    if S[0, 0] <= 0.0:
        raise NotAutomorphismError("cone-reversing input: (S e)_0 <= 0")
    S_hat = S if abs(mu - 1.0) <= 0.1 else S / math.sqrt(mu)

    blocks = split_blocks(S_hat)
    a, b, c, D = blocks.a, blocks.b, blocks.c, blocks.D
    m = n - 1
    res_A1 = abs(a - math.sqrt(1.0 + float(c @ c)))
    res_A2 = float(np.linalg.norm(a * b - D.T @ c))
    G = D.T @ D
    G[np.diag_indices(m)] -= 1.0
    res_A3 = float(np.linalg.norm(G - np.outer(b, b)))
    res_B1 = abs(a - math.sqrt(1.0 + float(b @ b)))
    res_B2 = float(np.linalg.norm(a * c - D @ b))
    H = D @ D.T
    H[np.diag_indices(m)] -= 1.0
    res_B3 = float(np.linalg.norm(H - np.outer(c, c)))

    cone_violation = 0.0
    boundary_drift = 0.0
    if n_samples > 0:
        rng = np.random.default_rng(seed)
        interior = _sample_cone_points(rng, n, n_samples, boundary=False)
        boundary = _sample_cone_points(rng, n, n_samples, boundary=True)
        for X, is_boundary in ((interior, False), (boundary, True)):
            Y = X @ S_hat.T
            slack = np.linalg.norm(Y[:, 1:], axis=1) - Y[:, 0]
            cone_violation = max(cone_violation, float(np.max(slack, initial=0.0)))
            if is_boundary:
                boundary_drift = float(np.max(np.abs(slack), initial=0.0))

    return PropertyReport(
        residual_A1=res_A1,
        residual_A2=res_A2,
        residual_A3=res_A3,
        residual_B1=res_B1,
        residual_B2=res_B2,
        residual_B3=res_B3,
        cone_violation_max=cone_violation,
        boundary_drift_max=boundary_drift,
    )


def apply(S, x: SpinVector) -> SpinVector:
    """Matrix action on a spin vector: ``S @ x``, re-split into head/tail."""
    S = as_square_matrix(S, "S", min_n=2)
    if S.shape[0] != x.n:
        raise ValueError(f"dimension mismatch: matrix is {S.shape[0]}, vector is {x.n}")
    y = S @ x.to_array()
    return SpinVector(float(y[0]), y[1:])


def algebra_automorphism(D, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Embed an orthogonal D as the algebra automorphism ``diag(1, D)``.

    These are exactly the maps preserving the Jordan product (and the unit
    e) — a subgroup of the cone automorphisms with mu = 1.  Raises
    ValueError when D fails its orthogonality gate ``tol * m``.
    """
    D = as_square_matrix(D, "D", min_n=1)
    tol = as_nonnegative_float(tol, "tol")
    _require_orthogonal(D, "D", tol)
    return _embed(D)
