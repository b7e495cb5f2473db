"""
The automorphisms form a group
==============================

Products, inverses, and the multiplicative behavior of the congruence
scale mu, plus the geometric fact that underpins it all: automorphisms
map the cone onto itself, preserving interior and boundary.
"""

import numpy as np

from socaut import (
    SpinVector,
    apply,
    check_automorphism,
    cone_classify,
    sample_automorphism,
    signature_matrix,
)

n = 4
S1 = sample_automorphism(n, alpha_max=2.0, nu_range=(0.5, 2.0), seed=7)
S2 = sample_automorphism(n, alpha_max=2.0, nu_range=(0.5, 2.0), seed=8)
r1 = check_automorphism(S1)
r2 = check_automorphism(S2)

# The product of two automorphisms is one, and mu multiplies.
product = check_automorphism(S1 @ S2)
print("product accepted:", product.is_automorphism)
print("mu(S1 S2) =", product.mu, " mu(S1) mu(S2) =", r1.mu * r2.mu)

# The congruence relation hands us the inverse in closed form:
# S^{-1} = (1/mu) J S^T J.
J = signature_matrix(n)
S1_inv = (J @ S1.T @ J) / r1.mu
print("||S1_inv @ S1 - I|| =", np.linalg.norm(S1_inv @ S1 - np.eye(n)))
print("inverse accepted:", check_automorphism(S1_inv).is_automorphism)

# Automorphisms preserve the cone's stratification: interior points stay
# interior, boundary points stay on the boundary.
rng = np.random.default_rng(9)
for kind in ("interior", "boundary"):
    direction = rng.standard_normal(n - 1)
    direction /= np.linalg.norm(direction)
    radius = 2.0
    head = radius * (1.5 if kind == "interior" else 1.0)
    point = SpinVector(head, radius * direction)
    image = apply(S1, point)
    print(f"{kind} point maps to: {cone_classify(image).name}")

# Scaling by any positive factor stays in the group (mu scales by the
# square); flipping the cone does not.
print("2 S1 accepted:", check_automorphism(2.0 * S1).is_automorphism,
      " mu =", check_automorphism(2.0 * S1).mu)
print("-S1 accepted:", check_automorphism(-S1).is_automorphism)
