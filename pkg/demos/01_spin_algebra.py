"""
The spin algebra and its cone of squares
========================================

The ambient space is R^n with a distinguished first coordinate.  A point
x = (x0, xbar) lies in the second-order cone when ||xbar|| <= x0.  The
Jordan product  x o y = (<x, y>, x0*ybar + y0*xbar)  makes R^n a Euclidean
Jordan algebra whose cone of squares is exactly that cone.
"""

import numpy as np

from socaut import ConeRegion, SpinVector, cone_classify, jordan_product, unit

rng = np.random.default_rng(1)

# A spin vector keeps the head coordinate and the tail separate.
x = SpinVector(3.0, np.array([1.0, 2.0]))
y = SpinVector(0.5, np.array([-1.0, 0.5]))
print("x =", x.to_array())
print("y =", y.to_array())

# The Jordan product is commutative but not associative.
print("x o y =", jordan_product(x, y).to_array())
print("y o x =", jordan_product(y, x).to_array())

# The unit element behaves like 1: e o x = x.
e = unit(3)
print("e o x =", jordan_product(e, x).to_array())

# Squares always land in the cone, and interior points have positive slack
# x0 - ||xbar||.  Classify a few squares drawn from a spread of scales.
for trial in range(4):
    z = SpinVector(rng.normal(scale=10.0), rng.normal(scale=10.0, size=4))
    square = jordan_product(z, z)
    slack = square.x0 - np.linalg.norm(square.xbar)
    region = cone_classify(square)
    print(f"square #{trial}: slack = {slack:.6g}, region = {region.name}")
    assert region is not ConeRegion.OUTSIDE

# Membership testing is relative: a point a hair outside a huge boundary
# point still classifies as BOUNDARY at the default tolerance.
big = SpinVector(1e9, np.array([1e9 + 1e0, 0.0]))
print("near-boundary at 1e9:", cone_classify(big).name)
print("same point, tighter tolerance:", cone_classify(big, tol=1e-12).name)
