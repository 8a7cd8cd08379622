"""
Truncated series with certified tails
=====================================

A walk through the arithmetic layer: exact polynomials, geometric tail
bounds, Hadamard convolution, and the convolution identity.
"""

import numpy as np

from convdual import TruncSeries, convolve, dilate, evaluate, from_rational, ones

# An exact polynomial carries a zero tail: every coefficient beyond the
# stored block is exactly zero, so evaluations have error bound 0.
f = TruncSeries.polynomial([1.0, -2.0, 0.5])
res = evaluate(f, 0.3 + 0.1j)
print("f(0.3+0.1i) =", res.value, "error bound", res.error_bound)

# A rational member (1+xz)/(1+yz) truncates with a geometric envelope
# |a_k| <= M / rho^k, so the evaluation bound is a finite geometric sum.
g = from_rational(0.8, -0.5, order=24)
res = evaluate(g, 0.9)
truth = (1 + 0.8 * 0.9) / (1 - 0.5 * 0.9)
print("g(0.9)      =", res.value, "error bound", res.error_bound)
print("truth       =", truth, "actual error", abs(truth - res.value))

# Hadamard convolution multiplies coefficients index by index.  The
# geometric series sum z^k acts as the identity.
e = ones(order=24)
h = convolve(g, e)
print("distance from g to g*ones:", np.max(np.abs(np.asarray(h.coeffs) - np.asarray(g.coeffs))))

# Dilation rescales the argument: (P_x f)(z) = f(xz).  Composing two
# dilations multiplies the parameters.
lhs = dilate(dilate(f, 0.5), 0.4j)
rhs = dilate(f, 0.2j)
print("dilation composition gap:", np.max(np.abs(np.asarray(lhs.coeffs) - np.asarray(rhs.coeffs))))

# Convolving two rationals keeps a valid tail: the bound still dominates
# the true remainder at every point of the disk.
a = from_rational(0.7, 0.3, order=20)
b = from_rational(-0.4, 0.2, order=20)
c = convolve(a, b)
z = 0.85
res = evaluate(c, z)
truth = 1 + (0.7 - 0.3) * (-0.4 - 0.2) * z / (1 - 0.3 * 0.2 * z)
print("convolved rationals at", z, "error", abs(truth - res.value), "<= bound", res.error_bound)
