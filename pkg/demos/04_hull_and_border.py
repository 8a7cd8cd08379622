"""
Complete hulls, borders, and the dilation reach
===============================================

The complete hull cm(V) closes a family under dilation; the border is
what remains after removing strict-interior dilations.  Every member
factors uniquely through the border, and certified transpose kernels
dilate strictly beyond the closed disk.
"""

from convdual import (
    ParamGrid,
    TruncSeries,
    border_decompose,
    border_elements,
    complete_hull,
    counterexample_family,
    dilate,
    in_dual_hull,
    pencil_family,
    sample,
    series_distance,
    sigma_search,
)

V = counterexample_family()  # {1 + xz} u {1 + y z^2}

# The border swaps each closed disk for its boundary circle.
B = border_elements(V)
for gen in B.generators:
    print("border generator:", gen.kind, "exponents", gen.exponents, "domains", gen.domains)

# Round trip: member = dilate(border element, x) with |x| minimal.
worst = 0.0
for f, tag in sample(V, ParamGrid(disk_radial=6, disk_angular=12)):
    dec = border_decompose(V, tag)
    worst = max(worst, series_distance(dilate(dec.g, dec.x), f))
print("max reconstruction error over the grid:", worst)

# One concrete decomposition: 0.6i maps to the unit-circle element
# rotated onto the canonical representative.
f, tag = sample(V, ParamGrid(disk_radial=1, disk_angular=4))[1]
dec = border_decompose(V, tag)
print(
    "member", tag.label(), "= dilate(g, x) with x =", dec.x,
    "and g =", [complex(c) for c in dec.g.coeffs],
)

# Hull membership over the sampled transpose set: the double dual of the
# pencil closes the coefficient bound |a_1| <= 1.
W = pencil_family()
for c in (0.8, 1.3):
    cert = in_dual_hull(TruncSeries.polynomial([1.0, c]), W)
    print(f"1+{c}z in V**:", cert.status.value)

# A transpose kernel survives dilation up to the reciprocal of its
# leading coefficient; the search brackets that supremum.
g = TruncSeries.polynomial([1.0, 0.4])
sigma = sigma_search(W, g, sigma_max=5.0)
print("sigma reach for 1+0.4z:", sigma, "(closed form 1/0.4 = 2.5)")

cm = complete_hull(W)
print("hull of the pencil adds a dilation slot:", cm.dilation_slot)
