"""
Dual, transpose, and perp membership
====================================

The pencil family {1 + xz : |x| <= 1} has closed-form duality: a kernel
1 + cz lies in the dual exactly when |c| <= 1.  The decision procedures
return certificates, and falsifications carry a reconstructible witness.
"""

from convdual import TruncSeries, in_T, in_dual, in_perp, pencil_family

V = pencil_family()

# Inside: Verified with a positive margin.
g = TruncSeries.polynomial([1.0, 0.5])
cert = in_dual(g, V)
print("1+0.5z in V*:", cert.status.value, "margin", f"{cert.min_modulus:.4f}")

# On the boundary: still Verified (the dual is closed).
g = TruncSeries.polynomial([1.0, 1.0])
cert = in_dual(g, V)
print("1+z   in V*:", cert.status.value, "margin", f"{cert.min_modulus:.2e}")

# Outside: Falsified, and the witness solves the pairing exactly.
# The member 1 + xz with x = 1 convolves to 1 + 1.2z, which vanishes
# at z = -1/1.2 inside the open disk.
g = TruncSeries.polynomial([1.0, 1.2])
cert = in_dual(g, V)
print("1+1.2z in V*:", cert.status.value, "witness z =", cert.witness)
print("  member parameters:", cert.params["member_params"])

# The transpose only needs the pairing at z = 1, so its boundary is
# strict: 1 + z fails by a hair while 1 + 0.999z clears it.
for c in (0.999, 1.0):
    cert = in_T(TruncSeries.polynomial([1.0, c]), V)
    print(f"1+{c}z in V^T:", cert.status.value)

# Perp membership runs the same pairing with the roles swapped.
h = TruncSeries.polynomial([1.0, -0.7])
cert = in_perp(h, V)
print("1-0.7z in V^perp:", cert.status.value, "margin", f"{cert.min_modulus:.4f}")
