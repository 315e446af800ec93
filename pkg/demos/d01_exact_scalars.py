"""
Exact cyclotomic arithmetic
===========================

Scalars live in Q(zeta_m), stored as rational coefficient lists reduced
modulo the m-th cyclotomic polynomial.
"""

from hennings.scalar import RootScalar, Scalar, cyclotomic_poly, parse_scalar

# Phi_4 = z^2 + 1, so z is the imaginary unit
print("Phi_4 coefficients:", cyclotomic_poly(4))
z = Scalar.zeta(4)
print("z^2 =", z * z)
print("z^4 =", z ** 4)

# parsing and inverses are exact
x = parse_scalar("1/2 + 3*z", 4)
print("x =", x, " x^-1 =", x ** -1, " x * x^-1 =", x * x ** -1)

# an eighth root of unity squares to z
w = Scalar.zeta(8)
print("zeta_8^2 =", w * w)

# formal square roots: r^2 = a and s^2 = b are kept symbolic
a, b = parse_scalar("-2*z", 4), parse_scalar("2*z", 4)
ctx = (a, b)
r = RootScalar.pow_half("r", 1, ctx)
s = RootScalar.pow_half("s", 1, ctx)
print("r^2 =", r * r, "  r*s =", r * s, "  (r*s)^2 =", (r * s) * (r * s))
