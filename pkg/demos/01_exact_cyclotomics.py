"""Exact cyclotomic arithmetic: roots of unity, Gauss sums, certified intervals.

All values in this package are exact elements of cyclotomic fields.  This
script walks through the arithmetic: canonical reduction, conductor mixing,
integer square roots realized as Gauss sums, and interval embeddings that are
refined until they decide a comparison (never the other way around).
"""

from fractions import Fraction

from fusionrings import (
    Cyc,
    compare_real,
    cyclotomic_polynomial,
    embed_interval,
    sign_real,
    sqrt_integer_as_cyclotomic,
    zeta,
)

print("cyclotomic polynomials (ascending coefficients):")
for n in (1, 4, 9, 12):
    print(f"  Phi_{n} = {cyclotomic_polynomial(n)}")

print("\nroots of unity multiply exactly across conductors:")
a = zeta(9) + zeta(9, 8)  # 2 cos(2 pi / 9)
b = zeta(4)  # i
print(f"  (z9 + z9^-1) * i = {a * b!r}")
print(f"  (z9 + z9^-1)^2   = {a * a!r}")

print("\ninverses come from the extended Euclidean algorithm mod Phi_n:")
v = 1 + zeta(3)
print(f"  (1 + z3)^-1 = {v.inverse()!r}  (equals -z3: {v.inverse() == -zeta(3)})")

print("\ninteger square roots as Gauss sums:")
for m in (2, 5, 7, 9, 12):
    s = sqrt_integer_as_cyclotomic(m)
    print(f"  sqrt({m}) lives at conductor {s.n}; squares back: {s * s == Cyc.rational(m)}")

print("\ncertified interval embeddings (width shrinks with precision):")
val = 2 * (zeta(9) + zeta(9, 8))
for prec in (64, 128, 256):
    re, _ = embed_interval(val, prec)
    print(f"  4cos(2pi/9) at {prec} bits: width {float(re.width()):.3e}")

print("\ncomparisons are decided exactly, equalities never by overlap:")
lhs = zeta(5) + zeta(5, 4)  # 2 cos(2 pi / 5)
rhs = (sqrt_integer_as_cyclotomic(5) - 1) / 2
print(f"  2cos(2pi/5) vs (sqrt5 - 1)/2: compare_real = {compare_real(lhs, rhs)}")
print(f"  sign(sqrt2 - 1.5) = {sign_real(sqrt_integer_as_cyclotomic(2) - Cyc.rational(Fraction(3, 2)))}")
