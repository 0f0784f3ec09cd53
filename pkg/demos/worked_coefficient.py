"""
A single Pieri coefficient, factor by factor
=============================================

Multiply the Jack superpolynomial indexed by (6,4,3;5,2,1) by e_3 and look
at the coefficient of P_(5,2,0;7,5,4,1).
"""

from superjack import classify_strip, parse, pieri, var
from superjack.orthobasis import jack_limit
from superjack.pieri import d_stat, det_pieri, generic_limit_det
from superjack.sixvertex import SpectralData, asm_sum, ik_prefactor

lam = parse("(6,4,3;5,2,1)")
omega = parse("(5,2,0;7,5,4,1)")

coeffs = pieri(lam, 3, "e")
print(f"{len(coeffs)} superpartitions appear in e_3 * P_{lam}")

c = coeffs[omega]
print("sign :", c.sign)
print("psi  :", c.psi)
print("det  :", c.det)
print("total:", c.total)

# the cells of the strip carry x and y labels (alpha*column - row)
cls = classify_strip(lam, omega)
for i, cell in cls.xlabels:
    print(f"x{i} at {cell}")
for j, cell in cls.ylabels:
    print(f"y{j} at {cell}")

# labels in the same row coincide; the determinant is still a limit of the
# fully generic one
assert generic_limit_det(cls) == det_pieri(cls)

# the non-linear part of the determinant is a sum over 3x3 alternating sign matrices
a = var("a")
data = SpectralData((7 * a - 1, 5 * a - 3, 4 * a - 4), (6 * a - 2, 3 * a - 5, a - 7))
s = asm_sum(data)
print("ASM sum:", s)
print("prefactor * sum == det:", ik_prefactor(data, "alpha") * s == c.det)

# the same strip under the conjectural q,t rule; the expression is long, so
# only its limit q = t^2, t -> 1 is shown, next to the Jack value at alpha = 2
qt = pieri(lam, 3, "e", "qt")[omega]
print(f"t exponent applied: {qt.d} (statistic d = {d_stat(cls)})")
print("limit at alpha=2:", jack_limit(qt.total, 2))
print("Jack at alpha=2: ", c.total.substitute({"a": 2}))
