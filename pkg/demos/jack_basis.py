"""
Jack superpolynomials from scratch
===================================

Build a few Jack polynomials in superspace, check that they are orthogonal,
and watch the duality that swaps alpha with 1/alpha and conjugates the index.
"""

from superjack import conjugate, enumerate_superpartitions, jack, norm_squared, omega_hat, parse
from superjack.orthobasis import invert_alpha, norm_oracle
from superjack.superalgebra import scalar_alpha

# every superpartition of bosonic degree 2 with one circle
sector = enumerate_superpartitions(2, 1)
print("sector (2|1):", ", ".join(str(s) for s in sector))

for lam in sector:
    print(f"\nP_{lam} =")
    for sp, c in jack(lam).coeffs.items():
        print(f"    {c}  m_{sp}")

# distinct Jacks are orthogonal for the alpha scalar product
pairs = [(x, y) for x in sector for y in sector if x != y]
print("\nall pairs orthogonal:", all(scalar_alpha(jack(x), jack(y)).is_zero() for x, y in pairs))

# the norm has a closed form in terms of two kinds of hook lengths
lam = parse("(2,0;1)")
print(f"||P_{lam}||^2 =", norm_squared(lam))
print("same as Gram-Schmidt:", norm_squared(lam) == norm_oracle(lam))

# omega-hat sends P_lam(alpha) to ||P_lam||^2 P_lam'(1/alpha)
lhs = omega_hat(jack(lam))
rhs = invert_alpha(jack(conjugate(lam))).scale(norm_squared(lam))
print(f"conjugate of {lam} is {conjugate(lam)}; duality holds:", lhs == rhs)
