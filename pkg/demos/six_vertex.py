"""
Alternating sign matrices and the Pieri determinant
====================================================

The determinant in a vertical-strip Pieri coefficient is a weighted sum over
alternating sign matrices, the same sum that gives the six-vertex partition
function with domain-wall boundary conditions.
"""

from superjack import const, enumerate_asm, parse, strips, var
from superjack.sixvertex import SpectralData, asm_sum, asm_weight, det_asm_identity, generic_det_vs_d_prime

for n in range(1, 6):
    print(f"ASMs of size {n}: {len(enumerate_asm(n))}")

# the seven of size 3, weighted at the labels of a worked strip
a = var("a")
data = SpectralData((7 * a - 1, 5 * a - 3, 4 * a - 4), (6 * a - 2, 3 * a - 5, a - 7))
total = const(0)
for A in enumerate_asm(3):
    w = asm_weight(A, data, "alpha")
    total = total + w
    print()
    print(A)
    print("weight:", w)
print("\nsum:", total, "| same as asm_sum:", total == asm_sum(data))

# for every e-strip of a small superpartition the determinant is the
# prefactor times the ASM sum
lam = parse("(3,1;2)")
results = [det_asm_identity(cls).equal for n in (1, 2, 3) for _, cls in strips(lam, n, "e")]
print(f"\n{sum(results)}/{len(results)} strips of {lam} satisfy the identity")

# with generic labels the q,t determinant is the Izergin-Korepin determinant
for n in (1, 2, 3):
    print(f"n={n}: generic determinant equals D':", generic_det_vs_d_prime(n).equal)
