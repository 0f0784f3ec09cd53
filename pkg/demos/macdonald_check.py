"""
The q,t Pieri rule on a small range
====================================

The Macdonald version of the e_n rule is a conjecture.  Here it is compared
with products computed by brute force.  Agreement on a finite range is
evidence, not a proof.
"""

from superjack import macdonald, parse, pieri
from superjack.orthobasis import expand_in_basis, jack, jack_limit
from superjack.superalgebra import generator, multiply
from superjack.verify import verify_macdonald

lam = parse("(1,0;1)")
coeffs = pieri(lam, 1, "e", "qt")
oracle = expand_in_basis(multiply(generator("e", 1), macdonald(lam)), "qt")
for omega, c in coeffs.items():
    same = c.total == oracle[omega]
    print(f"{omega}: t^{c.d}, matches brute force: {same}")

# letting q = t^k and t -> 1 recovers the Jack rule at alpha = k
jack_coeffs = pieri(lam, 1, "e")
for k in (1, 2, 3):
    ok = all(jack_limit(c.total, k) == jack_coeffs[om].total.substitute({"a": k}) for om, c in coeffs.items())
    print(f"Jack limit at alpha={k}:", ok)

# a bigger sweep, as run by `superjack verify-macdonald`
report = verify_macdonald(3, 2, 2)
print(f"\n{report.checked} products checked;", *report.notes)

# Macdonald polynomials tend to Jack polynomials in the same limit
P = macdonald(parse("(2;1)"))
J = jack(parse("(2;1)"))
print("P_(2;1) tends to the Jack polynomial:", all(jack_limit(c, 2) == J.coeffs[sp].substitute({"a": 2}) for sp, c in P.coeffs.items()))
