"""Weight multiplicities three ways: Freudenthal, Kostant, and the Weyl character formula."""

import numpy as np

from compactlie import eval_character, formal_character, mult_kostant, root_system, weyl_dim
from compactlie.charmult import generic_torus_points, kostant_partition

a1 = root_system("A1")
print("SU(2): the weights of Pi_5 are 5, 3, ..., -5, each once")
print(formal_character(a1, (5,)).to_text())

a2 = root_system("A2")
chi = formal_character(a2, (2, 1))
print(f"\nSU(3), L(2,1): dimension {weyl_dim(a2, (2, 1))}, {len(chi)} distinct weights")
print(chi.to_text())

print("\nKostant partition function of A2 on n(alpha1 + alpha2):",
      [kostant_partition(a2, (n, n)) for n in range(6)])

print("\nFreudenthal vs Kostant on the G2 representation L(1,1):")
g2 = root_system("G2")
chi = formal_character(g2, (1, 1))
mismatch = [mu for mu, m in chi.items() if mult_kostant(g2, (1, 1), mu) != m]
print(f"  dim {chi.dimension}, mismatching weights: {mismatch}")

print("\nCharacter of B2 L(1,1) at generic torus points, both sides of the character formula:")
b2 = root_system("B2")
t = generic_torus_points(b2, 5, np.random.default_rng(0))
ws = eval_character(b2, (1, 1), t, method="weight-sum")
wq = eval_character(b2, (1, 1), t, method="weyl-quotient")
for x, a, b in zip(t, ws, wq):
    print(f"  t = {np.round(x, 3)}: {a:.10f}   {b:.10f}")
print("At the identity the character is the dimension:", eval_character(b2, (1, 1), [0, 0]))
