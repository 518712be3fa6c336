"""Tensor products by Klimyk's formula, checked against multiplying characters."""

from compactlie import character_product, decompose_character, formal_character, root_system, tensor_decompose
from compactlie.charmult import dual_weight, weyl_dim

a1 = root_system("A1")
print("Clebsch-Gordan: Pi_3 x Pi_2 =", sorted(tensor_decompose(a1, (3,), (2,))))

a2 = root_system("A2")
print("\nSU(3): 3 x 3bar")
print(tensor_decompose(a2, (1, 0), (0, 1)).to_text())
print("SU(3): 8 x 8")
dec = tensor_decompose(a2, (1, 1), (1, 1))
print(dec.to_text())
print("dimension check:", dec.dimension(a2), "=", weyl_dim(a2, (1, 1)) ** 2)

print("\nThe same through characters: multiply, then peel off irreducibles")
chi = character_product(formal_character(a2, (1, 1)), formal_character(a2, (1, 1)))
print("peel agrees with Klimyk:", decompose_character(a2, chi) == dec)

g2 = root_system("G2")
print("\nG2: 7 x 7 =", tensor_decompose(g2, (1, 0), (1, 0)).to_text().replace("\n", ", "))
print("\nThe trivial summand detects duals: L(lam) x L(mu) contains L(0) iff mu = lam*")
a3 = root_system("A3")
lam = (1, 2, 0)
print(f"  dual of {lam} in A3 is {dual_weight(a3, lam)};",
      "multiplicity of L(0) in L(lam) x L(lam*):",
      tensor_decompose(a3, lam, dual_weight(a3, lam)).get((0, 0, 0), 0))
