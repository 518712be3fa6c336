"""Root systems, lattices and centers, working up from A1 to E8."""

from compactlie import build_root_system, center_structure, enumerate_character_lattices, root_system
from compactlie.rootsys import DynkinType, root_to_weight_coords
from compactlie.weyl import orbit, to_dominant, weyl_order

print("Cartan matrices in Bourbaki numbering (row i is alpha_i in fundamental weights):")
for name in ("A2", "B2", "G2"):
    rs = root_system(name)
    print(f"  {name}: {rs.cartan}   symmetrizers {rs.symmetrizers}")

g2 = root_system("G2")
print("\nPositive roots of G2 (simple-root coordinates -> weight coordinates):")
for r in g2.positive_roots:
    print(f"  {r} -> {root_to_weight_coords(g2, r)}")
print("The highest root has weight (0,1): the adjoint representation is L(0,1).")

print("\nNumber of positive roots per type:")
for t in [DynkinType("A", 8), DynkinType("D", 5), DynkinType("E", 6), DynkinType("E", 8), DynkinType("F", 4)]:
    print(f"  {t}: {len(build_root_system(t).positive_roots)}")

print("\nP/Q is the center of the simply-connected group:")
for name in ("A3", "B3", "C3", "D4", "D5", "E6", "E7", "E8"):
    factors = center_structure(root_system(name))
    print(f"  {name}: {' x '.join(f'Z{d}' for d in factors) or 'trivial'}")

print("\nLattices between Q and P for D4 (five connected forms of Spin(8)):")
for L in enumerate_character_lattices(root_system("D4")):
    print(f"  order {L.order}, generators {L.generators}")

a2 = root_system("A2")
print("\nWeyl group of A2 acting on the weight (1,0):", orbit(a2, (1, 0)).elements)
p = to_dominant(a2, (-1, -1))
print(f"to_dominant(-1,-1) = {p.dominant} via word {p.word}, sign {p.sign}")
print("Weyl group orders:", {n: weyl_order(root_system(n)) for n in ("A3", "B3", "G2", "F4")})
