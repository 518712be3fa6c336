"""Haar quadrature, orthogonality and Fourier analysis on SU(2); Weyl integration on U(2)."""

import numpy as np

from compactlie.harmonic import (
    BandLimitedFunction,
    SU2Element,
    convolve,
    fourier_transform,
    inverse_fourier,
    l2_norm_squared,
    matrix_element_inner,
    plancherel_norm,
    run_battery,
    schur_polynomial,
    su2_rep_matrix,
    su2_to_so3,
    weyl_integrate_torus_class,
)

rng = np.random.default_rng(1)
g = SU2Element.random(rng)
print("Pi_1(g) is g itself:", np.allclose(su2_rep_matrix(1, g).entries, g.matrix()))
R = su2_to_so3(g)
print("Pi_2 lands in SO(3): R^T R = I:", np.allclose(R.T @ R, np.eye(3)), " det =", round(np.linalg.det(R), 12))
print("and -1 maps to the identity:", np.allclose(su2_to_so3(SU2Element(-1.0, 0.0)), np.eye(3)))

print("\n<t^2_01, t^2_01> =", matrix_element_inner(2, 0, 1, 2, 0, 1).real, "(1 / dim)")
print("<t^2_01, t^4_01> =", abs(matrix_element_inner(2, 0, 1, 4, 0, 1)))

print("\nFourier transform of a random band-limited function, kmax = 3")
f = BandLimitedFunction({(k, i, j): complex(*rng.standard_normal(2))
                         for k in range(4) for i in range(k + 1) for j in range(k + 1)})
F = fourier_transform(f, 3)
print("  inversion error:", inverse_fourier(F).distance(f))
print("  Plancherel:", plancherel_norm(F), "vs", l2_norm_squared(f, 6))

h = BandLimitedFunction.character(2) + BandLimitedFunction.matrix_element(1, 0, 1)
C = fourier_transform(convolve(f, h), 3)
H = fourier_transform(h, 3)
print("  convolution error against the reversed product h~ f~:", C.distance(H @ F))
print("  the delta approximant sum (k+1) chi_k acts as the identity:",
      convolve(f, BandLimitedFunction.delta_approximant(3)).distance(f))

print("\nU(2) Weyl integration of Schur polynomials:")
for p, q in [((1, 0), (1, 0)), ((2, 0), (1, 1)), ((3, 1), (3, 1))]:
    val = weyl_integrate_torus_class(lambda t: schur_polynomial(p, t) * np.conj(schur_polynomial(q, t)), 2)
    print(f"  <s{p}, s{q}> = {val.real:.12f}")

print("\nThe full verification battery:")
for r in run_battery():
    print(f"  {r.name:<30} {r.error:.2e}  {'PASS' if r.passed else 'FAIL'}")
