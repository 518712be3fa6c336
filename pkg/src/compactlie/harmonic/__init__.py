"""Harmonic analysis on SU(2) and U(n): representation matrices, Haar quadrature, Fourier transform."""

from .battery import CheckResult, run_battery
from .fourier import (
    BandLimitedFunction,
    FourierCoefficients,
    convolve,
    fourier_transform,
    inverse_fourier,
    l2_norm_squared,
    plancherel_norm,
)
from .quadrature import (
    DEFAULT_RESOLUTION,
    complete_homogeneous,
    haar_integrate_su2,
    matrix_element_inner,
    schur_polynomial,
    su2_nodes,
    weyl_integrate_torus_class,
)
from .su2 import SO3_BASIS, RepMatrix, SU2Element, matrix_element, su2_rep_matrix, su2_to_so3

__all__ = [
    "BandLimitedFunction",
    "CheckResult",
    "DEFAULT_RESOLUTION",
    "FourierCoefficients",
    "RepMatrix",
    "SO3_BASIS",
    "SU2Element",
    "complete_homogeneous",
    "convolve",
    "fourier_transform",
    "haar_integrate_su2",
    "inverse_fourier",
    "l2_norm_squared",
    "matrix_element",
    "matrix_element_inner",
    "plancherel_norm",
    "run_battery",
    "schur_polynomial",
    "su2_nodes",
    "su2_rep_matrix",
    "su2_to_so3",
    "weyl_integrate_torus_class",
]
