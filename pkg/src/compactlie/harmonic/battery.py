"""The harmonic-analysis verification battery behind ``verify-harmonic``."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .fourier import (
    BandLimitedFunction,
    convolve,
    fourier_transform,
    inverse_fourier,
    l2_norm_squared,
    plancherel_norm,
)
from .quadrature import (
    DEFAULT_RESOLUTION,
    haar_integrate_su2,
    schur_polynomial,
    su2_nodes,
    weyl_integrate_torus_class,
)
from .su2 import SU2Element, su2_rep_matrix, su2_to_so3


@dataclass(frozen=True)
class CheckResult:
    name: str
    error: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.error <= self.tolerance)


def random_band_limited(rng: np.random.Generator, kmax: int) -> BandLimitedFunction:
    coefs = {}
    for k in range(kmax + 1):
        for i in range(k + 1):
            for j in range(k + 1):
                re, im = rng.standard_normal(2)
                coefs[(k, i, j)] = complex(re, im)
    return BandLimitedFunction(coefs)


def _chi(k: int) -> Callable[[SU2Element], np.ndarray]:
    return lambda g: np.trace(su2_rep_matrix(k, g).entries, axis1=-2, axis2=-1)


def check_normalization(resolution: int) -> float:
    return abs(haar_integrate_su2(lambda g: np.ones(g.shape), resolution) - 1)


def _gram(columns: np.ndarray, weights: np.ndarray) -> np.ndarray:
    """``G[p, q] = integral of col_p * conj(col_q)`` for node values ``columns[node, p]``."""
    return (columns * weights[:, None]).T @ np.conj(columns)


def check_matrix_orthogonality(resolution: int, kmax: int = 4) -> float:
    """All pairwise inner products ``<t^k_ij, t^l_mn>`` for ``k, l <= kmax`` at once."""
    g, w = su2_nodes(resolution)
    cols, norms = [], []
    for k in range(kmax + 1):
        R = su2_rep_matrix(k, g).entries.reshape(len(w), -1)
        cols.append(R)
        norms.extend([1 / (k + 1)] * R.shape[1])
    G = _gram(np.concatenate(cols, axis=1), w)
    return float(np.abs(G - np.diag(norms)).max())


def check_character_orthonormality(resolution: int, kmax: int = 6) -> float:
    g, w = su2_nodes(resolution)
    chars = np.stack([_chi(k)(g) for k in range(kmax + 1)], axis=1)
    return float(np.abs(_gram(chars, w) - np.eye(kmax + 1)).max())


def check_weyl_integration(resolution: int, n: int = 2, max_part: int = 3) -> float:
    parts = [p for p in itertools.product(range(max_part + 1), repeat=n)
             if all(x >= y for x, y in zip(p, p[1:]))]
    err = abs(weyl_integrate_torus_class(lambda t: np.ones(len(t)), n, resolution) - 1)
    for p in parts:
        for q in parts:
            val = weyl_integrate_torus_class(
                lambda t: schur_polynomial(p, t) * np.conj(schur_polynomial(q, t)), n, resolution
            )
            err = max(err, abs(val - (p == q)))
    return err


def check_invariance(resolution: int, rng: np.random.Generator, kmax: int = 4, trials: int = 5) -> float:
    err = 0.0
    for _ in range(trials):
        f = random_band_limited(rng, kmax)
        h = SU2Element.random(rng)
        base = haar_integrate_su2(f, resolution)
        left = haar_integrate_su2(lambda g: f(h * g), resolution)
        right = haar_integrate_su2(lambda g: f(g * h), resolution)
        inv = haar_integrate_su2(lambda g: f(g.inverse()), resolution)
        err = max(err, abs(left - base), abs(right - base), abs(inv - base))
    return err


def check_homomorphism(rng: np.random.Generator, kmax: int = 6, pairs: int = 100) -> float:
    g = SU2Element.random(rng, pairs)
    h = SU2Element.random(rng, pairs)
    err = 0.0
    for k in range(kmax + 1):
        lhs = su2_rep_matrix(k, g * h).entries
        rhs = su2_rep_matrix(k, g).entries @ su2_rep_matrix(k, h).entries
        err = max(err, float(np.abs(lhs - rhs).max()))
    return err


def check_unitarity(rng: np.random.Generator, kmax: int = 6, samples: int = 100) -> float:
    g = SU2Element.random(rng, samples)
    err = 0.0
    for k in range(kmax + 1):
        R = su2_rep_matrix(k, g).entries
        gram = np.conj(np.swapaxes(R, -1, -2)) @ R
        err = max(err, float(np.abs(gram - np.eye(k + 1)).max()))
    return err


def check_inversion(resolution: int, rng: np.random.Generator, kmax: int = 4) -> float:
    f = random_band_limited(rng, kmax)
    return inverse_fourier(fourier_transform(f, kmax, resolution)).distance(f)


def check_plancherel(resolution: int, rng: np.random.Generator, kmax: int = 4) -> float:
    f = random_band_limited(rng, kmax)
    return abs(plancherel_norm(fourier_transform(f, kmax, resolution)) - l2_norm_squared(f, resolution))


def check_convolution(resolution: int, rng: np.random.Generator, kmax: int = 4) -> float:
    """``(f1 * f2)~ = f2~ @ f1~`` for random band-limited inputs."""
    f1, f2 = random_band_limited(rng, kmax), random_band_limited(rng, kmax)
    # the double integral is exact already at degree 2*kmax; larger grids only cost time
    res = min(resolution, 2 * kmax)
    c = convolve(f1, f2, res)
    lhs = fourier_transform(c, kmax, resolution)
    rhs = fourier_transform(f2, kmax, resolution) @ fourier_transform(f1, kmax, resolution)
    return lhs.distance(rhs)


def check_delta(resolution: int, rng: np.random.Generator, kmax: int = 4) -> float:
    f = random_band_limited(rng, kmax)
    res = min(resolution, 2 * kmax)
    delta = BandLimitedFunction.delta_approximant(kmax)
    return max(convolve(f, delta, res).distance(f), convolve(delta, f, res).distance(f))


def check_so3(rng: np.random.Generator, samples: int = 100) -> float:
    g = SU2Element.random(rng, samples)
    R = su2_to_so3(g)
    orth = np.abs(np.swapaxes(R, -1, -2) @ R - np.eye(3)).max()
    det = np.abs(np.linalg.det(R) - 1).max()
    kernel = np.abs(su2_to_so3(SU2Element(-1.0, 0.0)) - np.eye(3)).max()
    return float(max(orth, det, kernel))


def run_battery(resolution: int = DEFAULT_RESOLUTION, seed: int = 0) -> list[CheckResult]:
    """Run every check; the default resolution integrates all test integrands exactly."""
    rng = np.random.default_rng(seed)
    return [
        CheckResult("haar-normalization", check_normalization(resolution), 1e-12),
        CheckResult("matrix-element-orthogonality", check_matrix_orthogonality(resolution), 1e-8),
        CheckResult("character-orthonormality", check_character_orthonormality(resolution), 1e-8),
        CheckResult("weyl-integration-U2", check_weyl_integration(resolution), 1e-8),
        CheckResult("haar-invariance", check_invariance(resolution, rng), 1e-8),
        CheckResult("rep-homomorphism", check_homomorphism(rng), 1e-10),
        CheckResult("rep-unitarity", check_unitarity(rng), 1e-10),
        CheckResult("fourier-inversion", check_inversion(resolution, rng), 1e-9),
        CheckResult("plancherel", check_plancherel(resolution, rng), 1e-9),
        CheckResult("convolution-product", check_convolution(resolution, rng), 1e-9),
        CheckResult("delta-expansion", check_delta(resolution, rng), 1e-9),
        CheckResult("so3-homomorphism", check_so3(rng), 1e-10),
    ]
