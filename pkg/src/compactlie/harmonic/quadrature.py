"""Deterministic Haar quadrature on SU(2) and Weyl integration over the torus of U(n).

SU(2) is parametrized as the 3-sphere::

    a = cos(psi) exp(i phi1),   b = sin(psi) exp(i phi2),   0 <= psi <= pi/2

with normalized Haar density ``2 cos(psi) sin(psi) dpsi dphi1 dphi2 / (2 pi)^2``.
Substituting ``s = sin(psi)^2`` makes the density uniform in ``s``. After
averaging over the phases a polynomial in ``a, conj(a), b, conj(b)`` of total
degree ``L`` becomes a polynomial of degree ``<= L/2`` in ``s``, so ``L + 1``
equispaced phase nodes per angle and ``L//2 + 1`` Gauss-Legendre nodes in
``s`` integrate it exactly.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Callable, Sequence

import numpy as np

from .su2 import SU2Element, matrix_element

DEFAULT_RESOLUTION = 24


@lru_cache(maxsize=32)
def _su2_nodes(resolution: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    if resolution < 0:
        raise ValueError("resolution must be >= 0")
    m = resolution + 1
    phi = 2 * np.pi * np.arange(m) / m
    x, w = np.polynomial.legendre.leggauss(resolution // 2 + 1)
    s = (x + 1) / 2
    w = w / 2
    S, P1, P2 = np.meshgrid(s, phi, phi, indexing="ij")
    W = np.broadcast_to(w[:, None, None], S.shape) / m**2
    a = np.sqrt(1 - S) * np.exp(1j * P1)
    b = np.sqrt(S) * np.exp(1j * P2)
    for arr in (a, b, W):
        arr.setflags(write=False)
    return a.ravel(), b.ravel(), np.ascontiguousarray(W).ravel()


def su2_nodes(resolution: int = DEFAULT_RESOLUTION) -> tuple[SU2Element, np.ndarray]:
    """Quadrature nodes (as one batched element) and weights summing to 1."""
    a, b, w = _su2_nodes(resolution)
    return SU2Element(a, b), w


def haar_integrate_su2(f: Callable[[SU2Element], np.ndarray], resolution: int = DEFAULT_RESOLUTION):
    """Integral of ``f`` over SU(2) against normalized Haar measure.

    ``f`` receives all nodes at once as a batched :class:`SU2Element` and
    returns an array whose leading axis runs over the nodes; any trailing
    axes are integrated independently. Exact for polynomial matrix-element
    integrands of total degree ``<= resolution``.
    """
    g, w = su2_nodes(resolution)
    vals = np.asarray(f(g))
    out = np.tensordot(w, vals, axes=(0, 0))
    return complex(out) if out.ndim == 0 else out


def matrix_element_inner(k1: int, i1: int, j1: int, k2: int, i2: int, j2: int, resolution: int | None = None) -> complex:
    """L^2(SU(2)) inner product ``<t^k1_i1j1, t^k2_i2j2>``; ``delta / (k1 + 1)`` by orthogonality."""
    for k, i, j in ((k1, i1, j1), (k2, i2, j2)):
        if not (0 <= i <= k and 0 <= j <= k):
            raise ValueError(f"index ({i}, {j}) out of range for k = {k}")
    if resolution is None:
        resolution = max(k1 + k2, 1)
    return haar_integrate_su2(
        lambda g: matrix_element(k1, i1, j1, g) * np.conj(matrix_element(k2, i2, j2, g)),
        resolution,
    )


# ---------------------------------------------------------------------------
# U(n)


@lru_cache(maxsize=32)
def _torus_nodes(n: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    theta = np.arange(m) / m
    grid = np.array(list(itertools.product(theta, repeat=n)))
    t = np.exp(2j * np.pi * grid)
    dens = np.ones(len(t))
    for i, j in itertools.combinations(range(n), 2):
        dens = dens * np.abs(t[:, i] - t[:, j]) ** 2
    w = dens / (factorial(n) * m**n)
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


def weyl_integrate_torus_class(
    f: Callable[[np.ndarray], np.ndarray], n: int, resolution: int = DEFAULT_RESOLUTION
) -> complex:
    """Integral of a central function over U(n) via its restriction to the diagonal torus.

    ``f`` receives an ``(N, n)`` array of eigenvalue tuples ``t_k = exp(2 pi i theta_k)``
    and must be symmetric in them. The integrand ``f * prod |t_i - t_j|^2 / n!``
    is summed on an equispaced grid with ``resolution + n`` points per angle,
    exact when ``f`` has degree below ``resolution`` in each variable.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    t, w = _torus_nodes(n, resolution + n)
    vals = np.asarray(f(t))
    return complex(np.tensordot(w, vals, axes=(0, 0)))


def complete_homogeneous(k: int, t: np.ndarray) -> np.ndarray:
    """``h_k(t_1, ..., t_n)`` for a batch ``t`` of shape ``(N, n)``."""
    N, n = t.shape
    if k < 0:
        return np.zeros(N, dtype=complex)
    # truncated series of prod_i 1 / (1 - t_i x); in-place update multiplies by one factor
    series = np.zeros((N, k + 1), dtype=complex)
    series[:, 0] = 1
    for i in range(n):
        for d in range(1, k + 1):
            series[:, d] += t[:, i] * series[:, d - 1]
    return series[:, k]


def schur_polynomial(partition: Sequence[int], t: np.ndarray) -> np.ndarray:
    """Schur polynomial ``s_partition(t)`` (the character of U(n) with that highest weight).

    Jacobi-Trudi: ``s_lam = det(h_{lam_i - i + j})``. Evaluated pointwise, so
    it is defined on the eigenvalue diagonal where the bialternant quotient is not.
    """
    t = np.atleast_2d(np.asarray(t, dtype=complex))
    lam = list(partition)
    n = t.shape[1]
    lam += [0] * (n - len(lam))
    if any(x < y for x, y in zip(lam, lam[1:])) or lam[-1] < 0:
        raise ValueError(f"not a partition: {partition}")
    length = max((i + 1 for i, x in enumerate(lam) if x), default=0)
    if length == 0:
        return np.ones(t.shape[0], dtype=complex)
    top = max(lam)
    hs = {k: complete_homogeneous(k, t) for k in range(top + length)}
    zero = np.zeros(t.shape[0], dtype=complex)
    M = np.empty((t.shape[0], length, length), dtype=complex)
    for i in range(length):
        for j in range(length):
            k = lam[i] - i + j
            M[:, i, j] = hs[k] if k >= 0 else zero
    return np.linalg.det(M)
