"""SU(2) elements, the representations Pi_k on binary forms, and Pi_2 : SU(2) -> SO(3).

An element is stored by its first row ``(a, b)`` of::

    g = [[ a,        b      ],
         [-conj(b),  conj(a)]]

``a`` and ``b`` may be numpy arrays of a common shape, in which case an
:class:`SU2Element` is a batch of group elements and every function here
works elementwise on the batch.

``Pi_k`` acts on homogeneous polynomials of degree ``k`` in the basis
vectors ``u, v`` of C^2 by linear substitution ``u -> g u``, ``v -> g v``,
so ``Pi_1(g) = g``. Matrices are written in the orthonormal basis
``e_j = sqrt(binom(k, j)) u^(k-j) v^j``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, sqrt

import numpy as np


@dataclass(frozen=True)
class SU2Element:
    a: np.ndarray | complex
    b: np.ndarray | complex

    def __post_init__(self):
        a = np.asarray(self.a, dtype=complex)
        b = np.asarray(self.b, dtype=complex)
        a, b = np.broadcast_arrays(a, b)
        norm = np.sqrt(np.abs(a) ** 2 + np.abs(b) ** 2)
        if np.any(norm == 0):
            raise ValueError("(a, b) = (0, 0) is not in SU(2)")
        object.__setattr__(self, "a", a / norm)
        object.__setattr__(self, "b", b / norm)

    @classmethod
    def identity(cls) -> "SU2Element":
        return cls(1.0, 0.0)

    @classmethod
    def diagonal(cls, phi) -> "SU2Element":
        """``diag(exp(i phi), exp(-i phi))``."""
        return cls(np.exp(1j * np.asarray(phi, dtype=float)), 0.0)

    @classmethod
    def from_matrix(cls, m) -> "SU2Element":
        m = np.asarray(m, dtype=complex)
        return cls(m[..., 0, 0], m[..., 0, 1])

    @classmethod
    def random(cls, rng: np.random.Generator, size=None) -> "SU2Element":
        """Haar-random element(s): a uniform point on the 3-sphere."""
        shape = (4,) if size is None else (*np.atleast_1d(size), 4)
        x = rng.standard_normal(shape)
        return cls(x[..., 0] + 1j * x[..., 1], x[..., 2] + 1j * x[..., 3])

    @property
    def shape(self) -> tuple[int, ...]:
        return self.a.shape

    def matrix(self) -> np.ndarray:
        a, b = self.a, self.b
        return np.stack(
            [np.stack([a, b], axis=-1), np.stack([-np.conj(b), np.conj(a)], axis=-1)],
            axis=-2,
        )

    def __mul__(self, other: "SU2Element") -> "SU2Element":
        a, b, c, d = self.a, self.b, other.a, other.b
        return SU2Element(a * c - b * np.conj(d), a * d + b * np.conj(c))

    def inverse(self) -> "SU2Element":
        return SU2Element(np.conj(self.a), -self.b)

    def reshape(self, *shape) -> "SU2Element":
        return SU2Element(self.a.reshape(*shape), self.b.reshape(*shape))

    def trace(self) -> np.ndarray:
        return 2 * self.a.real


@dataclass(frozen=True)
class RepMatrix:
    """``Pi_k(g)``; ``entries`` has shape ``(..., k+1, k+1)``."""

    k: int
    entries: np.ndarray

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.entries, dtype=dtype)


def su2_rep_matrix(k: int, g: SU2Element) -> RepMatrix:
    """Matrix of ``Pi_k(g)`` in the orthonormal monomial basis.

    Column ``j`` is the image of ``e_j``; expanding
    ``(a u - conj(b) v)^(k-j) (b u + conj(a) v)^j`` and collecting
    ``u^(k-i) v^i`` gives entry ``(i, j)``.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    a, b = g.a, g.b
    ac, mbc = np.conj(a), -np.conj(b)
    # powers[x][p] = x**p
    pw = {}
    for name, x in (("a", a), ("ac", ac), ("mbc", mbc), ("b", b)):
        pw[name] = [np.ones_like(x)]
        for _ in range(k):
            pw[name].append(pw[name][-1] * x)
    out = np.zeros(g.shape + (k + 1, k + 1), dtype=complex)
    for j in range(k + 1):
        for i in range(k + 1):
            acc = 0
            for r in range(max(0, i - j), min(k - j, i) + 1):
                s = i - r
                acc = acc + (
                    comb(k - j, r) * comb(j, s)
                    * pw["a"][k - j - r] * pw["mbc"][r] * pw["b"][j - s] * pw["ac"][s]
                )
            out[..., i, j] = acc * sqrt(comb(k, j) / comb(k, i))
    return RepMatrix(k, out)


def matrix_element(k: int, i: int, j: int, g: SU2Element) -> np.ndarray:
    """``t^k_ij(g) = (Pi_k(g) e_j, e_i)``."""
    return su2_rep_matrix(k, g).entries[..., i, j]


# Real basis of S^2 in which Pi_2 is the rotation matrix returned by su2_to_so3,
# as coordinates in the orthonormal basis (e_0, e_1, e_2) = (u^2, sqrt2 uv, v^2).
# Columns: -(u^2 + v^2)/2,  i u v,  (u^2 - v^2)/(2i).
SO3_BASIS = np.array(
    [
        [-0.5, 0.0, -0.5j],
        [0.0, 1j / sqrt(2), 0.0],
        [-0.5, 0.0, 0.5j],
    ]
)


def su2_to_so3(g: SU2Element) -> np.ndarray:
    """Rotation matrix of ``Pi_2(g)`` acting on the real 3-space spanned by ``SO3_BASIS``.

    A surjective homomorphism onto SO(3) with kernel ``{+1, -1}``.
    """
    a, b = g.a, g.b
    ab, abc = a * b, a * np.conj(b)
    a2, b2 = a * a, b * b
    rows = [
        [(a2 + b2).real, 2 * ab.imag, (b2 - a2).imag],
        [2 * abc.imag, np.abs(a) ** 2 - np.abs(b) ** 2, 2 * abc.real],
        [(a2 + b2).imag, -2 * ab.real, (a2 - b2).real],
    ]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)
