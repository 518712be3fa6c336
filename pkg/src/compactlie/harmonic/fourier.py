"""Non-commutative Fourier analysis on SU(2) for band-limited functions.

Transform and convolution follow the usual compact-group definitions::

    f~(k)       = integral f(g^-1) Pi_k(g) dg
    (f1 * f2)(h) = integral f1(h g) f2(g^-1) dg

With those definitions ``(f1 * f2)~ = f2~ @ f1~`` (note the order), the
inversion formula is ``f(g) = sum_k (k+1) tr(f~(k) Pi_k(g))`` and the
Plancherel norm is ``sum_k (k+1) tr(f~(k) f~(k)^*)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .quadrature import haar_integrate_su2, su2_nodes
from .su2 import SU2Element, su2_rep_matrix


@dataclass
class BandLimitedFunction:
    """``g -> sum c[k, i, j] t^k_ij(g)`` for finitely many ``(k, i, j)``."""

    coefficients: dict[tuple[int, int, int], complex] = field(default_factory=dict)

    def __post_init__(self):
        for k, i, j in self.coefficients:
            if not (0 <= i <= k and 0 <= j <= k):
                raise ValueError(f"index ({k}, {i}, {j}) out of range")

    @classmethod
    def matrix_element(cls, k: int, i: int, j: int, coef: complex = 1.0) -> "BandLimitedFunction":
        return cls({(k, i, j): complex(coef)})

    @classmethod
    def character(cls, k: int) -> "BandLimitedFunction":
        return cls({(k, i, i): 1.0 + 0j for i in range(k + 1)})

    @classmethod
    def constant(cls, c: complex = 1.0) -> "BandLimitedFunction":
        return cls({(0, 0, 0): complex(c)})

    @classmethod
    def delta_approximant(cls, kmax: int) -> "BandLimitedFunction":
        """``sum_{k <= kmax} (k+1) chi_k``: acts as the identity under convolution up to band ``kmax``."""
        return cls({(k, i, i): complex(k + 1) for k in range(kmax + 1) for i in range(k + 1)})

    @property
    def kmax(self) -> int:
        return max((k for k, _, _ in self.coefficients), default=0)

    def blocks(self) -> dict[int, np.ndarray]:
        """Coefficients grouped as matrices ``C_k`` with ``f(g) = sum_k sum_ij C_k[i,j] Pi_k(g)[i,j]``."""
        out: dict[int, np.ndarray] = {}
        for (k, i, j), c in self.coefficients.items():
            out.setdefault(k, np.zeros((k + 1, k + 1), dtype=complex))[i, j] += c
        return out

    def __call__(self, g: SU2Element) -> np.ndarray:
        total = np.zeros(g.shape, dtype=complex)
        for k, C in self.blocks().items():
            total = total + np.einsum("...ij,ij->...", su2_rep_matrix(k, g).entries, C)
        return total

    def __add__(self, other: "BandLimitedFunction") -> "BandLimitedFunction":
        out = dict(self.coefficients)
        for key, c in other.coefficients.items():
            out[key] = out.get(key, 0) + c
        return BandLimitedFunction(out)

    def __rmul__(self, scalar: complex) -> "BandLimitedFunction":
        return BandLimitedFunction({key: scalar * c for key, c in self.coefficients.items()})

    def distance(self, other: "BandLimitedFunction") -> float:
        """Max coefficient difference (missing entries count as zero)."""
        keys = set(self.coefficients) | set(other.coefficients)
        return max(
            (abs(self.coefficients.get(k, 0) - other.coefficients.get(k, 0)) for k in keys),
            default=0.0,
        )

    def to_text(self) -> str:
        lines = [f"kmax {self.kmax}"]
        for (k, i, j), c in sorted(self.coefficients.items()):
            c = complex(c)
            lines.append(f"{k} {i} {j} {c.real!r} {c.imag!r}")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "BandLimitedFunction":
        coefs = {}
        for k, i, j, re, im in _parse_records(text):
            coefs[(k, i, j)] = complex(re, im)
        return cls(coefs)


@dataclass
class FourierCoefficients:
    """Map ``k -> f~(k)``, a ``(k+1) x (k+1)`` complex matrix."""

    blocks: dict[int, np.ndarray] = field(default_factory=dict)

    @property
    def kmax(self) -> int:
        return max(self.blocks, default=0)

    def __getitem__(self, k: int) -> np.ndarray:
        return self.blocks.get(k, np.zeros((k + 1, k + 1), dtype=complex))

    def __matmul__(self, other: "FourierCoefficients") -> "FourierCoefficients":
        keys = set(self.blocks) & set(other.blocks)
        return FourierCoefficients({k: self.blocks[k] @ other.blocks[k] for k in sorted(keys)})

    def distance(self, other: "FourierCoefficients") -> float:
        keys = set(self.blocks) | set(other.blocks)
        return max((float(np.abs(self[k] - other[k]).max()) for k in keys), default=0.0)

    def to_text(self) -> str:
        lines = [f"kmax {self.kmax}"]
        for k in sorted(self.blocks):
            B = self.blocks[k]
            for i in range(k + 1):
                for j in range(k + 1):
                    c = complex(B[i, j])
                    lines.append(f"{k} {i} {j} {c.real!r} {c.imag!r}")
        return "\n".join(lines)

    @classmethod
    def from_text(cls, text: str) -> "FourierCoefficients":
        blocks: dict[int, np.ndarray] = {}
        for k, i, j, re, im in _parse_records(text):
            blocks.setdefault(k, np.zeros((k + 1, k + 1), dtype=complex))[i, j] = complex(re, im)
        return cls(blocks)


def _parse_records(text: str):
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or lines[0][0] != "kmax":
        raise ValueError("missing 'kmax' header")
    for parts in lines[1:]:
        if len(parts) != 5:
            raise ValueError(f"expected 'k i j re im', got {' '.join(parts)!r}")
        yield int(parts[0]), int(parts[1]), int(parts[2]), float(parts[3]), float(parts[4])


def _default_resolution(f, kmax: int) -> int:
    fk = f.kmax if isinstance(f, BandLimitedFunction) else kmax
    return max(fk + kmax, 1)


def fourier_transform(
    f: Callable[[SU2Element], np.ndarray], kmax: int, resolution: int | None = None
) -> FourierCoefficients:
    """Blocks ``f~(k)`` for ``k <= kmax`` by Haar quadrature."""
    if resolution is None:
        resolution = _default_resolution(f, kmax)
    g, w = su2_nodes(resolution)
    fvals = np.asarray(f(g.inverse()))
    blocks = {}
    for k in range(kmax + 1):
        R = su2_rep_matrix(k, g).entries
        blocks[k] = np.einsum("n,n,nij->ij", w, fvals, R)
    return FourierCoefficients(blocks)


def inverse_fourier(F: FourierCoefficients) -> BandLimitedFunction:
    """``f(g) = sum_k (k+1) tr(F(k) Pi_k(g))``, i.e. ``c[k, i, j] = (k+1) F(k)[j, i]``."""
    coefs = {}
    for k, B in F.blocks.items():
        for i in range(k + 1):
            for j in range(k + 1):
                c = complex((k + 1) * B[j, i])
                if c != 0:
                    coefs[(k, i, j)] = c
    return BandLimitedFunction(coefs)


def plancherel_norm(F: FourierCoefficients) -> float:
    """``sum_k (k+1) tr(F(k) F(k)^*)``; equals the squared L^2 norm of the inverse transform."""
    return float(sum((k + 1) * np.trace(B @ B.conj().T).real for k, B in F.blocks.items()))


def l2_norm_squared(f: Callable[[SU2Element], np.ndarray], resolution: int) -> float:
    return float(haar_integrate_su2(lambda g: np.abs(f(g)) ** 2, resolution).real)


def convolve(
    f1: BandLimitedFunction, f2: BandLimitedFunction, resolution: int | None = None
) -> BandLimitedFunction:
    """``(f1 * f2)(h) = integral f1(h g) f2(g^-1) dg`` computed directly on the group.

    The convolution is evaluated on a quadrature grid in ``h`` (inner
    integral over ``g``) and projected onto matrix elements with
    ``c[k, i, j] = (k+1) <f1 * f2, t^k_ij>``. No Fourier transform is used.
    """
    if resolution is None:
        resolution = max(f1.kmax + f2.kmax, 1)
    g, wg = su2_nodes(resolution)
    h, wh = su2_nodes(resolution)
    f2_inv = f2(g.inverse())
    conv = np.empty(len(wh), dtype=complex)
    # chunk the h axis to bound memory
    step = max(1, 200_000 // len(wg))
    for start in range(0, len(wh), step):
        hh = SU2Element(h.a[start:start + step, None], h.b[start:start + step, None])
        prod = hh * SU2Element(g.a[None, :], g.b[None, :])
        conv[start:start + step] = f1(prod) @ (wg * f2_inv)
    kmax = min(f1.kmax, f2.kmax)
    coefs = {}
    for k in range(kmax + 1):
        R = su2_rep_matrix(k, h).entries
        P = (k + 1) * np.einsum("n,n,nij->ij", wh, conv, R.conj())
        for i in range(k + 1):
            for j in range(k + 1):
                coefs[(k, i, j)] = complex(P[i, j])
    return BandLimitedFunction(coefs)


def as_band_limited(coefs: Mapping[tuple[int, int, int], complex]) -> BandLimitedFunction:
    return BandLimitedFunction(dict(coefs))
