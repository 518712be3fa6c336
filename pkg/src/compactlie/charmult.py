"""Characters and weight multiplicities of irreducible representations.

Production multiplicities come from Freudenthal's recursion; the Kostant
multiplicity formula is kept as an independent route and is what the test
suite checks Freudenthal against.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import DomainError, ResourceError, SingularityError
from .rootsys import RootSystem, Weight
from .weyl import DEFAULT_ORBIT_CAP, _orbit_from_dominant, dominant_and_parity, is_dominant, signed_orbit

DEFAULT_DIM_CAP = 10**6


class FormalCharacter(dict):
    """Finite map weight -> positive multiplicity (restriction of a character to T).

    Keys are weight tuples in fundamental-weight coordinates. Zero
    multiplicities are never stored.
    """

    @property
    def dimension(self) -> int:
        return sum(self.values())

    def __mul__(self, other: "FormalCharacter") -> "FormalCharacter":
        return character_product(self, other)

    def sorted_items(self):
        return sorted(self.items())

    def to_text(self) -> str:
        """One line ``mult × (c1,...,cr)`` per weight, weights in lexicographic order."""
        return "\n".join(f"{m} × ({','.join(map(str, w))})" for w, m in self.sorted_items())

    @classmethod
    def from_text(cls, text: str) -> "FormalCharacter":
        out = cls()
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            mult, _, rest = line.partition("×")
            coords = rest.strip().strip("()")
            out[tuple(int(c) for c in coords.split(","))] = int(mult)
        return out


def _check_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = tuple(int(c) for c in lam)
    if len(lam) != rs.rank:
        raise DomainError(f"weight {lam} has wrong length for rank {rs.rank}")
    if not is_dominant(lam):
        raise DomainError(f"weight {lam} is not dominant")
    return lam


def _shift(a: Sequence[int], b: Sequence[int], k: int = 1) -> Weight:
    return tuple(x + k * y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# Dimension


def _coroot_pairings(rs: RootSystem) -> list[tuple[tuple[int, ...], int]]:
    """For each positive root ``alpha = sum c_i alpha_i``: weights ``c_i d_i`` and ``d_alpha``.

    ``<alpha^vee, lam> = sum_i c_i d_i lam_i / d_alpha`` with ``d_alpha = (alpha, alpha)/2``.
    """
    d = rs.symmetrizers
    out = []
    for r in rs.positive_roots:
        out.append((tuple(c * di for c, di in zip(r, d)), rs.root_norm(r) // 2))
    return out


def weyl_dim(rs: RootSystem, lam: Sequence[int]) -> int:
    """Dimension of ``L(lam)`` by the Weyl dimension formula, in exact arithmetic."""
    lam = _check_dominant(rs, lam)
    shifted = _shift(lam, rs.rho)
    num = den = 1
    for coef, _ in _coroot_pairings(rs):
        # d_alpha cancels between numerator and denominator.
        num *= sum(c * x for c, x in zip(coef, shifted))
        den *= sum(coef)
    q = Fraction(num, den)
    assert q.denominator == 1
    return int(q)


# ---------------------------------------------------------------------------
# Kostant


class _KostantCounter:
    """Memoized ``K(tau)`` for one root system; lives for one call tree."""

    def __init__(self, rs: RootSystem):
        self.rank = rs.rank
        # Highest roots first, so the recursion ends on the simple roots.
        self.roots = sorted(rs.positive_roots, key=lambda r: (-sum(r), r))
        self.n_nonsimple = len(self.roots) - rs.rank
        self.memo: dict[tuple[Weight, int], int] = {}

    def __call__(self, tau: Sequence[int]) -> int:
        tau = tuple(tau)
        if any(c < 0 for c in tau):
            return 0
        return self._count(tau, 0)

    def _count(self, tau: Weight, i: int) -> int:
        if i == self.n_nonsimple:
            # Only simple roots left: exactly one way for any tau >= 0.
            return 1
        key = (tau, i)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        beta = self.roots[i]
        total = 0
        cur = tau
        while all(c >= 0 for c in cur):
            total += self._count(cur, i + 1)
            cur = tuple(c - b for c, b in zip(cur, beta))
        self.memo[key] = total
        return total


def kostant_partition(rs: RootSystem, tau: Sequence[int]) -> int:
    """Number of ways to write ``tau`` (simple-root coordinates) as a sum of positive roots."""
    if len(tau) != rs.rank:
        raise DomainError(f"expected {rs.rank} coordinates, got {len(tau)}")
    return _KostantCounter(rs)(tau)


def _root_coords_int(rs: RootSystem, w: Sequence[int]) -> Weight | None:
    """Simple-root coordinates of ``w`` if it lies in the root lattice, else ``None``."""
    adj, det = rs.adjugate, rs.determinant
    n = rs.rank
    out = []
    for j in range(n):
        s = sum(w[i] * adj[i][j] for i in range(n))
        if s % det:
            return None
        out.append(s // det)
    return tuple(out)


def kostant_multiplicities(
    rs: RootSystem, lam: Sequence[int], mus: Iterable[Sequence[int]], cap: int = DEFAULT_ORBIT_CAP
) -> dict[Weight, int]:
    """Kostant multiplicity formula for many weights, sharing one orbit and one memo table.

    ``mult(mu) = sum_w det(w) K(w(lam + rho) - rho - mu)``; the sum over W
    runs over the signed orbit of the regular weight ``lam + rho``.
    """
    lam = _check_dominant(rs, lam)
    terms = signed_orbit(rs, _shift(lam, rs.rho), cap=cap)
    K = _KostantCounter(rs)
    rho = rs.rho
    out = {}
    for mu in mus:
        mu = tuple(mu)
        if _root_coords_int(rs, _shift(lam, mu, -1)) is None:
            out[mu] = 0
            continue
        total = 0
        for nu, sign in terms:
            tau = _root_coords_int(rs, tuple(a - b - c for a, b, c in zip(nu, rho, mu)))
            total += sign * K(tau)
        out[mu] = total
    return out


def mult_kostant(rs: RootSystem, lam: Sequence[int], mu: Sequence[int], cap: int = DEFAULT_ORBIT_CAP) -> int:
    """Multiplicity of ``mu`` in ``L(lam)`` by the Kostant multiplicity formula."""
    mu = tuple(mu)
    return kostant_multiplicities(rs, lam, [mu], cap=cap)[mu]


# ---------------------------------------------------------------------------
# Freudenthal


def dominant_weights_below(rs: RootSystem, lam: Sequence[int]) -> list[Weight]:
    """Dominant weights ``mu <= lam`` in the dominance order.

    Any two comparable dominant weights are joined by a chain of dominant
    weights differing by positive roots, so subtracting positive roots from
    known dominant weights finds them all.
    """
    lam = tuple(lam)
    roots_w = rs.positive_roots_weight
    seen = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for a in roots_w:
            nu = _shift(mu, a, -1)
            if nu not in seen and is_dominant(nu):
                seen.add(nu)
                stack.append(nu)
    return sorted(seen, key=lambda m: (rs.height(_shift(lam, m, -1)), m))


@lru_cache(maxsize=4096)
def _dominant_multiplicities(rs: RootSystem, lam: Weight) -> tuple[tuple[Weight, int], ...]:
    rho = rs.rho
    roots_w = rs.positive_roots_weight
    form = rs.scaled_form
    lam_rho = _shift(lam, rho)
    top = form(lam_rho, lam_rho)
    mult: dict[Weight, int] = {}
    dom_cache: dict[Weight, Weight] = {}

    def lookup(nu):
        d = dom_cache.get(nu)
        if d is None:
            d = dominant_and_parity(rs, nu)[0]
            dom_cache[nu] = d
        return mult.get(d, 0)

    order = dominant_weights_below(rs, lam)
    for mu in order:
        if mu == lam:
            mult[mu] = 1
            continue
        num = 0
        for a in roots_w:
            k = 1
            while True:
                nu = _shift(mu, a, k)
                m = lookup(nu)
                if m == 0:
                    break
                num += m * form(nu, a)
                k += 1
        mu_rho = _shift(mu, rho)
        den = top - form(mu_rho, mu_rho)
        q, r = divmod(2 * num, den)
        assert r == 0 and q >= 0, (lam, mu, num, den)
        if q:
            mult[mu] = q
    return tuple(sorted(mult.items()))


def dominant_character(rs: RootSystem, lam: Sequence[int]) -> dict[Weight, int]:
    """Multiplicities of the dominant weights of ``L(lam)`` (Freudenthal).

    Never expands Weyl orbits, so no dimension cap applies.
    """
    lam = _check_dominant(rs, lam)
    return dict(_dominant_multiplicities(rs, lam))


def formal_character(rs: RootSystem, lam: Sequence[int], cap: int = DEFAULT_DIM_CAP) -> FormalCharacter:
    """Complete weight diagram of ``L(lam)`` with multiplicities (Freudenthal recursion)."""
    lam = _check_dominant(rs, lam)
    dim = weyl_dim(rs, lam)
    if dim > cap:
        raise ResourceError(f"dim L{lam} = {dim} exceeds cap of {cap}")
    out = FormalCharacter()
    for mu, m in dominant_character(rs, lam).items():
        for nu in _orbit_from_dominant(rs, mu, DEFAULT_ORBIT_CAP):
            out[nu] = m
    return out


def character_product(chi1: Mapping[Weight, int], chi2: Mapping[Weight, int]) -> FormalCharacter:
    """Pointwise product of two characters, i.e. convolution of their weight maps."""
    if not chi1 or not chi2:
        return FormalCharacter()
    if len(chi1) * len(chi2) < 4096:
        out: dict[Weight, int] = {}
        for w1, m1 in chi1.items():
            for w2, m2 in chi2.items():
                w = _shift(w1, w2)
                out[w] = out.get(w, 0) + m1 * m2
        return FormalCharacter({w: m for w, m in out.items() if m})
    from scipy.signal import convolve, fftconvolve

    a, lo_a = _dense(chi1)
    b, lo_b = _dense(chi2)
    c = fftconvolve(a.astype(float), b.astype(float))
    rounded = np.rint(c)
    if np.abs(c - rounded).max() < 0.25 and rounded.max() < 2.0**50:
        c = rounded.astype(np.int64)
    else:
        c = convolve(a, b, method="direct")
    idx = np.argwhere(c) + (lo_a + lo_b)
    vals = c[c != 0]
    return FormalCharacter(zip(map(tuple, idx.tolist()), vals.tolist()))


def _dense(chi: Mapping[Weight, int]) -> tuple[np.ndarray, np.ndarray]:
    pts = np.array(list(chi.keys()), dtype=np.int64)
    lo = pts.min(axis=0)
    shape = tuple(pts.max(axis=0) - lo + 1)
    arr = np.zeros(shape, dtype=np.int64)
    arr[tuple((pts - lo).T)] = np.fromiter(chi.values(), dtype=np.int64, count=len(chi))
    return arr, lo


# ---------------------------------------------------------------------------
# Evaluation on the torus


def _exp_sum(weights: Sequence[Weight], coeffs: Sequence[int], t: np.ndarray) -> np.ndarray:
    W = np.array(weights, dtype=float)
    c = np.array(coeffs, dtype=float)
    return np.exp(1j * (t @ W.T)) @ c


def eval_character(rs: RootSystem, lam: Sequence[int], t, method: str = "weight-sum"):
    """Character of ``L(lam)`` at the torus point with angles ``t``.

    ``e_mu(t) = exp(i sum_j mu_j t_j)`` in fundamental-weight coordinates.
    ``t`` may be a single point of shape ``(rank,)`` or a batch ``(N, rank)``.

    ``method="weight-sum"`` sums multiplicities times ``e_mu``;
    ``method="weyl-quotient"`` evaluates ``A_{lam+rho} / A_rho``.
    """
    lam = _check_dominant(rs, lam)
    t = np.asarray(t, dtype=float)
    single = t.ndim == 1
    t = np.atleast_2d(t)
    if t.shape[-1] != rs.rank:
        raise DomainError(f"expected {rs.rank} angles, got {t.shape[-1]}")
    if method == "weight-sum":
        chi = formal_character(rs, lam)
        items = list(chi.items())
        val = _exp_sum([w for w, _ in items], [m for _, m in items], t)
    elif method == "weyl-quotient":
        num = signed_orbit(rs, _shift(lam, rs.rho))
        den = signed_orbit(rs, rs.rho)
        A_num = _exp_sum([w for w, _ in num], [s for _, s in num], t)
        A_den = _exp_sum([w for w, _ in den], [s for _, s in den], t)
        if np.any(np.abs(A_den) < 1e-12):
            raise SingularityError(
                "Weyl denominator vanishes at this torus point; use method='weight-sum'"
            )
        val = A_num / A_den
    else:
        raise DomainError(f"unknown method {method!r}")
    return complex(val[0]) if single else val


GENERIC_DENOMINATOR = 0.1


def generic_torus_points(
    rs: RootSystem, n: int, rng: np.random.Generator, min_denominator: float = GENERIC_DENOMINATOR
) -> np.ndarray:
    """``n`` uniform random torus angles with ``|A_rho(t)| >= min_denominator``.

    Near a wall of the Weyl chamber the quotient ``A_{lam+rho} / A_rho`` loses
    digits in proportion to ``1 / |A_rho|``; rejection keeps the points generic.
    """
    out: list[np.ndarray] = []
    count = 0
    while count < n:
        t = rng.uniform(0, 2 * np.pi, size=(2 * n, rs.rank))
        keep = t[np.abs(weyl_denominator(rs, t)) >= min_denominator]
        out.append(keep)
        count += len(keep)
    return np.concatenate(out)[:n]


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """Highest weight of the dual representation, ``-w0(lam)``."""
    lam = _check_dominant(rs, lam)
    return dominant_and_parity(rs, tuple(-c for c in lam))[0]


def weyl_denominator(rs: RootSystem, t):
    """``A_rho`` at ``t`` (one point or a batch); zero exactly on the walls of the torus."""
    den = signed_orbit(rs, rs.rho)
    t = np.asarray(t, dtype=float)
    vals = _exp_sum([w for w, _ in den], [s for _, s in den], np.atleast_2d(t))
    return complex(vals[0]) if t.ndim == 1 else vals


__all__ = [
    "FormalCharacter",
    "character_product",
    "dominant_character",
    "dominant_weights_below",
    "dual_weight",
    "eval_character",
    "formal_character",
    "generic_torus_points",
    "kostant_multiplicities",
    "kostant_partition",
    "mult_kostant",
    "weyl_denominator",
    "weyl_dim",
]
