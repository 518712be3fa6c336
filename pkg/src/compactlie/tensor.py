"""Decomposing tensor products and characters into irreducibles."""

from __future__ import annotations

from typing import Mapping, Sequence

from .charmult import (
    DEFAULT_DIM_CAP,
    FormalCharacter,
    _check_dominant,
    dominant_character,
    weyl_dim,
)
from .errors import DomainError, ResourceError
from .rootsys import RootSystem, Weight
from .weyl import _orbit_from_dominant, dominant_and_parity, is_dominant


class Decomposition(dict):
    """Map dominant highest weight -> multiplicity of that irreducible summand."""

    def dimension(self, rs: RootSystem) -> int:
        return sum(m * weyl_dim(rs, lam) for lam, m in self.items())

    def sorted_items(self):
        return sorted(self.items())

    def to_text(self) -> str:
        return "\n".join(f"{m} × ({','.join(map(str, w))})" for w, m in self.sorted_items())

    @classmethod
    def from_text(cls, text: str) -> "Decomposition":
        return cls(FormalCharacter.from_text(text))


def _full_character(rs: RootSystem, lam: Weight, cap: int) -> list[tuple[Weight, int]]:
    dim = weyl_dim(rs, lam)
    if dim > cap:
        raise ResourceError(f"dim L{lam} = {dim} exceeds cap of {cap}")
    out = []
    for mu, m in dominant_character(rs, lam).items():
        out.extend((nu, m) for nu in _orbit_from_dominant(rs, mu, 10**7))
    return out


def tensor_decompose(
    rs: RootSystem, lam: Sequence[int], mu: Sequence[int], cap: int = DEFAULT_DIM_CAP
) -> Decomposition:
    """Klimyk's formula for ``L(lam) ⊗ L(mu)``.

    For each weight ``nu`` of the smaller factor, ``big + nu + rho`` is folded
    into the dominant chamber; wall cases contribute nothing, the rest
    contribute ``sign * mult(nu)`` to the summand ``dominant - rho``.
    """
    lam = _check_dominant(rs, lam)
    mu = _check_dominant(rs, mu)
    big, small = (lam, mu) if weyl_dim(rs, lam) >= weyl_dim(rs, mu) else (mu, lam)
    rho = rs.rho
    acc: dict[Weight, int] = {}
    shifted = tuple(b + r for b, r in zip(big, rho))
    for nu, m in _full_character(rs, small, cap):
        dom, sign, wall = dominant_and_parity(rs, tuple(s + x for s, x in zip(shifted, nu)))
        if wall:
            continue
        key = tuple(c - 1 for c in dom)
        acc[key] = acc.get(key, 0) + sign * m
    out = Decomposition()
    for key, m in acc.items():
        if m < 0:
            raise AssertionError(f"negative Klimyk multiplicity {m} at {key}")
        if m:
            out[key] = m
    return out


def _scaled_height(rs: RootSystem, w: Weight) -> int:
    """``det(A)`` times the height of ``w`` (sum of its simple-root coordinates)."""
    adj = rs.adjugate
    return sum(w[i] * sum(adj[i]) for i in range(rs.rank))


def decompose_character(rs: RootSystem, chi: Mapping[Weight, int]) -> Decomposition:
    """Write a W-invariant character as a sum of irreducible characters.

    Greedy peel on the dominant part: the multiplicity of a dominance-maximal
    dominant weight ``nu`` is the coefficient of ``L(nu)``; subtract its
    character and repeat. A weight of greatest height is always
    dominance-maximal; among those the lexicographically largest is taken.
    """
    dom_part: dict[Weight, int] = {}
    for w, m in chi.items():
        w = tuple(w)
        if m < 0:
            raise DomainError(f"negative multiplicity {m} at {w}")
        if m == 0:
            continue
        if len(w) != rs.rank:
            raise DomainError(f"weight {w} has wrong length for rank {rs.rank}")
        d = dominant_and_parity(rs, w)[0]
        if chi.get(d, 0) != m:
            raise DomainError(f"character is not Weyl-invariant at {w}")
        if is_dominant(w):
            dom_part[w] = m
    mass = sum(m for m in chi.values())
    if sum(m * len(_orbit_from_dominant(rs, w, 10**7)) for w, m in dom_part.items()) != mass:
        raise DomainError("character is not Weyl-invariant: orbits are incomplete")
    out = Decomposition()
    while dom_part:
        top = max(dom_part, key=lambda nu: (_scaled_height(rs, nu), nu))
        k = dom_part[top]
        out[top] = k
        for w, m in dominant_character(rs, top).items():
            left = dom_part.get(w, 0) - k * m
            if left < 0:
                raise DomainError("not a nonnegative integer combination of irreducible characters")
            if left:
                dom_part[w] = left
            else:
                dom_part.pop(w, None)
    return out
