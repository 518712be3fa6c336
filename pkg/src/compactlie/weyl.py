"""The Weyl group as the group generated by simple reflections.

Group elements are never materialized; everything downstream needs only
orbits, signs and dominant representatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import DomainError, ResourceError
from .rootsys import RootSystem, Weight

DEFAULT_ORBIT_CAP = 10**7


@dataclass(frozen=True)
class OrbitResult:
    elements: tuple[Weight, ...]
    size: int

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return self.size

    def __contains__(self, w):
        return tuple(w) in set(self.elements)


@dataclass(frozen=True)
class DominantProjection:
    """Result of folding a weight into the dominant chamber.

    ``word`` lists the (0-based) simple reflections applied, in order; their
    product maps the input to ``dominant``. ``stabilized`` is true when the
    input lies on a chamber wall, i.e. has a non-trivial stabilizer in W.
    """

    dominant: Weight
    sign: int
    length: int
    stabilized: bool
    word: tuple[int, ...]


def _reflect(A, i: int, lam: Sequence[int]) -> Weight:
    c = lam[i]
    if c == 0:
        return tuple(lam)
    row = A[i]
    return tuple(x - c * a for x, a in zip(lam, row))


def simple_reflection(rs: RootSystem, i: int, lam: Sequence[int]) -> Weight:
    """Apply ``s_i`` (0-based node index) to a weight: ``lam - <alpha_i^vee, lam> alpha_i``."""
    if not 0 <= i < rs.rank:
        raise DomainError(f"node index {i} out of range for rank {rs.rank}")
    if len(lam) != rs.rank:
        raise DomainError(f"weight {tuple(lam)} has wrong length for rank {rs.rank}")
    return _reflect(rs.cartan, i, lam)


def to_dominant(rs: RootSystem, lam: Sequence[int]) -> DominantProjection:
    """Fold ``lam`` into the dominant chamber, always reflecting at the lowest negative coordinate."""
    A = rs.cartan
    cur = tuple(lam)
    if len(cur) != rs.rank:
        raise DomainError(f"weight {cur} has wrong length for rank {rs.rank}")
    word = []
    while True:
        i = next((k for k, c in enumerate(cur) if c < 0), None)
        if i is None:
            break
        cur = _reflect(A, i, cur)
        word.append(i)
    return DominantProjection(
        dominant=cur,
        sign=-1 if len(word) % 2 else 1,
        length=len(word),
        stabilized=0 in cur,
        word=tuple(word),
    )


def dominant_and_parity(rs: RootSystem, lam: Sequence[int]) -> tuple[Weight, int, bool]:
    """Fast path of :func:`to_dominant` returning ``(dominant, sign, on_wall)``."""
    A = rs.cartan
    cur = tuple(lam)
    sign = 1
    while True:
        for i, c in enumerate(cur):
            if c < 0:
                row = A[i]
                cur = tuple(x - c * a for x, a in zip(cur, row))
                sign = -sign
                break
        else:
            return cur, sign, 0 in cur


def is_dominant(lam: Sequence[int]) -> bool:
    return all(c >= 0 for c in lam)


def orbit(rs: RootSystem, lam: Sequence[int], cap: int = DEFAULT_ORBIT_CAP) -> OrbitResult:
    """Full W-orbit of ``lam``, sorted lexicographically.

    Generated downward from the dominant representative: reflecting only at
    positive coordinates visits every orbit element.
    """
    dom = to_dominant(rs, lam).dominant
    elements = _orbit_from_dominant(rs, dom, cap)
    return OrbitResult(elements=tuple(sorted(elements)), size=len(elements))


def parabolic_order(rs: RootSystem, nodes: Iterable[int]) -> int:
    """Order of the subgroup generated by the simple reflections in ``nodes``.

    Uses ``|W| = prod_{alpha > 0} (ht(alpha) + 1) / ht(alpha)`` (the Poincare
    polynomial of W at t = 1), applied to the positive roots supported on ``nodes``.
    """
    nodes = set(nodes)
    out = Fraction(1)
    for r in rs.positive_roots:
        if all(c == 0 or i in nodes for i, c in enumerate(r)):
            h = sum(r)
            out *= Fraction(h + 1, h)
    assert out.denominator == 1
    return int(out)


def predicted_orbit_size(rs: RootSystem, lam: Sequence[int]) -> int:
    """``|W| / |W_lam|`` without enumerating; the stabilizer of a dominant weight is parabolic."""
    dom = to_dominant(rs, lam).dominant
    whole = parabolic_order(rs, range(rs.rank))
    return whole // parabolic_order(rs, [i for i, c in enumerate(dom) if c == 0])


def _check_cap(rs: RootSystem, dom: Weight, cap: int) -> None:
    size = predicted_orbit_size(rs, dom)
    if size > cap:
        raise ResourceError(f"Weyl orbit of {dom} has {size} elements, exceeding cap of {cap}")


def _orbit_from_dominant(rs: RootSystem, dom: Weight, cap: int) -> set[Weight]:
    _check_cap(rs, dom, cap)
    A = rs.cartan
    seen = {dom}
    frontier = [dom]
    while frontier:
        nxt = []
        for w in frontier:
            for i, c in enumerate(w):
                if c > 0:
                    v = _reflect(A, i, w)
                    if v not in seen:
                        seen.add(v)
                        nxt.append(v)
        if len(seen) > cap:
            raise ResourceError(f"Weyl orbit exceeds cap of {cap} elements")
        frontier = nxt
    return seen


def signed_orbit(rs: RootSystem, lam: Sequence[int], cap: int = DEFAULT_ORBIT_CAP) -> list[tuple[Weight, int]]:
    """Orbit of a regular dominant weight with the sign ``det w`` of the unique ``w`` reaching each element.

    Each downward step is one simple reflection and raises the length by one,
    so signs are tracked along the breadth-first layers.
    """
    dom = tuple(lam)
    if not all(c > 0 for c in dom):
        raise DomainError(f"signed_orbit needs a regular dominant weight, got {dom}")
    _check_cap(rs, dom, cap)
    A = rs.cartan
    signs = {dom: 1}
    frontier = [dom]
    sign = 1
    while frontier:
        sign = -sign
        nxt = []
        for w in frontier:
            for i, c in enumerate(w):
                if c > 0:
                    v = _reflect(A, i, w)
                    if v not in signs:
                        signs[v] = sign
                        nxt.append(v)
        if len(signs) > cap:
            raise ResourceError(f"Weyl orbit exceeds cap of {cap} elements")
        frontier = nxt
    return sorted(signs.items())


def weyl_order(rs: RootSystem, cap: int = DEFAULT_ORBIT_CAP) -> int:
    """``|W|`` as the size of the orbit of the regular weight rho."""
    return orbit(rs, rs.rho, cap=cap).size
