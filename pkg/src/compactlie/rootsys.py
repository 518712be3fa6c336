"""Root systems of simple Lie algebras and the lattice arithmetic P, Q, P/Q.

Conventions
-----------
Nodes follow Bourbaki numbering for every family (1-based in prose, 0-based
in code). Row ``i`` of the Cartan matrix holds the simple root ``alpha_i`` in
the fundamental-weight basis::

    alpha_i = sum_j A[i][j] * omega_j,     A[i][j] = <alpha_i, alpha_j^vee>

so ``A`` for G2 is ``[[2, -1], [-3, 2]]`` with node 1 short.

Roots are integer vectors in simple-root coordinates; weights are integer
tuples in fundamental-weight coordinates (Dynkin labels). The only bridge
between the two is :func:`root_to_weight_coords`.

The invariant form is normalized so that short roots have ``(a, a) = 2``;
``symmetrizers[j] = (alpha_j, alpha_j) / 2`` and ``A[i][j] * d[j]`` is the
symmetric matrix of inner products ``(alpha_i, alpha_j)``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .errors import DomainError

Weight = tuple[int, ...]

_FAMILIES = "ABCDEFG"

# Bourbaki E_n diagram: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
_E_EDGES = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)]


@dataclass(frozen=True, order=True)
class DynkinType:
    """A simple Dynkin type ``family`` + ``rank`` in canonical (non-repeating) form.

    Use :meth:`normalized` to accept the low-rank aliases B1, C1, C2 and D3.
    """

    family: str
    rank: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise DomainError(f"unknown Dynkin family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise DomainError(f"rank must be a positive integer, got {self.rank!r}")
        ok = {
            "A": self.rank >= 1,
            "B": self.rank >= 2,
            "C": self.rank >= 3,
            "D": self.rank >= 4,
            "E": self.rank in (6, 7, 8),
            "F": self.rank == 4,
            "G": self.rank == 2,
        }[self.family]
        if not ok:
            raise DomainError(
                f"{self.family}{self.rank} is not a canonical Dynkin type "
                f"(use DynkinType.normalized for low-rank aliases)"
            )

    @classmethod
    def normalized(cls, family: str, rank: int) -> "DynkinType":
        """Build a type, mapping B1, C1 -> A1, C2 -> B2, D3 -> A3.

        D2 = A1 x A1 and D1 are rejected as not simple.
        """
        family = family.upper()
        if family in ("B", "C") and rank == 1:
            return cls("A", 1)
        if family == "C" and rank == 2:
            return cls("B", 2)
        if family == "D" and rank == 3:
            return cls("A", 3)
        if family == "D" and rank == 2:
            raise DomainError("D2 = A1 x A1 is not simple")
        if family == "D" and rank == 1:
            raise DomainError("D1 is abelian, not simple")
        return cls(family, rank)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def cartan_matrix(t: DynkinType) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of ``t`` in Bourbaki numbering, ``A[i][j] = <alpha_i, alpha_j^vee>``."""
    n = t.rank
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, a_ij=-1, a_ji=-1):
        A[i][j] = a_ij
        A[j][i] = a_ji

    f = t.family
    if f in "ABCD":
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B":
            # alpha_n short
            link(n - 2, n - 1, -2, -1)
        elif f == "C":
            # alpha_n long
            link(n - 2, n - 1, -1, -2)
        elif f == "D":
            A[n - 2][n - 1] = A[n - 1][n - 2] = 0
            link(n - 3, n - 1)
    elif f == "E":
        for i, j in _E_EDGES:
            if i <= n and j <= n:
                link(i - 1, j - 1)
    elif f == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif f == "G":
        link(0, 1, -1, -3)
    return tuple(tuple(row) for row in A)


def _symmetrizers(A: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Squared half-lengths of the simple roots, normalized so the minimum is 1.

    Solves ``A[i][j] * d[j] == A[j][i] * d[i]`` by propagating along the
    (connected) Dynkin diagram.
    """
    n = len(A)
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and A[i][j] != 0 and d[j] is None:
                d[j] = d[i] * A[j][i] / A[i][j]
                stack.append(j)
    base = min(d)
    out = [x / base for x in d]
    assert all(x.denominator == 1 for x in out)
    return tuple(int(x) for x in out)


def _positive_roots(A: Sequence[Sequence[int]]) -> list[Weight]:
    """Positive roots in simple-root coordinates, by root-string closure.

    For a root ``beta`` and simple root ``alpha_i`` the ``alpha_i``-string
    through ``beta`` is ``beta - p alpha_i, ..., beta + q alpha_i`` with
    ``p - q = <beta, alpha_i^vee>``. Roots are generated height by height, so
    ``p`` is always known when ``beta`` is processed.
    """
    n = len(A)
    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                # <beta, alpha_i^vee> is coordinate i of beta in weight coordinates.
                pairing = sum(beta[k] * A[k][i] for k in range(n))
                p = 0
                lower = list(beta)
                while True:
                    lower[i] -= 1
                    if tuple(lower) in found:
                        p += 1
                    else:
                        break
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(found, key=lambda r: (sum(r), r))


@dataclass(frozen=True)
class RootSystem:
    """Root datum of a simple type. Immutable and hashable.

    Attributes
    ----------
    dynkin : DynkinType
    cartan : tuple of tuple of int
        Cartan matrix, row ``i`` = ``alpha_i`` in fundamental-weight coordinates.
    positive_roots : tuple of Weight
        Simple-root coordinates, sorted by height then lexicographically.
    symmetrizers : tuple of int
        ``(alpha_i, alpha_i) / 2``; short roots have 1.
    rho : Weight
        ``(1, ..., 1)``.
    """

    dynkin: DynkinType
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Weight, ...]
    symmetrizers: tuple[int, ...]
    rho: Weight = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "rho", (1,) * self.dynkin.rank)

    @property
    def rank(self) -> int:
        return self.dynkin.rank

    @cached_property
    def determinant(self) -> int:
        return _fraction_det(self.cartan)

    @cached_property
    def adjugate(self) -> tuple[tuple[int, ...], ...]:
        """Integer adjugate of the Cartan matrix, so ``A^-1 = adjugate / determinant``."""
        inv = _fraction_inverse(self.cartan)
        det = self.determinant
        adj = [[x * det for x in row] for row in inv]
        assert all(x.denominator == 1 for row in adj for x in row)
        return tuple(tuple(int(x) for x in row) for row in adj)

    @cached_property
    def positive_roots_weight(self) -> tuple[Weight, ...]:
        """Positive roots in fundamental-weight coordinates, same order as ``positive_roots``."""
        return tuple(root_to_weight_coords(self, r) for r in self.positive_roots)

    @cached_property
    def scaled_gram(self) -> tuple[tuple[int, ...], ...]:
        """``det(A)`` times the Gram matrix ``(omega_i, omega_j)``; integral.

        With ``(alpha_i, omega_j) = d_i delta_ij`` the Gram matrix is ``A^-1 D``.
        """
        adj, d = self.adjugate, self.symmetrizers
        n = self.rank
        return tuple(tuple(adj[i][j] * d[j] for j in range(n)) for i in range(n))

    def scaled_form(self, x: Sequence[int], y: Sequence[int]) -> int:
        """``det(A) * (x, y)`` for weights in fundamental-weight coordinates."""
        G = self.scaled_gram
        n = self.rank
        return sum(x[i] * G[i][j] * y[j] for i in range(n) if x[i] for j in range(n))

    def root_norm(self, r: Sequence[int]) -> int:
        """``(r, r)`` for a root given in simple-root coordinates (short roots give 2)."""
        A, d = self.cartan, self.symmetrizers
        n = self.rank
        return sum(r[i] * A[i][j] * d[j] * r[j] for i in range(n) for j in range(n))

    def to_root_coords(self, w: Sequence[int]) -> tuple[Fraction, ...]:
        """Express a weight in simple-root coordinates (rational in general)."""
        adj, det = self.adjugate, self.determinant
        n = self.rank
        return tuple(Fraction(sum(w[i] * adj[i][j] for i in range(n)), det) for j in range(n))

    def in_root_lattice(self, w: Sequence[int]) -> bool:
        return all(c.denominator == 1 for c in self.to_root_coords(w))

    def height(self, w: Sequence[int]) -> Fraction:
        """Sum of simple-root coordinates of ``w``."""
        return sum(self.to_root_coords(w), Fraction(0))

    def __repr__(self) -> str:
        return f"RootSystem({self.dynkin})"


def _fraction_det(M: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in row] for row in M]
    n = len(rows)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            det = -det
        det *= rows[col][col]
        for r in range(col + 1, n):
            f = rows[r][col] / rows[col][col]
            rows[r] = [a - f * b for a, b in zip(rows[r], rows[col])]
    assert det.denominator == 1
    return int(det)


def _fraction_inverse(M: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


@lru_cache(maxsize=None)
def build_root_system(t: DynkinType) -> RootSystem:
    """Construct the root system of a canonical Dynkin type."""
    if not isinstance(t, DynkinType):
        raise DomainError(f"expected a DynkinType, got {t!r}")
    A = cartan_matrix(t)
    return RootSystem(
        dynkin=t,
        cartan=A,
        positive_roots=tuple(_positive_roots(A)),
        symmetrizers=_symmetrizers(A),
    )


def root_system(name: str) -> RootSystem:
    """Shorthand: ``root_system("G2")``. Low-rank aliases are normalized."""
    name = name.strip()
    try:
        family, rank = name[0], int(name[1:])
    except (IndexError, ValueError):
        raise DomainError(f"not a Dynkin name: {name!r}") from None
    return build_root_system(DynkinType.normalized(family, rank))


def root_to_weight_coords(rs: RootSystem, r: Sequence[int]) -> Weight:
    """Convert a simple-root coordinate vector to fundamental-weight coordinates (``r @ A``)."""
    if len(r) != rs.rank:
        raise DomainError(f"expected {rs.rank} coordinates, got {len(r)}")
    A = rs.cartan
    n = rs.rank
    return tuple(sum(r[i] * A[i][j] for i in range(n)) for j in range(n))


def fundamental_group_order(rs: RootSystem) -> int:
    """Index ``(P : Q) = |det A|``."""
    return abs(rs.determinant)


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(M: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith normal form of a square integer matrix.

    Returns ``(D, U, V)`` with ``U @ M @ V == D``, ``U`` and ``V`` unimodular,
    ``D`` diagonal with nonnegative entries each dividing the next.
    """
    n = len(M)
    D = [list(map(int, row)) for row in M]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(a, b):
        D[a], D[b] = D[b], D[a]
        U[a], U[b] = U[b], U[a]

    def swap_cols(a, b):
        for row in D:
            row[a], row[b] = row[b], row[a]
        for row in V:
            row[a], row[b] = row[b], row[a]

    def add_row(dst, src, k):
        D[dst] = [x + k * y for x, y in zip(D[dst], D[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]

    def add_col(dst, src, k):
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(n):
        while True:
            nz = [(abs(D[i][j]), i, j) for i in range(t, n) for j in range(t, n) if D[i][j]]
            if not nz:
                break
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
            p = D[t][t]
            done = True
            for i in range(t + 1, n):
                q = D[i][t] // p
                if q:
                    add_row(i, t, -q)
                if D[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = D[t][j] // p
                if q:
                    add_col(j, t, -q)
                if D[t][j]:
                    done = False
            if not done:
                continue
            bad = next(
                ((i, j) for i in range(t + 1, n) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def center_structure(rs: RootSystem) -> list[int]:
    """Invariant factors (> 1) of ``P/Q``, sorted ascending, each dividing the next.

    ``P/Q`` is the centre of the simply-connected group.
    """
    D, _, _ = smith_normal_form(rs.cartan)
    return sorted(D[i][i] for i in range(rs.rank) if D[i][i] > 1)


# ---------------------------------------------------------------------------
# Character lattices Q <= X(T) <= P


@dataclass(frozen=True)
class LatticeClass:
    """A subgroup ``X(T)/Q`` of ``P/Q``.

    Elements are tuples in invariant-factor coordinates (one residue per
    factor of :func:`center_structure`).
    """

    generators: tuple[tuple[int, ...], ...]
    order: int
    elements: frozenset = field(compare=False, repr=False)
    moduli: tuple[int, ...] = field(compare=False, repr=False)

    def __contains__(self, cls) -> bool:
        return tuple(cls) in self.elements

    @property
    def is_simply_connected(self) -> bool:
        return self.order == math.prod(self.moduli)

    @property
    def is_adjoint(self) -> bool:
        return self.order == 1

    def __eq__(self, other):
        if not isinstance(other, LatticeClass):
            return NotImplemented
        return self.moduli == other.moduli and self.elements == other.elements

    def __hash__(self):
        return hash((self.moduli, self.elements))


@lru_cache(maxsize=None)
def _class_map(rs: RootSystem) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    """Moduli (invariant factors > 1) and the columns of ``V`` that read off a weight's class."""
    D, _, V = smith_normal_form(rs.cartan)
    idx = [i for i in range(rs.rank) if D[i][i] > 1]
    moduli = tuple(D[i][i] for i in idx)
    cols = tuple(tuple(V[r][i] for r in range(rs.rank)) for i in idx)
    order = sorted(range(len(idx)), key=lambda k: moduli[k])
    return tuple(moduli[k] for k in order), tuple(cols[k] for k in order)


def weight_class(rs: RootSystem, w: Sequence[int]) -> tuple[int, ...]:
    """Class of a weight in ``P/Q`` in invariant-factor coordinates.

    With ``U A V = D`` the root lattice is ``Z^r D V^-1``, so ``w`` lies in
    ``Q`` iff every ``(w V)_i`` is divisible by ``D_ii``.
    """
    moduli, cols = _class_map(rs)
    return tuple(sum(a * b for a, b in zip(w, col)) % m for m, col in zip(moduli, cols))


def _closure(gens: Iterable[tuple[int, ...]], moduli: tuple[int, ...]) -> frozenset:
    zero = tuple(0 for _ in moduli)
    elems = {zero}
    frontier = [zero]
    gens = list(gens)
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % m for a, b, m in zip(x, g, moduli))
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(elems)


def lattice_from_generators(rs: RootSystem, classes: Iterable[Sequence[int]]) -> LatticeClass:
    """Subgroup of ``P/Q`` generated by the given classes."""
    moduli, _ = _class_map(rs)
    gens = tuple(tuple(c) for c in classes if any(c))
    elems = _closure(gens, moduli)
    return LatticeClass(generators=gens, order=len(elems), elements=elems, moduli=moduli)


def lattice_from_weights(rs: RootSystem, weights: Iterable[Sequence[int]]) -> LatticeClass:
    """Character lattice ``Q + span(weights)``."""
    return lattice_from_generators(rs, [weight_class(rs, w) for w in weights])


def enumerate_character_lattices(rs: RootSystem) -> list[LatticeClass]:
    """All lattices between ``Q`` and ``P``, one per subgroup of ``P/Q``.

    Sorted by order; the first is the adjoint form, the last simply-connected.
    """
    moduli, _ = _class_map(rs)
    everything = list(itertools.product(*(range(m) for m in moduli)))
    found: dict[frozenset, tuple] = {}
    trivial = lattice_from_generators(rs, [])
    found[trivial.elements] = ()
    queue = [()]
    while queue:
        gens = queue.pop(0)
        current = _closure(gens, moduli)
        for g in everything:
            if g in current:
                continue
            new_gens = gens + (g,)
            elems = _closure(new_gens, moduli)
            if elems not in found:
                found[elems] = new_gens
                queue.append(new_gens)
    out = [
        LatticeClass(generators=gens, order=len(elems), elements=elems, moduli=moduli)
        for elems, gens in found.items()
    ]
    return sorted(out, key=lambda L: (L.order, sorted(L.elements)))


def simply_connected_lattice(rs: RootSystem) -> LatticeClass:
    return enumerate_character_lattices(rs)[-1]


def adjoint_lattice(rs: RootSystem) -> LatticeClass:
    return enumerate_character_lattices(rs)[0]


def abelian_invariants(elements: Iterable[tuple[int, ...]], moduli: Sequence[int]) -> list[int]:
    """Invariant factors (> 1) of a finite subgroup of ``Z_m1 x ... x Z_mk``.

    Uses ``|H[p^j]| = p^(sum_i min(j, e_i))`` to recover the ``p``-primary
    exponents ``e_i`` without any further normal-form computation.
    """
    elements = list(elements)
    size = len(elements)
    if size == 1:
        return []

    def killed_by(m):
        return sum(1 for x in elements if all((m * a) % q == 0 for a, q in zip(x, moduli)))

    primes = [p for p in range(2, size + 1) if size % p == 0 and all(p % q for q in range(2, int(p**0.5) + 1))]
    factors: list[int] = []
    for p in primes:
        counts = [0]
        j = 1
        while True:
            c = round(math.log(killed_by(p**j), p))
            counts.append(c)
            if p ** c == size or (counts[-1] == counts[-2]):
                break
            j += 1
        # number of cyclic p-parts with exponent >= j
        at_least = [counts[j] - counts[j - 1] for j in range(1, len(counts))]
        exps = []
        for j, k in enumerate(at_least, start=1):
            nxt = at_least[j] if j < len(at_least) else 0
            exps += [j] * (k - nxt)
        exps.sort(reverse=True)
        for i, e in enumerate(exps):
            if i < len(factors):
                factors[i] *= p**e
            else:
                factors.append(p**e)
    return sorted(f for f in factors if f > 1)
