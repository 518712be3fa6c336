import cmath
import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compactlie.charmult import (
    FormalCharacter,
    dual_weight,
    eval_character,
    formal_character,
    generic_torus_points,
    kostant_multiplicities,
    kostant_partition,
    mult_kostant,
    weyl_dim,
)
from compactlie.errors import DomainError, ResourceError, SingularityError
from compactlie.rootsys import root_system
from compactlie.weyl import simple_reflection

from grid import SMALL_TYPES, dominant_grid, grid_cases


def brute_partitions(roots, tau):
    """Count multisets of ``roots`` summing to ``tau`` by exhaustive bounded search."""
    roots = list(roots)

    def rec(idx, rest):
        if all(c == 0 for c in rest):
            return 1
        if idx == len(roots) or any(c < 0 for c in rest):
            return 0
        r = roots[idx]
        total, k = 0, 0
        cur = rest
        while all(c >= 0 for c in cur):
            total += rec(idx + 1, cur)
            k += 1
            cur = tuple(c - k * x for c, x in zip(rest, r))
        return total

    return rec(0, tuple(tau))


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_kostant_partition_matches_brute_force(name):
    rs = root_system(name)
    for tau in itertools.product(range(4), repeat=rs.rank):
        assert kostant_partition(rs, tau) == brute_partitions(rs.positive_roots, tau)


def test_kostant_partition_examples():
    a1, a2 = root_system("A1"), root_system("A2")
    assert kostant_partition(a2, (0, 0)) == 1
    assert all(kostant_partition(a1, (k,)) == 1 for k in range(10))
    assert kostant_partition(a2, (1, 1)) == 2
    assert kostant_partition(a2, (-1, 2)) == 0


def test_weyl_dim_examples():
    a1 = root_system("A1")
    assert [weyl_dim(a1, (k,)) for k in range(21)] == list(range(1, 22))
    assert weyl_dim(root_system("A2"), (1, 1)) == 8
    assert weyl_dim(root_system("G2"), (1, 0)) == 7
    assert weyl_dim(root_system("G2"), (0, 1)) == 14
    assert weyl_dim(root_system("E8"), (0, 0, 0, 0, 0, 0, 0, 1)) == 248
    for name in SMALL_TYPES:
        assert weyl_dim(root_system(name), (0,) * root_system(name).rank) == 1
    with pytest.raises(DomainError):
        weyl_dim(a1, (-1,))


def test_mult_kostant_examples():
    assert mult_kostant(root_system("A1"), (4,), (0,)) == 1
    assert mult_kostant(root_system("A2"), (1, 1), (0, 0)) == 2
    assert mult_kostant(root_system("B2"), (1, 1), (1, 1)) == 1


def test_formal_character_examples():
    a1, a2 = root_system("A1"), root_system("A2")
    assert formal_character(a1, (3,)) == {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1}
    assert formal_character(a2, (0, 0)) == {(0, 0): 1}
    chi = formal_character(a2, (1, 1))
    assert chi[(0, 0)] == 2 and len(chi) == 7 and chi.dimension == 8


@pytest.mark.parametrize("name,rs,lam", list(grid_cases()), ids=lambda x: str(x) if not hasattr(x, "rank") else "")
def test_freudenthal_equals_kostant(name, rs, lam):
    chi = formal_character(rs, lam)
    assert kostant_multiplicities(rs, lam, chi.keys()) == dict(chi)
    assert chi.dimension == weyl_dim(rs, lam)
    # support lies below lam in the root lattice
    for mu in chi:
        coords = rs.to_root_coords(tuple(a - b for a, b in zip(lam, mu)))
        assert all(c.denominator == 1 and c >= 0 for c in coords)


def test_weights_outside_support_have_zero_kostant_multiplicity():
    rs = root_system("B2")
    chi = formal_character(rs, (1, 1))
    outside = [mu for mu in itertools.product(range(-4, 5), repeat=2) if mu not in chi]
    assert set(kostant_multiplicities(rs, (1, 1), outside).values()) == {0}


@settings(max_examples=40)
@given(st.sampled_from(SMALL_TYPES), st.data())
def test_formal_character_weyl_invariant(name, data):
    rs = root_system(name)
    lam = tuple(data.draw(st.lists(st.integers(0, 2), min_size=rs.rank, max_size=rs.rank)))
    chi = formal_character(rs, lam)
    i = data.draw(st.integers(0, rs.rank - 1))
    for mu, m in chi.items():
        assert chi[simple_reflection(rs, i, mu)] == m


def test_formal_character_cap():
    with pytest.raises(ResourceError):
        formal_character(root_system("E8"), (1,) * 8)


def test_text_round_trip():
    chi = formal_character(root_system("A2"), (2, 1))
    text = chi.to_text()
    assert text.splitlines()[0] == "1 × (-3,2)"
    assert FormalCharacter.from_text(text) == chi


def test_eval_character_examples():
    a1 = root_system("A1")
    theta = 0.37
    x = cmath.exp(1j * theta)
    val = eval_character(a1, (2,), [theta])
    assert abs(val - (x**2 + 1 + x**-2)) < 1e-12
    assert abs(val - (x**3 - x**-3) / (x - 1 / x)) < 1e-12
    assert abs(eval_character(a1, (2,), [math.pi / 2]) - (-1)) < 1e-12
    for name in SMALL_TYPES:
        rs = root_system(name)
        lam = (1,) * rs.rank
        assert eval_character(rs, lam, [0.0] * rs.rank) == weyl_dim(rs, lam)


def test_eval_character_singular_point():
    with pytest.raises(SingularityError):
        eval_character(root_system("A2"), (1, 0), [0.0, 0.0], method="weyl-quotient")


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_character_formula_consistency(name):
    rs = root_system(name)
    t = generic_torus_points(rs, 100, np.random.default_rng(7))
    assert t.shape == (100, rs.rank)
    for lam in dominant_grid(rs.rank):
        a = eval_character(rs, lam, t, "weight-sum")
        b = eval_character(rs, lam, t, "weyl-quotient")
        assert np.abs(a - b).max() < 1e-10


def test_dual_weight():
    a1, a2 = root_system("A1"), root_system("A2")
    assert dual_weight(a1, (5,)) == (5,)
    assert dual_weight(a2, (1, 0)) == (0, 1)
    assert dual_weight(root_system("A3"), (1, 2, 0)) == (0, 2, 1)
    assert dual_weight(root_system("G2"), (1, 2)) == (1, 2)
    for name in SMALL_TYPES:
        rs = root_system(name)
        assert dual_weight(rs, (0,) * rs.rank) == (0,) * rs.rank
        for lam in dominant_grid(rs.rank):
            assert dual_weight(rs, dual_weight(rs, lam)) == lam
