"""Acceptance criteria, one check per criterion at its stated tolerance and time budget.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import itertools
import sys
import time
from contextlib import redirect_stderr, redirect_stdout
from dataclasses import dataclass

import numpy as np
import pytest

from compactlie.charmult import (
    character_product,
    eval_character,
    formal_character,
    generic_torus_points,
    kostant_multiplicities,
    weyl_dim,
)
from compactlie.cli import main as cli_main
from compactlie.cli import parse_group
from compactlie.harmonic import (
    BandLimitedFunction,
    SU2Element,
    convolve,
    fourier_transform,
    haar_integrate_su2,
    inverse_fourier,
    l2_norm_squared,
    matrix_element_inner,
    plancherel_norm,
    schur_polynomial,
    su2_rep_matrix,
    su2_to_so3,
    weyl_integrate_torus_class,
)
from compactlie.harmonic.battery import random_band_limited
from compactlie.rootsys import (
    DynkinType,
    build_root_system,
    center_structure,
    fundamental_group_order,
    root_system,
)
from compactlie.tensor import decompose_character, tensor_decompose
from compactlie.weyl import weyl_order

SMALL_TYPES = ("A1", "A2", "A3", "B2", "B3", "C3", "G2")


@dataclass
class Outcome:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{verdict}] criterion {self.number:>2}: {self.title} ({self.seconds:.2f} s) {self.detail}"


RESULTS: dict[int, Outcome] = {}


def _grid(rank: int):
    return list(itertools.product(range(3), repeat=rank))


def _all_types(max_rank: int = 8):
    out = [DynkinType("A", n) for n in range(1, max_rank + 1)]
    out += [DynkinType("B", n) for n in range(2, max_rank + 1)]
    out += [DynkinType("C", n) for n in range(3, max_rank + 1)]
    out += [DynkinType("D", n) for n in range(4, max_rank + 1)]
    out += [DynkinType("E", n) for n in (6, 7, 8)]
    return out + [DynkinType("F", 4), DynkinType("G", 2)]


# ---------------------------------------------------------------------------


def criterion_1():
    a1 = root_system("A1")
    bad = [k for k in range(21) if weyl_dim(a1, (k,)) != k + 1]
    return not bad, f"k = 0..20, mismatches {bad}", 1.0


def criterion_2():
    bad = []
    for t in _all_types():
        rs = build_root_system(t)
        if np.prod(center_structure(rs), dtype=object) != fundamental_group_order(rs):
            bad.append(str(t))
    for n in range(2, 10):
        if fundamental_group_order(root_system(f"A{n - 1}")) != n:
            bad.append(f"A{n - 1}")
    return not bad, f"{len(_all_types())} types rank <= 8, mismatches {bad}", 1.0


def criterion_3():
    a1 = root_system("A1")
    bad = [n for n in range(13) if formal_character(a1, (n,)) != {(m,): 1 for m in range(-n, n + 1, 2)}]
    return not bad, f"n = 0..12, mismatches {bad}", 1.0


def criterion_4():
    bad, count = [], 0
    for name in SMALL_TYPES:
        rs = root_system(name)
        for lam in _grid(rs.rank):
            chi = formal_character(rs, lam)
            count += len(chi)
            if kostant_multiplicities(rs, lam, chi.keys()) != dict(chi):
                bad.append((name, lam))
    return not bad, f"{count} support weights compared, mismatches {bad}", 60.0


def criterion_5():
    bad = []
    for name in SMALL_TYPES:
        rs = root_system(name)
        for lam in _grid(rs.rank):
            if sum(formal_character(rs, lam).values()) != weyl_dim(rs, lam):
                bad.append((name, lam))
    return not bad, f"mismatches {bad}", None


def criterion_6():
    bad, pairs = [], 0
    for name in SMALL_TYPES:
        rs = root_system(name)
        grid = _grid(rs.rank)
        chars = {lam: formal_character(rs, lam) for lam in grid}
        for lam, mu in itertools.product(grid, repeat=2):
            pairs += 1
            peel = decompose_character(rs, character_product(chars[lam], chars[mu]))
            if tensor_decompose(rs, lam, mu) != peel:
                bad.append((name, lam, mu))
    a1 = root_system("A1")
    for m, n in itertools.product(range(11), repeat=2):
        if tensor_decompose(a1, (m,), (n,)) != {(l,): 1 for l in range(abs(m - n), m + n + 1, 2)}:
            bad.append(("A1", m, n))
    return not bad, f"{pairs} ordered pairs + 121 SU(2) cases, mismatches {bad}", 120.0


def criterion_7():
    expected = {"A1": 2, "A2": 6, "B2": 8, "G2": 12, "A3": 24, "F4": 1152}
    got = {name: weyl_order(root_system(name)) for name in expected}
    return got == expected, f"{got}", None


def criterion_8():
    rng = np.random.default_rng(8)
    worst = 0.0
    for name in SMALL_TYPES:
        rs = root_system(name)
        for lam in _grid(rs.rank):
            t = generic_torus_points(rs, 100, rng)
            a = eval_character(rs, lam, t, method="weight-sum")
            b = eval_character(rs, lam, t, method="weyl-quotient")
            worst = max(worst, float(np.abs(a - b).max()))
    return worst < 1e-10, f"max |weight-sum - quotient| = {worst:.2e} (tol 1e-10)", None


def criterion_9():
    idx = [(k, i, j) for k in range(5) for i in range(k + 1) for j in range(k + 1)]
    err_me = 0.0
    for p, q in itertools.product(idx, repeat=2):
        expected = 1 / (p[0] + 1) if p == q else 0.0
        err_me = max(err_me, abs(matrix_element_inner(*p, *q) - expected))

    def chi(k):
        return lambda g: np.trace(su2_rep_matrix(k, g).entries, axis1=-2, axis2=-1)

    err_ch = 0.0
    for j, k in itertools.product(range(7), repeat=2):
        val = haar_integrate_su2(lambda g: chi(j)(g) * np.conj(chi(k)(g)), max(j + k, 1))
        err_ch = max(err_ch, abs(val - (j == k)))
    ok = err_me < 1e-8 and err_ch < 1e-8
    return ok, f"matrix elements {err_me:.2e}, characters {err_ch:.2e} (tol 1e-8)", 60.0


def criterion_10():
    parts = [(a, b) for a in range(4) for b in range(a + 1)]
    err = abs(weyl_integrate_torus_class(lambda t: np.ones(len(t)), 2) - 1)
    for p, q in itertools.product(parts, repeat=2):
        val = weyl_integrate_torus_class(
            lambda t: schur_polynomial(p, t) * np.conj(schur_polynomial(q, t)), 2
        )
        err = max(err, abs(val - (p == q)))
    return err < 1e-8, f"{len(parts)} partitions, max error {err:.2e} (tol 1e-8)", 10.0


def criterion_11():
    rng = np.random.default_rng(11)
    kmax = 4
    f1, f2 = random_band_limited(rng, kmax), random_band_limited(rng, kmax)
    F1, F2 = fourier_transform(f1, kmax), fourier_transform(f2, kmax)
    inv = max(inverse_fourier(F1).distance(f1), inverse_fourier(F2).distance(f2))
    planch = abs(plancherel_norm(F1) - l2_norm_squared(f1, 2 * kmax))
    C = fourier_transform(convolve(f1, f2), kmax)
    conv = C.distance(F2 @ F1)
    swapped = C.distance(F1 @ F2)
    delta = convolve(f1, BandLimitedFunction.delta_approximant(kmax)).distance(f1)
    ok = max(inv, planch, conv, delta) < 1e-9
    detail = (
        f"inversion {inv:.2e}, Plancherel {planch:.2e}, (f1*f2)~ vs f2~f1~ {conv:.2e}, "
        f"delta {delta:.2e} (tol 1e-9); f1~f2~ order differs by {swapped:.2f}"
    )
    return ok, detail, 30.0


def printed_pi2(g: SU2Element) -> np.ndarray:
    """The 3 x 3 rotation formula for Pi_2 exactly as typeset in the reference text."""
    a, b = g.a, g.b
    return np.array([
        [(a**2 + b**2).real, 2 * (a * b).imag, (b**2 - a**2).imag],
        [2 * (a * np.conj(b)).imag, abs(a) ** 2 - abs(b) ** 2, 2 * (a * np.conj(b)).real],
        [(a**2 + b**2).imag, 2 * (a * b).real, (a**2 - b**2).real],
    ])


def criterion_12():
    rng = np.random.default_rng(12)
    dev = np.zeros((3, 3))
    printed_orth = 0.0
    for _ in range(100):
        g = SU2Element.random(rng)
        P = printed_pi2(g)
        dev = np.maximum(dev, np.abs(su2_to_so3(g) - P))
        printed_orth = max(printed_orth, float(np.abs(P.T @ P - np.eye(3)).max()))
    kernel = float(np.abs(su2_to_so3(SU2Element(-1.0, 0.0)) - np.eye(3)).max())
    worst = tuple(int(x) + 1 for x in np.unravel_index(dev.argmax(), dev.shape))
    ok = dev.max() < 1e-10 and kernel < 1e-10
    detail = (
        f"max entrywise deviation from printed matrix {dev.max():.2e} at entry {worst} (tol 1e-10); "
        f"printed matrix orthogonality defect {printed_orth:.2e}; kernel check {kernel:.1e}"
    )
    return ok, detail, None


GROUP_FIXTURES = [
    # name, Dynkin type, |X(T)/Q|, canonical name
    ("SU(2)", "A1", 2, "SU(2)"), ("SU(3)", "A2", 3, "SU(3)"), ("SU(4)", "A3", 4, "SU(4)"),
    ("PSU(3)", "A2", 1, "PSU(3)"), ("SO(3)", "A1", 1, "SO(3)"), ("Spin(3)", "A1", 2, "SU(2)"),
    ("Spin(5)", "B2", 2, "Spin(5)"), ("SO(5)", "B2", 1, "SO(5)"), ("Spin(7)", "B3", 2, "Spin(7)"),
    ("SO(7)", "B3", 1, "SO(7)"), ("Sp(1)", "A1", 2, "SU(2)"), ("Sp(2)", "B2", 2, "Spin(5)"),
    ("Sp(3)", "C3", 2, "Sp(3)"), ("Spin(6)", "A3", 4, "SU(4)"), ("SO(6)", "A3", 2, "SO(6)"),
    ("Spin(8)", "D4", 4, "Spin(8)"), ("SO(8)", "D4", 2, "SO(8)"), ("PSO(8)", "D4", 1, "PSO(8)"),
    ("SO(10)", "D5", 2, "SO(10)"), ("A3", "A3", 4, "SU(4)"), ("G2", "G2", 1, "G2"), ("E6", "E6", 3, "E6"),
]

CLI_FIXTURES = [
    # argv, exit code, stdout
    (["dim", "SU(2)", "[4]"], 0, "5\n"),
    (["dim", "SO(3)", "[1]"], 2, ""),
    (["dim", "SO(3)", "[2]"], 0, "3\n"),
    (["center", "SU(4)"], 0, "Z4\n"),
    (["dim", "SO(4)", "[1]"], 1, ""),
    (["dim", "U(2)", "[1]"], 1, ""),
]


def criterion_13():
    bad = []
    for name, typ, order, canon in GROUP_FIXTURES:
        g = parse_group(name)
        if (str(g.dynkin), g.lattice.order, g.canonical_name) != (typ, order, canon):
            bad.append(name)
        elif parse_group(g.canonical_name) != g:
            bad.append(name + " (round trip)")
    for argv, code, stdout in CLI_FIXTURES:
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            got = cli_main(argv)
        if got != code or out.getvalue() != stdout:
            bad.append(" ".join(argv))
    return not bad, f"{len(GROUP_FIXTURES)} group names + {len(CLI_FIXTURES)} CLI runs, mismatches {bad}", None


CRITERIA = [
    (1, "dimension formula for SU(2)", criterion_1),
    (2, "lattice index |det A| vs Smith form", criterion_2),
    (3, "weight diagram of Pi_n", criterion_3),
    (4, "Freudenthal = Kostant multiplicities", criterion_4),
    (5, "mass conservation", criterion_5),
    (6, "Klimyk = character-product peel; Clebsch-Gordan", criterion_6),
    (7, "Weyl group orders", criterion_7),
    (8, "weight sum = Weyl quotient", criterion_8),
    (9, "orthogonality relations", criterion_9),
    (10, "Weyl integration for U(2)", criterion_10),
    (11, "Fourier inversion, Plancherel, convolution", criterion_11),
    (12, "Pi_2 -> SO(3) printed matrix and kernel", criterion_12),
    (13, "CLI parse table and X(T) rejection", criterion_13),
]


def evaluate(number: int, title: str, fn) -> Outcome:
    start = time.perf_counter()
    passed, detail, budget = fn()
    seconds = time.perf_counter() - start
    if budget is not None:
        detail += f"; budget {budget:.0f} s"
        passed = passed and seconds < budget
    outcome = Outcome(number, title, bool(passed), detail, seconds)
    RESULTS[number] = outcome
    return outcome


@pytest.mark.parametrize("number,title,fn", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, title, fn):
    outcome = evaluate(number, title, fn)
    print(outcome.line())
    assert outcome.passed, outcome.line()


if __name__ == "__main__":
    outcomes = [evaluate(*c) for c in CRITERIA]
    for o in outcomes:
        print(o.line())
    sys.exit(0 if all(o.passed for o in outcomes) else 1)
