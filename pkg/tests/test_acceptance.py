"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -v``.
"""

import csv
import io
from contextlib import contextmanager
from time import perf_counter

import numpy as np

from achebyshev import cli
from achebyshev.core import RealPolynomial, char_poly, eval_T_A, eval_T_A_wform
from achebyshev.envelope import envelope_eval, envelope_eval_charpoly, tangency_points
from achebyshev.kernel import cheb_t
from achebyshev.roots import all_zeros_T, max_gap, real_zeros_theta
from achebyshev.salem import (
    pisot_to_salem_sequence,
    root_census,
    salem_S,
    wform_identity_check,
)

from conftest import random_tuple

@contextmanager
def criterion(capsys, number, title, budget):
    start = perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = perf_counter() - start
        assert elapsed < budget, f"took {elapsed:.2f} s, budget {budget} s"
        status = "PASS"
    finally:
        elapsed = perf_counter() - start
        with capsys.disabled():
            print(f"\n[acceptance {number:2d}] {status}  {title}  ({elapsed:.2f} s / {budget} s)")


def test_c01_envelope_closed_forms(capsys):
    with criterion(capsys, 1, "envelope closed forms", 1):
        x = np.linspace(-1, 1, 1000)
        cases = {
            (1, -1): np.sqrt(2 - 2 * x),
            (1, 0, 1): 2 * np.abs(x),
            (1, 0, -1): 2 * np.sqrt(1 - x**2),
        }
        for a, expected in cases.items():
            assert np.max(np.abs(envelope_eval(a, x) - expected)) <= 1e-10, a


def test_c02_charpoly_equivalence(capsys):
    with criterion(capsys, 2, "series vs characteristic-polynomial envelope", 5):
        rng = np.random.default_rng(2)
        x = np.linspace(-2, 2, 1001)
        for _ in range(100):
            a = random_tuple(rng, 6)
            e1, e2 = envelope_eval(a, x), envelope_eval_charpoly(a, x)
            assert np.all(np.abs(e1 - e2) <= 1e-10 * (1 + e1)), a


def test_c03_bound_and_tangency(capsys):
    with criterion(capsys, 3, "envelope bound and tangency", 30):
        rng = np.random.default_rng(3)
        x = np.linspace(-1, 1, 1000)
        checked = 0
        for _ in range(100):
            a = random_tuple(rng, 5)
            n = int(rng.integers(max(len(a) - 1, 1), 81))
            assert np.all(np.abs(eval_T_A(a, n, x)) <= envelope_eval(a, x) + 1e-9), (a, n)
            # n = m can have no interior touch point, so an empty list is allowed
            for p in tangency_points(a, n):
                assert p.slope_mismatch <= 1e-4, (a, n, p)
                checked += 1
        assert checked > 1000


def test_c04_persistent_zero(capsys):
    with criterion(capsys, 4, "persistent zero 5/4 for A=(2,-5,2)", 1):
        for n in range(2, 41):
            rs = all_zeros_T((2, -5, 2), n)
            i = int(np.argmin(np.abs(rs.roots - 1.25)))
            assert abs(rs.roots[i] - 1.25) <= 1e-9, n
            assert rs.residuals[i] <= 1e-9, n
            # P(2) = P(1/2) = 0, so the w-form vanishes identically at x = 5/4
            assert abs(eval_T_A_wform((2, -5, 2), n, 1.25)) <= 1e-9, n


def test_c05_zero_count_and_routes(capsys):
    with criterion(capsys, 5, "zero count and theta/w-plane agreement", 30):
        rng = np.random.default_rng(5)
        for _ in range(50):
            a = random_tuple(rng, 4)
            n = int(rng.integers(max(len(a) - 1, 1), 31))
            xs = all_zeros_T(a, n).roots
            assert len(xs) == n
            real_inside = np.sort(xs[(xs.imag == 0) & (np.abs(xs.real) <= 1)].real)
            theta = np.asarray(real_zeros_theta(a, n))
            assert len(real_inside) == len(theta), (a, n)
            assert np.allclose(real_inside, theta, rtol=0, atol=1e-7), (a, n)


def test_c06_density(capsys):
    with criterion(capsys, 6, "max gap at n=128 below half the gap at n=32", 5):
        for a in [(1, -1, -1), (1,)]:
            g32 = max_gap(real_zeros_theta(a, 32))
            g128 = max_gap(real_zeros_theta(a, 128))
            assert g128 < g32 / 2, (a, g32, g128)


def _nearest(a, n, point):
    return float(np.min(np.abs(all_zeros_T(a, n).roots - point)))


def test_c07_limit_points(capsys):
    with criterion(capsys, 7, "limit points at reciprocal and non-reciprocal roots", 10):
        for n in range(10, 65):
            assert _nearest((1, -3, 1), n, 1.5) <= 1e-7, n
        # x^2 - 4x + 2: roots 2 +- sqrt(2), product 2, so no reciprocal pair
        a = (1, -4, 2)
        roots = np.roots(a)
        w = roots[np.argmax(np.abs(roots))]
        assert abs(w) > 1 and all(abs(r * w - 1) > 0.1 for r in roots)
        point = 0.5 * (w + 1 / w)
        assert _nearest(a, 64, point) < _nearest(a, 8, point) / 10


def test_c08_salem_identity(capsys):
    with criterion(capsys, 8, "w-form identity for R_(2n-m)", 5):
        rng = np.random.default_rng(8)
        worst = 0.0
        for _ in range(100):
            a = random_tuple(rng, 5)
            n = int(rng.integers(len(a) - 1, 41))
            w = rng.uniform(0.5, 2.0) * np.exp(1j * rng.uniform(0, 2 * np.pi))
            worst = max(worst, wform_identity_check(a, n, [w]))
        assert worst <= 1e-8


def test_c09_golden_sequence(capsys):
    with criterion(capsys, 9, "golden-ratio S_2n closed form and convergence", 5):
        P = RealPolynomial.from_highest([1, -1, -1])
        for n in range(2, 13):
            expected = np.zeros(2 * n + 1)
            expected[[0, -1]] = 1
            expected[1:2 * n:2] = -1
            assert salem_S(P, n).coeffs == tuple(expected), n
        (s40,) = pisot_to_salem_sequence(P, [20], "S")
        assert s40.index == 40
        assert abs(s40.tau - 1.6180339887) < 1e-4
        res = [s.residual for s in pisot_to_salem_sequence(P, range(5, 21), "S")]
        assert all(b < a for a, b in zip(res, res[1:]))


def test_c10_root_census(capsys):
    with criterion(capsys, 10, "S_2n census and exact palindromes", 5):
        P = char_poly((1, -1, -1))
        for n in range(3, 21):
            S = salem_S(P, n)
            assert S.is_palindromic(), n
            assert root_census(S, tol=1e-6).outside <= 1, n


def test_c11_figure_dataset(capsys):
    with criterion(capsys, 11, "envelope dataset for A=(1,0,0,1) with overlays 14 and 44", 1):
        code = cli.main(["envelope", "--a", "1,0,0,1", "--n", "14,44", "--grid", "-1:1:1000"])
        out = capsys.readouterr().out
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 1000
        x = np.array([float(r["x"]) for r in rows])
        esq = np.array([float(r["E_sq"]) for r in rows])
        env = np.array([float(r["E"]) for r in rows])
        assert np.max(np.abs(esq - (2 + 2 * cheb_t(3, x)))) <= 1e-12
        for col in ("T_14", "T_44"):
            assert np.all(np.abs([float(r[col]) for r in rows]) <= env + 1e-9)
        # the opposite-sign curve 2 + 6x - 8x^3 is not the envelope here
        assert np.max(np.abs(esq - (2 + 6 * x - 8 * x**3))) > 1
