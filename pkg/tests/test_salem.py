import math

import numpy as np
import pytest

from achebyshev.core import RealPolynomial, char_poly
from achebyshev.errors import NotPisotError
from achebyshev.roots import all_zeros_U
from achebyshev.salem import (
    _div_by_w2_minus_1,
    is_salem_numeric,
    pisot_root,
    pisot_to_salem_sequence,
    root_census,
    salem_R,
    salem_S,
    wform_identity_check,
)

from conftest import random_tuple

GOLDEN = RealPolynomial.from_highest([1, -1, -1])
Q_GOLDEN = (1 + math.sqrt(5)) / 2


def golden_S_closed_form(n):
    """w^2n - (w^(2n-1) + w^(2n-3) + ... + w) + 1, lowest degree first."""
    c = np.zeros(2 * n + 1)
    c[0] = c[-1] = 1
    c[1:2 * n:2] = -1
    return tuple(c)


def test_salem_R_golden():
    for k in (1, 5, 10):
        expected = np.zeros(k + 3)
        expected[[0, k + 2]] = 1
        np.subtract.at(expected, [1, 2, k, k + 1], 1)
        assert salem_R(GOLDEN, k).coeffs == tuple(expected)
    assert salem_R(GOLDEN, 10).format("w") == "w^12 - w^11 - w^10 - w^2 - w + 1"


def test_salem_R_palindromic_input():
    P = RealPolynomial.from_highest([2, -5, 2])
    assert salem_R(P, 0) == 2 * P


def test_salem_R_palindrome(rng):
    for _ in range(30):
        P = char_poly(random_tuple(rng, 6))
        k = int(rng.integers(0, 40))
        R = salem_R(P, k)
        assert R.degree == k + P.degree
        assert R.is_palindromic()


@pytest.mark.parametrize("n", range(2, 13))
def test_salem_S_golden_closed_form(n):
    assert salem_S(GOLDEN, n).coeffs == golden_S_closed_form(n)


def test_salem_S_long_division_oracle():
    # w^6 - w^5 - w^4 + w^2 + w - 1 divided by w^2 - 1
    num = np.array([1, -1, -1, 0, 1, 1, -1.0])
    q, r = np.polydiv(num, [1, 0, -1])
    assert np.allclose(r, 0)
    assert salem_S(GOLDEN, 2).highest_first() == tuple(q)
    assert salem_S(GOLDEN, 2).format("w") == "w^4 - w^3 - w + 1"


def test_salem_S_palindrome_exact(rng):
    for _ in range(30):
        P = char_poly(random_tuple(rng, 5))
        n = int(rng.integers(P.degree, 40))
        S = salem_S(P, n)
        assert S.degree == 2 * n
        assert S.is_palindromic()


def test_division_remainder_small(rng):
    for _ in range(20):
        P = char_poly(random_tuple(rng, 5))
        n = int(rng.integers(P.degree, 30))
        N = (P.shift(2 * n + 2 - P.degree) - P.reciprocal()).array
        _, rem = _div_by_w2_minus_1(N)
        assert np.abs(rem).max() <= 1e-12


def test_salem_S_rejects_bad_numerator():
    N = np.array([1.0, 0.0, 0.0, 0.0, 1.0])
    _, rem = _div_by_w2_minus_1(N)
    assert np.abs(rem).max() > 1
    with pytest.raises(ValueError):
        salem_S(GOLDEN, 1)


def test_wform_identity_examples():
    assert wform_identity_check((1,), 3, [2.0]) <= 1e-10
    circle = np.exp(1j * np.linspace(0.1, 3.0, 17))
    assert wform_identity_check((0.5, 1.5, -2.0), 9, circle) <= 1e-10
    assert wform_identity_check((1, -1, -1), 10, [Q_GOLDEN]) <= 1e-10


def test_wform_identity_random(rng):
    for _ in range(40):
        a = random_tuple(rng, 5)
        n = int(rng.integers(len(a) - 1, 41))
        r = rng.uniform(0.5, 2.0, 3)
        w = r * np.exp(1j * rng.uniform(0, 2 * np.pi, 3))
        assert wform_identity_check(a, n, w) <= 1e-8


def test_census():
    c = root_census(GOLDEN)
    assert (c.outside, c.on_circle, c.inside) == (1, 0, 1)
    c = root_census(RealPolynomial.from_highest([1, 0, -1]))
    assert (c.outside, c.on_circle, c.inside) == (0, 2, 0)
    c = root_census(salem_S(GOLDEN, 10))
    assert c.outside == 1 and c.total == 20


def test_is_salem_numeric():
    lehmer_like = RealPolynomial.from_highest([1, -1, -1, -1, 1])
    assert is_salem_numeric(lehmer_like)
    assert not is_salem_numeric(GOLDEN)
    assert not is_salem_numeric(salem_S(GOLDEN, 2))
    # smallest known Salem number, Lehmer's polynomial
    lehmer = RealPolynomial.from_highest([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    assert is_salem_numeric(lehmer)


def test_s4_factorisation():
    S4 = salem_S(GOLDEN, 2)
    prod = np.polymul(np.polymul([1, -1], [1, -1]), [1, 1, 1])
    assert S4.highest_first() == tuple(prod)


def test_pisot_check():
    assert pisot_root(GOLDEN) == pytest.approx(Q_GOLDEN, rel=1e-15)
    with pytest.raises(NotPisotError) as exc:
        pisot_root(RealPolynomial.from_highest([1, -3, 2]))
    assert exc.value.census.on_circle == 1
    with pytest.raises(NotPisotError):
        pisot_root(RealPolynomial.from_highest([1, 0, -4]))  # roots +-2


def test_sequence_S_converges():
    seq = pisot_to_salem_sequence(GOLDEN, range(5, 21), "S")
    res = [s.residual for s in seq]
    assert all(b < a for a, b in zip(res, res[1:]))
    assert res[-1] < 1e-4
    assert [s.index for s in seq] == list(range(10, 41, 2))
    for s in seq:
        assert s.census.outside == 1
        assert is_salem_numeric(s.poly)


def test_sequence_R():
    (s,) = pisot_to_salem_sequence(GOLDEN, [10], "R")
    assert s.poly.format("w") == "w^12 - w^11 - w^10 - w^2 - w + 1"
    assert abs(s.poly(s.tau)) < 1e-12
    seq = pisot_to_salem_sequence(GOLDEN, range(4, 40, 5), "R")
    assert seq[-1].residual < seq[0].residual / 10


def test_other_pisot_target():
    # x^3 - x - 1: the plastic number
    P = RealPolynomial.from_highest([1, 0, -1, -1])
    q = pisot_root(P)
    assert q == pytest.approx(1.324717957244746)
    seq = pisot_to_salem_sequence(P, [5, 10, 20, 40], "S")
    assert seq[-1].residual < seq[0].residual / 10
    assert all(s.census.outside <= 1 for s in seq)


def test_consistency_with_rootfinder():
    a = (1, -1, -1)
    for n in (4, 9, 15):
        S = salem_S(char_poly(a), n)
        w = np.roots(S.highest_first())
        x_images = np.sort_complex(np.round(0.5 * (w + 1 / w), 9))
        x_images = np.unique(x_images)
        zs = all_zeros_U(a, n).roots
        assert len(zs) == n
        for z in zs:
            assert np.min(np.abs(x_images - z)) < 1e-7


def test_degenerate_index_reported():
    (s,) = pisot_to_salem_sequence(GOLDEN, [2], "S")
    assert s.tau == pytest.approx(1.0, abs=1e-6)
    assert s.census.outside == 0


def test_bad_kind():
    with pytest.raises(ValueError):
        pisot_to_salem_sequence(GOLDEN, [3], "X")
