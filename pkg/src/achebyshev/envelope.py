"""Envelopes of A-Chebyshev families.

The square of the envelope is the Chebyshev series whose coefficients are the
autocorrelations of the tuple, ``c0 = sum a_i^2`` and
``c_k = 2 sum a_i a_{i+k}``. Equivalently it is ``P(w) P(1/w)`` with ``P``
the characteristic polynomial. Both forms are exposed so they can be checked
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as _cheb
from scipy.optimize import minimize_scalar

from .core import RealPolynomial, as_tuple, char_poly, trig_sum_T
from .kernel import ChebSeries, cheb_series_eval, w_map


@dataclass(frozen=True)
class EnvelopeSq:
    """Chebyshev series of the squared envelope; degree equals ``m``."""

    series: ChebSeries

    @property
    def coeffs(self) -> tuple[float, ...]:
        return self.series.coeffs

    @property
    def degree(self) -> int:
        return self.series.degree

    def __call__(self, x):
        return cheb_series_eval(self.series, x)


def envelope_sq_series(A) -> EnvelopeSq:
    A = as_tuple(A)
    a = np.asarray(A.a)
    m = A.m
    c = [float(np.dot(a, a))]
    c += [2.0 * float(np.dot(a[: m + 1 - k], a[k:])) for k in range(1, m + 1)]
    return EnvelopeSq(ChebSeries(tuple(c)))


def envelope_eval(A, x):
    """Envelope ``sqrt(|sum c_k T_k(x)|)``; defined for all real ``x``."""
    return np.sqrt(np.abs(envelope_sq_series(A)(x)))


def envelope_eval_charpoly(A, x):
    """Envelope as ``sqrt(|P(w) P(1/w)|)`` with ``w = w_map(x)``."""
    P = char_poly(A)
    w = w_map(x)
    out = np.sqrt(np.abs(P(w) * P(1 / np.asarray(w))))
    return float(out) if np.ndim(out) == 0 else out


def charpoly_product(A, x):
    """``P(w) P(1/w)`` without the modulus, complex-valued."""
    P = char_poly(A)
    w = np.asarray(w_map(x), dtype=complex)
    return P(w) * P(1 / w)


def envelope_expansion_m_le_4(A) -> RealPolynomial:
    """Squared envelope in the monomial basis for tuples with ``m <= 4``.

    The closed forms are written out term by term; the general
    autocorrelation series is the reference they are tested against.
    """
    A = as_tuple(A)
    m = A.m
    if m > 4:
        raise ValueError(f"closed-form expansion only for m <= 4, got m = {m}")
    a = list(A.a) + [0.0] * (4 - m)
    a0, a1, a2, a3, a4 = a
    sq = sum(v * v for v in a)
    if m == 0:
        return RealPolynomial((a0 * a0,))
    if m == 1:
        return RealPolynomial((a0**2 + a1**2, 2 * a0 * a1))
    if m == 2:
        return RealPolynomial((
            sq - 2 * a0 * a2,
            2 * a0 * a1 + 2 * a1 * a2,
            4 * a0 * a2,
        ))
    if m == 3:
        return RealPolynomial((
            sq - 2 * a0 * a2 - 2 * a1 * a3,
            2 * a0 * a1 + 2 * a1 * a2 + 2 * a2 * a3 - 6 * a0 * a3,
            4 * a0 * a2 + 4 * a1 * a3,
            8 * a0 * a3,
        ))
    return RealPolynomial((
        sq - 2 * a0 * a2 - 2 * a1 * a3 - 2 * a2 * a4 + 2 * a0 * a4,
        2 * a0 * a1 + 2 * a1 * a2 + 2 * a2 * a3 + 2 * a3 * a4 - 6 * a0 * a3 - 6 * a1 * a4,
        4 * a0 * a2 + 4 * a1 * a3 + 4 * a2 * a4 - 16 * a0 * a4,
        8 * a0 * a3 + 8 * a1 * a4,
        16 * a0 * a4,
    ))


def envelope_sq_monomial(A) -> RealPolynomial:
    """Squared envelope in the monomial basis for any ``m`` (basis conversion)."""
    return RealPolynomial(tuple(_cheb.cheb2poly(envelope_sq_series(A).coeffs)))


def envelope_zeros(A) -> list[float]:
    """Real zeros of the squared envelope in [-1, 1].

    These are the only points where the envelope can fail to be smooth.
    """
    from .roots import complex_roots

    p = envelope_sq_monomial(A)
    if p.degree < 1:
        return []
    rs = complex_roots(p)
    out = [z.real for z in rs.roots if abs(z.imag) <= 1e-6 and -1 - 1e-9 <= z.real <= 1 + 1e-9]
    return sorted(float(np.clip(v, -1, 1)) for v in out)


@dataclass(frozen=True)
class TouchPoint:
    x: float
    value: float  # T_{n,A}(x), equal to +-E(x)
    envelope: float
    slope_poly: float
    slope_envelope: float

    @property
    def slope_mismatch(self) -> float:
        s = np.sign(self.value)
        return abs(s * self.slope_poly - self.slope_envelope) / max(abs(self.slope_envelope), 1.0)


def _imag_part(A, n, theta):
    return sum(a * np.sin((n - k) * theta) for k, a in enumerate(A.a))


def _fd_slope(f, x, h):
    return (f(x + h) - f(x - h)) / (2 * h)


def tangency_points(A, n: int, gap_tol: float = 1e-6, floor: float = 1e-3) -> list[TouchPoint]:
    """Points of [-1, 1] where ``|T_{n,A}|`` touches the envelope.

    Local maxima of ``|T_{n,A}| / E`` are located on a uniform grid in
    ``theta`` (at least ``4n`` points), refined by golden-section search and
    polished as a zero of the companion sine sum, which vanishes exactly where
    the two curves meet. Slopes are centred finite differences in ``x`` with a
    step scaled to the local oscillation length.
    """
    from .core import eval_T_A

    A = as_tuple(A)
    E = lambda x: envelope_eval(A, x)  # noqa: E731
    T = lambda x: eval_T_A(A, n, x)  # noqa: E731

    count = max(4 * n, 64)
    theta = np.linspace(0.0, np.pi, count + 1)[1:-1]
    env = np.sqrt(np.abs(envelope_sq_series(A)(np.cos(theta))))
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(env > 0, np.abs(trig_sum_T(A, n, theta)) / env, 0.0)
    step = theta[1] - theta[0]

    def neg_ratio(t):
        e = np.sqrt(abs(envelope_sq_series(A)(np.cos(t))))
        return -abs(trig_sum_T(A, n, t)) / e if e > 0 else 0.0

    out = []
    seen = []
    for i in range(1, len(theta) - 1):
        if not (ratio[i] >= ratio[i - 1] and ratio[i] >= ratio[i + 1]):
            continue
        lo, hi = theta[i] - step, theta[i] + step
        res = minimize_scalar(neg_ratio, bracket=(lo, theta[i], hi), method="golden",
                              options={"xtol": 1e-12})
        t = float(res.x)
        if not lo <= t <= hi:
            t = float(theta[i])
        # polish on the sine sum, which is zero exactly at a touch point
        f_lo, f_hi = _imag_part(A, n, t - step / 2), _imag_part(A, n, t + step / 2)
        if f_lo * f_hi < 0:
            a_, b_ = t - step / 2, t + step / 2
            for _ in range(80):
                mid = 0.5 * (a_ + b_)
                fm = _imag_part(A, n, mid)
                if fm == 0 or b_ - a_ < 1e-15:
                    break
                if (fm < 0) == (f_lo < 0):
                    a_, f_lo = mid, fm
                else:
                    b_ = mid
            t = 0.5 * (a_ + b_)
        x = float(np.cos(t))
        e, v = float(E(x)), float(T(x))
        if e <= floor or e - abs(v) >= gap_tol:
            continue
        if any(abs(x - s) < 1e-9 for s in seen):
            continue
        seen.append(x)
        s = max(np.sqrt(max(1 - x * x, 0.0)), 1e-4)
        h = 1e-4 * s / max(n, 1)
        h = min(h, 0.5 * (1 - abs(x))) if abs(x) < 1 else h
        out.append(TouchPoint(x, v, e, float(_fd_slope(T, x, h)), float(_fd_slope(E, x, h))))
    return out
