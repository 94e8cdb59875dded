"""Evaluation kernels for Chebyshev polynomials of the first and second kind.

All functions work inside and outside [-1, 1]. Real input goes through the
trigonometric form on [-1, 1] and the hyperbolic form outside; complex input
goes through the three-term recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import chebyshev as _cheb


@dataclass(frozen=True)
class ChebSeries:
    """Finite Chebyshev expansion ``sum(c[k] * T_k(x))``."""

    coeffs: tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coeffs)
        if not coeffs:
            raise ValueError("ChebSeries needs at least one coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return cheb_series_eval(self, x)


def _recurrence(n: int, x, u0, u1):
    """Run ``y_k = 2x y_{k-1} - y_{k-2}`` from ``(u0, u1)`` up to index n."""
    if n == 0:
        return u0
    prev, cur = u0, u1
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def _is_complex(x) -> bool:
    return np.iscomplexobj(x)


def cheb_t(n: int, x):
    """Chebyshev polynomial of the first kind, ``T_n(x)``.

    Parameters
    ----------
    n : int
        Non-negative order.
    x : float, complex or array_like
        Evaluation point(s); any real value is allowed.

    Returns
    -------
    float, complex or numpy.ndarray
        ``cos(n arccos x)`` for ``|x| <= 1`` and ``sign(x)**n cosh(n arccosh|x|)``
        otherwise. Orders 0 and 1 are returned exactly.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    scalar = np.ndim(x) == 0
    if _is_complex(x):
        x = np.asarray(x, dtype=complex)
        out = _recurrence(n, x, np.ones_like(x), x)
        return out[()] if scalar else out
    x = np.asarray(x, dtype=float)
    if n == 0:
        out = np.ones_like(x)
    elif n == 1:
        out = x.copy()
    else:
        ax = np.abs(x)
        inside = ax <= 1.0
        with np.errstate(invalid="ignore", over="ignore"):
            trig = np.cos(n * np.arccos(np.clip(x, -1.0, 1.0)))
            sign = np.where(x < 0, (-1.0) ** n, 1.0)
            hyp = sign * np.cosh(n * np.arccosh(np.maximum(ax, 1.0)))
        out = np.where(inside, trig, hyp)
    return float(out) if scalar else out


def cheb_u(n: int, x):
    """Chebyshev polynomial of the second kind, ``U_n(x)``.

    Uses ``sin((n+1)t)/sin t`` on (-1, 1), the hyperbolic analogue outside,
    and the limits ``U_n(1) = n+1``, ``U_n(-1) = (-1)**n (n+1)`` at the ends.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    scalar = np.ndim(x) == 0
    if _is_complex(x):
        x = np.asarray(x, dtype=complex)
        out = _recurrence(n, x, np.ones_like(x), 2 * x)
        return out[()] if scalar else out
    x = np.asarray(x, dtype=float)
    if n == 0:
        out = np.ones_like(x)
    elif n == 1:
        out = 2.0 * x
    else:
        ax = np.abs(x)
        sign = np.where(x < 0, (-1.0) ** n, 1.0)
        with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
            theta = np.arccos(np.clip(x, -1.0, 1.0))
            trig = np.sin((n + 1) * theta) / np.sin(theta)
            t = np.arccosh(np.maximum(ax, 1.0))
            hyp = sign * np.sinh((n + 1) * t) / np.sinh(t)
        out = np.where(ax < 1.0, trig, hyp)
        out = np.where(ax == 1.0, sign * (n + 1.0), out)
    return float(out) if scalar else out


def cheb_series_eval(s: ChebSeries, x):
    """Evaluate a Chebyshev series by Clenshaw's backward recurrence."""
    coeffs = s.coeffs if isinstance(s, ChebSeries) else ChebSeries(s).coeffs
    out = _cheb.chebval(x, np.asarray(coeffs))
    return float(out) if np.ndim(out) == 0 and not _is_complex(out) else out


def w_map(x):
    """Map ``x`` to ``w = x + sqrt(x**2 - 1)`` on the branch with ``|w| >= 1``.

    On the real interval [-1, 1] both branches have unit modulus; the root in
    the closed upper half plane is returned there. The inverse map is
    ``x = (w + 1/w) / 2``.
    """
    scalar = np.ndim(x) == 0
    if _is_complex(x):
        x = np.asarray(x, dtype=complex)
        s = np.sqrt((x - 1) * (x + 1))
        w1, w2 = x + s, x - s
        w = np.where(np.abs(w1) >= np.abs(w2), w1, w2)
        # unit-modulus tie: prefer the upper half plane
        tie = np.isclose(np.abs(w1), np.abs(w2), rtol=1e-15, atol=0)
        w = np.where(tie, np.where(w1.imag >= 0, w1, w2), w)
    else:
        x = np.asarray(x, dtype=float)
        ax = np.abs(x)
        with np.errstate(invalid="ignore"):
            s_out = np.sqrt((ax - 1) * (ax + 1))
            s_in = np.sqrt((1 - ax) * (1 + ax))
        outside = np.where(x >= 0, x + s_out, x - s_out)
        w = np.where(ax > 1, outside + 0j, x + 1j * s_in)
    return complex(w) if scalar else w


def x_map(w):
    """Inverse of :func:`w_map`, ``(w + 1/w) / 2``."""
    return 0.5 * (w + 1.0 / w)
