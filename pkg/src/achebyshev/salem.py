"""Salem sequences converging to a Pisot number.

Given the minimal polynomial ``P`` (degree ``m``) of a Pisot number ``q`` and
its reciprocal ``Q``, two families of palindromic polynomials are built:

* ``R_k(x) = x^k P(x) + Q(x)``, whose dominant roots tend to ``q`` as ``k`` grows;
* ``S_2n(w) = (w^(2n+2-m) P(w) - Q(w)) / (w^2 - 1)``, which is ``w^n`` times the
  second-kind A-Chebyshev polynomial at ``(w + 1/w)/2``.

Salem and Pisot structure is certified numerically by counting roots inside,
on and outside the unit circle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .aberth import complex_roots
from .core import RealPolynomial, as_tuple, char_poly, eval_T_A, eval_U_A
from .errors import DivisionRemainderError, NotPisotError
from .kernel import x_map


@dataclass(frozen=True)
class RootCensus:
    outside: int
    on_circle: int
    inside: int
    tol: float = 1e-6

    @property
    def total(self) -> int:
        return self.outside + self.on_circle + self.inside

    def as_dict(self) -> dict:
        return {"outside": self.outside, "on_circle": self.on_circle, "inside": self.inside}

    def __str__(self):
        return f"{self.outside} outside / {self.on_circle} on / {self.inside} inside (tol {self.tol:g})"


@dataclass(frozen=True)
class SalemApproximant:
    index: int
    kind: str
    poly: RealPolynomial
    tau: float
    residual: float
    census: RootCensus


def _as_poly(P) -> RealPolynomial:
    if isinstance(P, RealPolynomial):
        return P
    return char_poly(P)


def salem_R(P, k: int) -> RealPolynomial:
    """``x^k P(x) + Q(x)``, palindromic of degree ``k + deg P``."""
    P = _as_poly(P)
    if P.coeffs[0] == 0:
        raise ValueError("P must have a nonzero constant term")
    if k < 0:
        raise ValueError("k must be non-negative")
    return P.shift(k) + P.reciprocal()


def _div_by_w2_minus_1(N: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Quotient and remainder of ``N`` (lowest first) by ``w^2 - 1``.

    The lower half of the quotient is built from the constant term upwards and
    the upper half from the leading term downwards, so an anti-palindromic
    ``N`` gives a bit-exact palindromic quotient.
    """
    D = len(N) - 1
    top = np.zeros(D - 1)
    top[D - 2] = N[D]
    if D - 3 >= 0:
        top[D - 3] = N[D - 1]
    for j in range(D - 2, 1, -1):
        top[j - 2] = N[j] + top[j]
    bottom = np.zeros(D - 1)
    bottom[0] = -N[0]
    if D - 1 > 1:
        bottom[1] = -N[1]
    for j in range(2, D - 1):
        bottom[j] = bottom[j - 2] - N[j]
    half = (D - 1) // 2
    q = np.concatenate([bottom[: half + 1], top[half + 1:]])
    prod = np.polynomial.polynomial.polymul(q, [-1.0, 0.0, 1.0])
    rem = N - np.pad(prod, (0, len(N) - len(prod)))
    return q, rem


def salem_S(P, n: int) -> RealPolynomial:
    """Degree-``2n`` polynomial ``(w^(2n+2-m) P(w) - Q(w)) / (w^2 - 1)``.

    Raises
    ------
    DivisionRemainderError
        If the division by ``w^2 - 1`` is not exact to within 1e-10.
    """
    P = _as_poly(P)
    m = P.degree
    if P.coeffs[0] == 0:
        raise ValueError("P must have a nonzero constant term")
    if n < m:
        raise ValueError(f"n must be >= deg P = {m}")
    N = (P.shift(2 * n + 2 - m) - P.reciprocal()).array
    scale = max(1.0, np.abs(N).max())
    if abs(np.polynomial.polynomial.polyval(1.0, N)) > 1e-12 * scale * len(N) or \
            abs(np.polynomial.polynomial.polyval(-1.0, N)) > 1e-12 * scale * len(N):
        raise DivisionRemainderError("numerator does not vanish at w = +-1")
    q, rem = _div_by_w2_minus_1(N)
    if np.abs(rem).max() > 1e-10 * scale:
        raise DivisionRemainderError(f"division remainder {np.abs(rem).max():.3g}")
    return RealPolynomial(tuple(q))


def wform_identity_check(A, n: int, samples: Iterable[complex]) -> float:
    """Largest scaled deviation in ``2 w^n T_{n,A}(x) = R_{2n-m}(w)`` and
    ``w^n U_{n,A}(x) = S_2n(w)`` over the sample points, ``x = (w + 1/w)/2``."""
    A = as_tuple(A)
    P = char_poly(A)
    R = salem_R(P, 2 * n - A.m)
    S = salem_S(P, n)
    worst = 0.0
    for w in samples:
        w = complex(w)
        x = complex(x_map(w))
        lhs_t = 2 * w**n * eval_T_A(A, n, x)
        rhs_t = R(w)
        lhs_u = w**n * eval_U_A(A, n, x)
        rhs_u = S(w)
        worst = max(worst,
                    abs(lhs_t - rhs_t) / (1 + abs(rhs_t)),
                    abs(lhs_u - rhs_u) / (1 + abs(rhs_u)))
    return worst


def census_of(roots: Sequence[complex], tol: float = 1e-6) -> RootCensus:
    r = np.abs(np.asarray(roots))
    return RootCensus(int((r > 1 + tol).sum()), int(((r >= 1 - tol) & (r <= 1 + tol)).sum()),
                      int((r < 1 - tol).sum()), tol)


def root_census(p: RealPolynomial, tol: float = 1e-6) -> RootCensus:
    """Count roots of ``p`` outside, on and inside the unit circle."""
    return census_of(complex_roots(p).roots, tol)


def is_salem_numeric(p: RealPolynomial, tol: float = 1e-6) -> bool:
    """Numeric Salem test: palindromic, a single root beyond the unit circle
    which is real, and at least two roots on the circle."""
    if p.degree < 4 or not p.is_palindromic(rtol=1e-12):
        return False
    roots = complex_roots(p).roots
    big = roots[np.abs(roots) > 1 + tol]
    if len(big) != 1 or abs(big[0].imag) > 1e-8:
        return False
    return census_of(roots, tol).on_circle >= 2


def pisot_root(P, tol: float = 1e-6) -> float:
    """Dominant root ``q`` of ``P`` after a numeric Pisot check.

    Raises
    ------
    NotPisotError
        Unless exactly one root lies outside the unit circle, it is real and
        greater than one, and every other root has modulus below ``1 - tol``.
    """
    P = _as_poly(P)
    roots = complex_roots(P).roots
    census = census_of(roots, tol)
    big = roots[np.abs(roots) > 1 + tol]
    ok = (census.outside == 1 and census.on_circle == 0 and abs(big[0].imag) <= 1e-8
          and big[0].real > 1)
    if not ok:
        raise NotPisotError(f"{P.format()} is not Pisot: roots {census}", census)
    return float(big[0].real)


def _newton(p: RealPolynomial, x0: float, steps: int = 50) -> float:
    dp = p.derivative()
    x = x0
    for _ in range(steps):
        d = dp(x)
        if d == 0 or not np.isfinite(d):
            break
        step = p(x) / d
        if not np.isfinite(step):
            break
        x_new = x - step
        if abs(x_new - x) <= 4 * np.finfo(float).eps * abs(x):
            x = x_new
            break
        x = x_new
    return float(x)


def dominant_real_root(p: RealPolynomial, q: float | None = None) -> tuple[float, np.ndarray]:
    """Largest real root of ``p`` (with Newton polishing) and all roots."""
    roots = complex_roots(p).roots
    real = roots[np.abs(roots.imag) <= 1e-8].real
    if real.size == 0:
        if q is None:
            raise ValueError("polynomial has no real root")
        return _newton(p, 1.5 * q), roots
    tau = float(real.max())
    polished = _newton(p, tau, steps=5)
    if np.isfinite(polished) and abs(polished - tau) < 1e-6 * max(1.0, abs(tau)):
        tau = polished
    return tau, roots


def pisot_to_salem_sequence(P, indices: Iterable[int], kind: str = "S",
                            tol: float = 1e-6) -> list[SalemApproximant]:
    """Salem approximants to the Pisot root of ``P``.

    ``kind="R"`` uses ``R_k`` with ``k`` from ``indices``; ``kind="S"`` uses
    ``S_2n`` with ``n`` from ``indices`` (the stored index is ``2n``).
    """
    P = _as_poly(P)
    kind = kind.upper()
    if kind not in ("R", "S"):
        raise ValueError("kind must be 'R' or 'S'")
    q = pisot_root(P, tol)
    out = []
    for i in indices:
        poly = salem_R(P, i) if kind == "R" else salem_S(P, i)
        tau, roots = dominant_real_root(poly, q)
        out.append(SalemApproximant(
            index=i if kind == "R" else 2 * i,
            kind=kind,
            poly=poly,
            tau=tau,
            residual=abs(tau - q),
            census=census_of(roots, tol),
        ))
    return out
