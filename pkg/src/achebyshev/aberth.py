"""Simultaneous polynomial root finding (Aberth-Ehrlich iteration)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import RealPolynomial
from .errors import RootFindingError

EPS = np.finfo(float).eps


@dataclass
class RootSet:
    """Roots with per-root residuals and an optional reciprocal pairing.

    ``residuals[i]`` is ``|p(z)/p'(z)|`` at ``roots[i]``, i.e. the length of the
    Newton step still to be taken. ``pairing[i]`` is the index of the root
    matched with ``roots[i]`` under ``w -> 1/w`` (or -1 when unmatched).
    """

    roots: np.ndarray
    residuals: np.ndarray
    pairing: np.ndarray | None = None
    backward_errors: np.ndarray | None = None
    w_pairs: list = field(default_factory=list)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def real(self, tol: float = 1e-9) -> np.ndarray:
        """Sorted real parts of the roots whose imaginary part is below ``tol``."""
        r = self.roots
        keep = np.abs(r.imag) <= tol * np.maximum(1.0, np.abs(r))
        return np.sort(r[keep].real)


def _initial_guesses(c: np.ndarray) -> np.ndarray:
    """Starting points on circles read off the Newton polygon of ``log|c_k|``."""
    d = len(c) - 1
    with np.errstate(divide="ignore"):
        lg = np.log(np.abs(c))
    pts = [k for k in range(d + 1) if np.isfinite(lg[k])]
    hull = []
    for k in pts:
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            # drop j when it lies on or below the segment i -> k
            if (lg[j] - lg[i]) * (k - i) <= (lg[k] - lg[i]) * (j - i):
                hull.pop()
            else:
                break
        hull.append(k)
    z = []
    sigma = 0.7
    for i, j in zip(hull[:-1], hull[1:]):
        cnt = j - i
        u = np.exp((lg[i] - lg[j]) / cnt)
        ang = 2 * np.pi * np.arange(cnt) / cnt + 2 * np.pi * i / d + sigma
        z.append(u * np.exp(1j * ang))
    return np.concatenate(z)


def _horner2(c_high: np.ndarray, z: np.ndarray):
    """Value and derivative of the polynomial with highest-first ``c_high``."""
    p = np.full(z.shape, c_high[0], dtype=complex)
    dp = np.zeros(z.shape, dtype=complex)
    for a in c_high[1:]:
        dp = dp * z + p
        p = p * z + a
    return p, dp


def _newton_ratio(c: np.ndarray, z: np.ndarray):
    """``p(z)/p'(z)`` and the backward error ``|p(z)| / sum|c_k||z|^k``.

    For ``|z| > 1`` the reversed polynomial is evaluated at ``1/z`` to keep
    high-degree powers in range.
    """
    d = len(c) - 1
    ratio = np.empty(z.shape, dtype=complex)
    berr = np.empty(z.shape, dtype=float)
    inner = np.abs(z) <= 1
    if inner.any():
        zi = z[inner]
        p, dp = _horner2(c[::-1], zi)
        scale, _ = _horner2(np.abs(c[::-1]).astype(complex), np.abs(zi).astype(complex))
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio[inner] = p / dp
        berr[inner] = np.abs(p) / scale.real
    outer = ~inner
    if outer.any():
        y = 1 / z[outer]
        r, dr = _horner2(c, y)  # reversed polynomial, highest-first is c itself
        scale, _ = _horner2(np.abs(c).astype(complex), np.abs(y).astype(complex))
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio[outer] = 1.0 / (y * (d - y * dr / r))
        berr[outer] = np.abs(r) / scale.real
    return ratio, berr


def complex_roots(p: RealPolynomial, max_iter: int = 500, polish: int = 2) -> RootSet:
    """All complex roots of ``p`` by Aberth-Ehrlich simultaneous iteration.

    Roots of multiplicity ``k`` come back as ``k`` clustered copies, accurate
    to roughly ``eps**(1/k)``.

    Raises
    ------
    RootFindingError
        If the iteration cap is hit while some root still has a backward error
        well above rounding level.
    """
    c = np.asarray(p.coeffs, dtype=float)
    d = len(c) - 1
    if d < 1:
        raise ValueError("need a polynomial of degree >= 1")
    zeros_at_origin = 0
    while c[zeros_at_origin] == 0:
        zeros_at_origin += 1
    c = c[zeros_at_origin:] / c[-1]
    d = len(c) - 1
    if d == 0:
        z = np.zeros(zeros_at_origin, dtype=complex)
        return RootSet(z, np.zeros(zeros_at_origin), backward_errors=np.zeros(zeros_at_origin))

    z = _initial_guesses(c)
    active = np.ones(d, dtype=bool)
    berr = np.full(d, np.inf)
    stop = 4 * d * EPS
    for _ in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        ratio, be = _newton_ratio(c, z[idx])
        berr[idx] = be
        diff = z[idx, None] - z[None, :]
        diff[np.arange(idx.size), idx] = np.inf
        s = (1.0 / diff).sum(axis=1)
        with np.errstate(invalid="ignore", divide="ignore", over="ignore"):
            corr = ratio / (1.0 - ratio * s)
        bad = ~np.isfinite(corr)
        corr[bad] = 0.0
        z[idx] = z[idx] - corr
        done = (be <= stop) | (np.abs(corr) <= 2 * EPS * np.abs(z[idx])) | bad
        active[idx[done]] = False
    else:
        ratio, berr = _newton_ratio(c, z)
        if np.any(berr > 1e-10):
            raise RootFindingError(
                f"Aberth iteration did not converge in {max_iter} steps "
                f"(worst backward error {berr.max():.3g})")

    for _ in range(polish):
        ratio, be = _newton_ratio(c, z)
        step = np.where(np.isfinite(ratio), ratio, 0.0)
        cand = z - step
        _, be_new = _newton_ratio(c, cand)
        better = be_new < be
        z = np.where(better, cand, z)

    ratio, berr = _newton_ratio(c, z)
    resid = np.abs(np.where(np.isfinite(ratio), ratio, 0.0))
    # conjugate symmetry of real polynomials: snap near-real roots
    near_real = np.abs(z.imag) <= 4 * EPS * np.abs(z)
    z = np.where(near_real, z.real + 0j, z)
    if zeros_at_origin:
        z = np.concatenate([z, np.zeros(zeros_at_origin, dtype=complex)])
        resid = np.concatenate([resid, np.zeros(zeros_at_origin)])
        berr = np.concatenate([berr, np.zeros(zeros_at_origin)])
    order = np.lexsort((z.imag, z.real))
    return RootSet(z[order], resid[order], backward_errors=berr[order])
