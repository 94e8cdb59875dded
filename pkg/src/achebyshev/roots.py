"""Zeros of A-Chebyshev polynomials and their limit sets.

Two independent routes are provided:

* real zeros in [-1, 1] from sign changes in ``theta`` of
  ``cos((n-m)t) C(t) - sin((n-m)t) S(t)``, which equals ``T_{n,A}(cos t)``;
* all complex zeros from the palindromic ``w``-plane polynomials
  ``R_{2n-m}`` (first kind) and ``S_2n`` (second kind), whose roots come in
  pairs ``(w, 1/w)`` that map to a single ``x = (w + 1/w)/2``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np

from .aberth import RootSet, complex_roots
from .core import as_tuple, char_poly, eval_T_A, eval_U_A
from .errors import DegreeCapError
from .salem import salem_R, salem_S

DEGREE_CAP = 512
PAIR_TOL = 1e-8

__all__ = [
    "DEGREE_CAP",
    "RootSet",
    "LimitPointReport",
    "all_zeros_T",
    "all_zeros_U",
    "complex_roots",
    "interlacing_check",
    "limit_set_experiment",
    "max_gap",
    "pair_reciprocal",
    "persistent_zeros",
    "real_zeros_theta",
]


def _theta_function(A, n: int, kind: str):
    m = A.m
    k = np.arange(m + 1)
    a = np.asarray(A.a)
    if kind == "T":
        def g(t):
            t = np.asarray(t, dtype=float)
            C = np.cos(np.multiply.outer(t, m - k)) @ a
            S = np.sin(np.multiply.outer(t, m - k)) @ a
            return np.cos((n - m) * t) * C - np.sin((n - m) * t) * S
    else:
        # sin(t) U_{n,A}(cos t) = sum a_k sin((n+1-k) t)
        def g(t):
            t = np.asarray(t, dtype=float)
            C = np.cos(np.multiply.outer(t, m - k)) @ a
            S = np.sin(np.multiply.outer(t, m - k)) @ a
            return np.sin((n + 1 - m) * t) * C - np.cos((n + 1 - m) * t) * S
    return g


def _theta_roots(A, n: int, kind: str = "T") -> np.ndarray:
    """Roots of the theta-equation in the open interval (0, pi), ascending."""
    g = _theta_function(A, n, kind)
    count = 8 * (n + 1)
    t = np.linspace(0.0, np.pi, count + 1)
    v = g(t)
    inner_t, inner_v = t[1:-1], v[1:-1]
    exact = inner_t[inner_v == 0]
    s = np.sign(v)
    idx = np.flatnonzero(s[:-1] * s[1:] < 0)
    lo, hi = t[idx].copy(), t[idx + 1].copy()
    glo = v[idx].copy()
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        gm = g(mid)
        left = np.sign(gm) == np.sign(glo)
        lo = np.where(left, mid, lo)
        glo = np.where(left, gm, glo)
        hi = np.where(left, hi, mid)
    roots = np.concatenate([0.5 * (lo + hi), exact])
    return np.sort(roots)


def real_zeros_theta(A, n: int, kind: str = "T") -> list[float]:
    """Zeros of ``T_{n,A}`` (or ``U_{n,A}``) in [-1, 1], ascending.

    Bracketing runs on an ``8(n+1)``-point uniform grid in ``theta`` and each
    bracket is bisected to the limit of double precision. The end points
    ``x = +-1`` are tested directly.
    """
    A = as_tuple(A)
    kind = kind.upper()
    if n < A.m:
        raise ValueError(f"n must be >= m = {A.m}")
    xs = list(np.cos(_theta_roots(A, n, kind)))
    ev = eval_T_A if kind == "T" else eval_U_A
    scale = float(np.abs(A.a).sum()) * (1 if kind == "T" else n + 1)
    for end in (1.0, -1.0):
        if abs(ev(A, n, end)) <= 1e-13 * scale:
            xs.append(end)
    return sorted(float(x) for x in xs)


def pair_reciprocal(roots: np.ndarray, tol: float = 1e-6) -> np.ndarray:
    """Match each root ``w`` with the nearest remaining root to ``1/w``.

    Roots are processed by decreasing modulus. On the unit circle ``1/w`` is
    ``conj(w)``, so those roots pair with their conjugates. Returns the partner
    index per root, ``-1`` where no partner lies within ``tol`` (relative).
    """
    roots = np.asarray(roots, dtype=complex)
    partner = np.full(len(roots), -1, dtype=int)
    free = np.ones(len(roots), dtype=bool)
    for i in np.argsort(-np.abs(roots), kind="stable"):
        if not free[i]:
            continue
        free[i] = False
        cand = np.flatnonzero(free)
        if cand.size == 0:
            break
        target = 1 / roots[i]
        dist = np.abs(roots[cand] - target)
        j = cand[np.argmin(dist)]
        if dist.min() <= tol * max(1.0, abs(target)):
            partner[i], partner[j] = j, i
            free[j] = False
        else:
            free[i] = True
    return partner


def _x_from_pairs(rs: RootSet, n: int) -> RootSet:
    w = rs.roots
    partner = pair_reciprocal(w)
    xs, res, pairs = [], [], []
    used = np.zeros(len(w), dtype=bool)
    for i in np.argsort(-np.abs(w), kind="stable"):
        if used[i]:
            continue
        j = partner[i]
        used[i] = True
        if j >= 0:
            used[j] = True
            x = 0.25 * (w[i] + 1 / w[i] + w[j] + 1 / w[j])
            r = max(rs.residuals[i], rs.residuals[j])
            pairs.append((complex(w[i]), complex(w[j])))
        else:
            x = 0.5 * (w[i] + 1 / w[i])
            r = rs.residuals[i]
            pairs.append((complex(w[i]), None))
        if abs(x.imag) <= 1e-9 * max(1.0, abs(x)):
            x = complex(x.real, 0.0)
        xs.append(x)
        res.append(r)
    xs = np.asarray(xs, dtype=complex)
    order = np.lexsort((xs.imag, xs.real))
    return RootSet(xs[order], np.asarray(res)[order], pairing=None,
                   w_pairs=[pairs[k] for k in order])


def all_zeros_T(A, n: int, cap: int = DEGREE_CAP) -> RootSet:
    """All ``n`` zeros of ``T_{n,A}`` in the complex ``x``-plane.

    Solves ``R_{2n-m}(w) = w^(2n-m) P(w) + Q(w) = 0`` (degree ``2n``), pairs the
    roots under ``w -> 1/w`` and maps each pair to ``x``.

    Raises
    ------
    DegreeCapError
        If ``2n`` exceeds ``cap``.
    """
    A = as_tuple(A)
    if n < A.m:
        raise ValueError(f"n must be >= m = {A.m}")
    if 2 * n > cap:
        raise DegreeCapError(f"degree {2 * n} exceeds cap {cap}")
    if n == 0:
        return RootSet(np.zeros(0, dtype=complex), np.zeros(0))
    R = salem_R(char_poly(A), 2 * n - A.m)
    return _x_from_pairs(complex_roots(R), n)


def all_zeros_U(A, n: int, cap: int = DEGREE_CAP) -> RootSet:
    """All ``n`` zeros of ``U_{n,A}``, from the roots of ``S_2n``."""
    A = as_tuple(A)
    if n < A.m:
        raise ValueError(f"n must be >= m = {A.m}")
    if 2 * n > cap:
        raise DegreeCapError(f"degree {2 * n} exceeds cap {cap}")
    if n == 0:
        return RootSet(np.zeros(0, dtype=complex), np.zeros(0))
    S = salem_S(char_poly(A), n)
    return _x_from_pairs(complex_roots(S), n)


def persistent_zeros(A, tol: float = PAIR_TOL) -> list[complex]:
    """Zeros shared by every member of the family.

    These come from roots ``w`` of ``P_A`` whose reciprocal ``1/w`` is also a
    root; the common zero is ``x = (w + 1/w)/2``, one value per pair.
    Self-reciprocal roots ``w = +-1`` give ``x = +-1``.
    """
    A = as_tuple(A)
    if A.m == 0:
        return []
    w = complex_roots(char_poly(A)).roots
    used = np.zeros(len(w), dtype=bool)
    out = []
    for i in np.argsort(-np.abs(w), kind="stable"):
        if used[i]:
            continue
        target = 1 / w[i]
        cand = np.flatnonzero(~used)
        dist = np.abs(w[cand] - target)
        j = cand[np.argmin(dist)]
        if dist.min() > tol * max(1.0, abs(target)):
            continue
        used[i] = used[j] = True
        x = 0.5 * (w[i] + 1 / w[i])
        if abs(x.imag) <= 1e-9:
            x = complex(x.real, 0.0)
        out.append(complex(x))
    return sorted(out, key=lambda z: (z.real, z.imag))


def max_gap(zeros: Sequence[float]) -> float:
    """Largest distance from a point of [-1, 1] to the nearest end of a gap,
    counting -1 and 1 as gap ends."""
    z = np.sort(np.clip(np.asarray(zeros, dtype=float), -1, 1))
    pts = np.concatenate([[-1.0], z, [1.0]])
    return float(np.diff(pts).max())


@dataclass
class LimitPointReport:
    """Predicted limit points of the zero sets and the measured approach."""

    tuple_: tuple[float, ...]
    n_list: list[int]
    predicted: list[complex]
    interval: tuple[float, float] = (-1.0, 1.0)
    distances: dict = field(default_factory=dict)
    max_gap: dict = field(default_factory=dict)
    distances_U: dict = field(default_factory=dict)
    max_gap_U: dict = field(default_factory=dict)
    persistent: list[complex] = field(default_factory=list)

    def as_dict(self) -> dict:
        def pt(z):
            return {"re": float(z.real), "im": float(z.imag), "complex": bool(z.imag != 0)}

        def table(d):
            return [
                {"point": pt(p), "n": int(n), "distance": float(v)}
                for p, row in d.items() for n, v in row.items()
            ]

        return {
            "tuple": list(self.tuple_),
            "n_list": [int(n) for n in self.n_list],
            "predicted": {"interval": list(self.interval), "points": [pt(z) for z in self.predicted]},
            "persistent_zeros": [pt(z) for z in self.persistent],
            "distances": {"T": table(self.distances), "U": table(self.distances_U)},
            "max_gap": {
                "T": [{"n": int(n), "gap": float(g)} for n, g in self.max_gap.items()],
                "U": [{"n": int(n), "gap": float(g)} for n, g in self.max_gap_U.items()],
            },
        }


def predicted_points(A, tol: float = 1e-9) -> list[complex]:
    """``(w + 1/w)/2`` for every root ``w`` of ``P_A`` outside the unit circle."""
    A = as_tuple(A)
    if A.m == 0:
        return []
    w = complex_roots(char_poly(A)).roots
    out = []
    for z in w[np.abs(w) > 1 + tol]:
        x = 0.5 * (z + 1 / z)
        if abs(x.imag) <= 1e-12:
            x = complex(x.real, 0.0)
        out.append(complex(x))
    return sorted(out, key=lambda z: (z.real, z.imag))


def limit_set_experiment(A, n_list: Sequence[int], kind: str = "both") -> LimitPointReport:
    """Measure how the zero sets approach their predicted limit points.

    For every root ``w`` of ``P_A`` with ``|w| > 1`` and every ``n`` the
    distance from ``(w + 1/w)/2`` to the nearest zero is recorded, together
    with the largest gap left by the real zeros in [-1, 1].
    """
    A = as_tuple(A)
    kind = kind.upper()
    if any(n < A.m for n in n_list):
        raise ValueError(f"every n must be >= m = {A.m}")
    report = LimitPointReport(A.a, list(n_list), predicted_points(A), persistent=persistent_zeros(A))
    families = []
    if kind in ("T", "BOTH"):
        families.append(("T", all_zeros_T, report.distances, report.max_gap))
    if kind in ("U", "BOTH"):
        families.append(("U", all_zeros_U, report.distances_U, report.max_gap_U))
    for fam, solver, dist, gaps in families:
        for p in report.predicted:
            dist[p] = {}
        for n in n_list:
            zs = solver(A, n).roots if report.predicted else None
            for p in report.predicted:
                dist[p][n] = float(np.abs(zs - p).min()) if len(zs) else float("inf")
            gaps[n] = max_gap(real_zeros_theta(A, n, fam))
    return report


class InterlacingResult(NamedTuple):
    ok: bool
    violation: tuple[float, float] | None

    def __bool__(self):
        return self.ok


def interlacing_check(A, n: int) -> InterlacingResult:
    """Check that between consecutive theta-roots for index ``n`` there is a
    theta-root for index ``2n - m``.

    The first offending pair of consecutive roots (in ``theta``) is returned
    as the violation.
    """
    A = as_tuple(A)
    if n <= A.m:
        raise ValueError(f"n must be > m = {A.m}")
    coarse = _theta_roots(A, n)
    fine = _theta_roots(A, 2 * n - A.m)
    for lo, hi in zip(coarse[:-1], coarse[1:]):
        i = np.searchsorted(fine, lo, side="right")
        if i >= len(fine) or fine[i] >= hi:
            return InterlacingResult(False, (float(lo), float(hi)))
    return InterlacingResult(True, None)
