"""A-tuples, their characteristic polynomials and A-Chebyshev evaluation.

For ``A = (a0, ..., am)`` the first-kind family is
``T_{n,A} = a0 T_n + a1 T_{n-1} + ... + am T_{n-m}`` and the second-kind
family uses ``U`` in place of ``T``. Each is evaluated by direct summation and,
independently, through the characteristic polynomial in the ``w`` variable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidTupleError, SingularInputError
from .kernel import cheb_t, cheb_u, w_map


@dataclass(frozen=True)
class ATuple:
    """Coefficients ``(a0, ..., am)`` of an A-Chebyshev family."""

    a: tuple[float, ...]

    def __post_init__(self):
        a = tuple(float(v) for v in self.a)
        if not a:
            raise InvalidTupleError("tuple must have at least one entry")
        if not all(np.isfinite(a)):
            raise InvalidTupleError("tuple entries must be finite reals")
        if a[0] == 0:
            raise InvalidTupleError("a0 must be nonzero")
        if a[-1] == 0:
            raise InvalidTupleError("am must be nonzero")
        object.__setattr__(self, "a", a)

    @property
    def m(self) -> int:
        return len(self.a) - 1

    def __iter__(self):
        return iter(self.a)

    def __len__(self):
        return len(self.a)

    def __str__(self):
        return "(" + ", ".join(f"{v:g}" for v in self.a) + ")"


def as_tuple(A) -> ATuple:
    return A if isinstance(A, ATuple) else ATuple(tuple(A))


@dataclass(frozen=True)
class RealPolynomial:
    """Dense real polynomial, coefficients stored lowest degree first.

    Trailing (highest-degree) zeros are stripped, so ``coeffs[-1]`` is the
    leading coefficient unless the polynomial is zero.
    """

    coeffs: tuple[float, ...]

    def __post_init__(self):
        c = [float(v) for v in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c:
            c = [0.0]
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def from_highest(cls, coeffs: Iterable[float]) -> "RealPolynomial":
        return cls(tuple(coeffs)[::-1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.coeffs)

    def highest_first(self) -> tuple[float, ...]:
        return self.coeffs[::-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0.0,)

    def __call__(self, z):
        # Horner
        z = np.asarray(z)
        out = np.zeros_like(z, dtype=np.result_type(z, float))
        for c in reversed(self.coeffs):
            out = out * z + c
        return out[()] if out.ndim == 0 else out

    def derivative(self) -> "RealPolynomial":
        c = self.coeffs
        return RealPolynomial(tuple(k * c[k] for k in range(1, len(c))) or (0.0,))

    def shift(self, k: int) -> "RealPolynomial":
        """Multiply by ``x**k``."""
        if self.is_zero():
            return self
        return RealPolynomial((0.0,) * k + self.coeffs)

    def reciprocal(self) -> "RealPolynomial":
        """Coefficient reversal, ``x**deg * p(1/x)``."""
        return RealPolynomial(self.coeffs[::-1])

    def is_palindromic(self, rtol: float = 0.0) -> bool:
        c = self.array
        if rtol == 0.0:
            return bool(np.array_equal(c, c[::-1]))
        return bool(np.allclose(c, c[::-1], rtol=rtol, atol=rtol * np.abs(c).max()))

    def __add__(self, other: "RealPolynomial") -> "RealPolynomial":
        return RealPolynomial(tuple(np.polynomial.polynomial.polyadd(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RealPolynomial") -> "RealPolynomial":
        return RealPolynomial(tuple(np.polynomial.polynomial.polysub(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        if isinstance(other, RealPolynomial):
            return RealPolynomial(tuple(np.polynomial.polynomial.polymul(self.coeffs, other.coeffs)))
        return RealPolynomial(tuple(float(other) * c for c in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, RealPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def format(self, var: str = "x") -> str:
        """Human-readable form, highest degree first."""
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0 and self.degree > 0:
                continue
            mag = abs(c)
            if k == 0:
                body = f"{mag:g}"
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag:g}*{power}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self):
        return self.format()


def char_poly(A) -> RealPolynomial:
    """Characteristic polynomial ``a0 x^m + a1 x^(m-1) + ... + am``."""
    A = as_tuple(A)
    return RealPolynomial.from_highest(A.a)


def reciprocal(p: RealPolynomial) -> RealPolynomial:
    """Reciprocal polynomial ``x^deg p(1/x)`` (coefficient reversal)."""
    return p.reciprocal()


def _check_order(A: ATuple, n: int):
    if int(n) != n or n < A.m:
        raise ValueError(f"n must be an integer >= m = {A.m}, got {n}")


def eval_T_A(A, n: int, x):
    """First-kind A-Chebyshev polynomial by direct summation of ``a_i T_{n-i}``."""
    A = as_tuple(A)
    _check_order(A, n)
    return sum(a * cheb_t(n - i, x) for i, a in enumerate(A.a))


def eval_U_A(A, n: int, x):
    """Second-kind A-Chebyshev polynomial by direct summation of ``a_i U_{n-i}``."""
    A = as_tuple(A)
    _check_order(A, n)
    return sum(a * cheb_u(n - i, x) for i, a in enumerate(A.a))


def eval_T_A_wform(A, n: int, x):
    """First-kind family through the characteristic polynomial.

    Returns ``(P(w) w^(n-m) + P(1/w) w^-(n-m)) / 2`` with ``w = w_map(x)``.
    The result is complex; for real ``x`` its imaginary part is rounding noise.
    """
    A = as_tuple(A)
    _check_order(A, n)
    P = char_poly(A)
    w = np.asarray(w_map(x), dtype=complex)
    k = n - A.m
    out = 0.5 * (P(w) * w**k + P(1 / w) * w ** (-k))
    return complex(out) if out.ndim == 0 else out


def eval_U_A_wform(A, n: int, x):
    """Second-kind family through the characteristic polynomial.

    Returns ``(w^(n+1-m) P(w) - w^-(n+1-m) P(1/w)) / (w - 1/w)``.

    Raises
    ------
    SingularInputError
        At ``x = +-1`` where ``w - 1/w`` vanishes; use :func:`eval_U_A` there.
    """
    A = as_tuple(A)
    _check_order(A, n)
    xa = np.asarray(x)
    if np.any((xa == 1) | (xa == -1)):
        raise SingularInputError("w - 1/w vanishes at x = +-1")
    P = char_poly(A)
    w = np.asarray(w_map(x), dtype=complex)
    k = n + 1 - A.m
    out = (w**k * P(w) - w ** (-k) * P(1 / w)) / (w - 1 / w)
    return complex(out) if out.ndim == 0 else out


def trig_sum_T(A, n: int, theta):
    """``sum_k a_k cos((n-k) theta)``, the first-kind family at ``x = cos theta``."""
    A = as_tuple(A)
    theta = np.asarray(theta, dtype=float)
    return sum(a * np.cos((n - k) * theta) for k, a in enumerate(A.a))


def tuple_from_poly(p: RealPolynomial) -> ATuple:
    """The A-tuple whose characteristic polynomial is ``p``."""
    return ATuple(p.highest_first())


def parse_numbers(text: str | Sequence[float]) -> tuple[float, ...]:
    if isinstance(text, str):
        parts = [t for t in text.replace(" ", "").split(",") if t]
        return tuple(float(t) for t in parts)
    return tuple(float(t) for t in text)
