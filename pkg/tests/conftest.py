import numpy as np
import pytest


def recurrence_T(n, x):
    """Independent oracle: T_k = 2x T_{k-1} - T_{k-2}."""
    t0, t1 = 1.0, x
    if n == 0:
        return t0
    for _ in range(n - 1):
        t0, t1 = t1, 2 * x * t1 - t0
    return t1


def recurrence_U(n, x):
    u0, u1 = 1.0, 2 * x
    if n == 0:
        return u0
    for _ in range(n - 1):
        u0, u1 = u1, 2 * x * u1 - u0
    return u1


def random_tuple(rng, m_max, lo=-2.0, hi=2.0, m_min=0):
    m = int(rng.integers(m_min, m_max + 1))
    a = rng.uniform(lo, hi, m + 1)
    # keep end coefficients away from zero
    a[0] = np.copysign(max(abs(a[0]), 0.1), a[0])
    a[-1] = np.copysign(max(abs(a[-1]), 0.1), a[-1])
    return tuple(float(v) for v in a)


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)
