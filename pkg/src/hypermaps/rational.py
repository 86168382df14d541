"""Exact rational scalars and small arithmetic helpers.

Everything exact in this package is built on one rational type ``Q``:
gmpy2.mpq when available (fast), fractions.Fraction otherwise.  Both
support the same operator surface and print as "n/d" (or "n" when the
denominator is 1), which is also the serialization format.
"""
from __future__ import annotations

import math

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is normally installed
    from fractions import Fraction as Q

QZERO = Q(0)
QONE = Q(1)

_RAT_TYPE = type(QONE)


def is_rational(x) -> bool:
    return isinstance(x, (_RAT_TYPE, int))


def rat_str(q) -> str:
    """Serialize as "num/den", or just "num" for integers."""
    return str(Q(q))


def parse_rat(s: str):
    if "/" in s:
        num, den = s.split("/")
        return Q(int(num), int(den))
    return Q(int(s))


def binomial_q(s, k: int):
    """Generalized binomial coefficient (s choose k) for rational s."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = QONE
    for j in range(k):
        out = out * (s - j) / (j + 1)
    return out


def factorial_q(n: int):
    return Q(math.factorial(n))


_HARMONIC = [QZERO]


def harmonic(m: int):
    """m-th harmonic number 1 + 1/2 + ... + 1/m, with harmonic(0) = 0.

    This is the integration constant appearing in the calibration of the
    logarithmic column of the S-matrix; the normalization is pinned by the
    telescoping property harmonic(m) - harmonic(m-1) = 1/m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    while len(_HARMONIC) <= m:
        k = len(_HARMONIC)
        _HARMONIC.append(_HARMONIC[-1] + Q(1, k))
    return _HARMONIC[m]
