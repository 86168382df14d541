"""Exact polar values q * (N-1)^e1 * N^e2 * exp(2*pi*i*ang).

Every quantity appearing in the frame data at the evaluation point is of
this shape: a positive rational modulus carrying rational exponents of
N-1 and of N, times a root of unity with rational angle.  Since N-1 and
N are coprime, the representation with q > 0, the integer parts of e1
and e2 folded into q, and ang reduced mod 1 is unique, which makes
equality an honest structural comparison.

For N = 2 the base N-1 = 1 is degenerate and e1 is forced to 0.
"""
from __future__ import annotations

from .rational import Q, QONE, QZERO, rat_str


def _floor_q(a):
    a = Q(a)
    return a.numerator // a.denominator


def _split_exponent(base: int, e):
    """Write base^e = q * base^f with f = e mod 1 in [0,1) and q a
    positive rational."""
    e = Q(e)
    fl = int(_floor_q(e))
    frac = e - fl
    q = Q(base) ** fl
    return q, frac


def _mod1(a):
    a = Q(a)
    return a - _floor_q(a)


class ExactPolar:
    """Immutable normalized polar value for a fixed N >= 2."""

    __slots__ = ("N", "q", "e1", "e2", "ang")

    def __init__(self, N: int, q, e1=0, e2=0, ang=0):
        assert N >= 2
        q = Q(q)
        e1, e2, ang = Q(e1), Q(e2), Q(ang)
        if q == 0:
            q, e1, e2, ang = QZERO, QZERO, QZERO, QZERO
        else:
            if q < 0:
                q = -q
                ang = ang + Q(1, 2)
            if N == 2:
                e1 = QZERO  # (N-1)^e1 = 1
            else:
                f1, e1 = _split_exponent(N - 1, e1)
                q = q * f1
            f2, e2 = _split_exponent(N, e2)
            q = q * f2
            ang = _mod1(ang)
        object.__setattr__(self, "N", N)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "e1", e1)
        object.__setattr__(self, "e2", e2)
        object.__setattr__(self, "ang", ang)

    def __setattr__(self, name, value):
        raise AttributeError("ExactPolar is immutable")

    @classmethod
    def zero(cls, N):
        return cls(N, 0)

    @classmethod
    def one(cls, N):
        return cls(N, 1)

    def is_zero(self):
        return self.q == 0

    def __mul__(self, other):
        if isinstance(other, ExactPolar):
            assert other.N == self.N
            return ExactPolar(self.N, self.q * other.q, self.e1 + other.e1,
                              self.e2 + other.e2, self.ang + other.ang)
        return ExactPolar(self.N, self.q * Q(other), self.e1, self.e2,
                          self.ang)

    __rmul__ = __mul__

    def __neg__(self):
        return ExactPolar(self.N, self.q, self.e1, self.e2,
                          self.ang + Q(1, 2))

    def inv(self):
        if self.q == 0:
            raise ZeroDivisionError("inverse of zero polar value")
        return ExactPolar(self.N, QONE / self.q, -self.e1, -self.e2,
                          -self.ang)

    def __truediv__(self, other):
        if isinstance(other, ExactPolar):
            return self * other.inv()
        return ExactPolar(self.N, self.q / Q(other), self.e1, self.e2,
                          self.ang)

    def pow(self, e):
        """Raise to a rational power.

        Only legitimate when the result stays single-valued in this
        representation: the angle must scale to a rational, which it
        always does, and we pick the principal branch ang -> e*ang.
        """
        e = Q(e)
        if self.q == 0:
            assert e > 0
            return ExactPolar.zero(self.N)
        # q^e must itself be expressible; demand integer e unless q == 1
        if e.denominator != 1 and self.q != 1:
            raise ValueError("rational power of a non-unit modulus is not "
                             "representable exactly")
        qp = self.q ** int(e) if e.denominator == 1 else QONE
        return ExactPolar(self.N, qp, self.e1 * e, self.e2 * e, self.ang * e)

    def __add__(self, other):
        """Addition only for values sharing (e1, e2, ang): the structured
        parts must match, so the sum stays in the class."""
        if not isinstance(other, ExactPolar):
            return NotImplemented
        assert other.N == self.N
        if self.q == 0:
            return other
        if other.q == 0:
            return self
        if (self.e1, self.e2) == (other.e1, other.e2):
            if self.ang == other.ang:
                return ExactPolar(self.N, self.q + other.q, self.e1,
                                  self.e2, self.ang)
            if _mod1(self.ang - other.ang) == Q(1, 2):
                return ExactPolar(self.N, self.q - other.q, self.e1,
                                  self.e2, self.ang)
        raise ValueError("sum leaves the exact polar class")

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, ExactPolar):
            return NotImplemented
        return (self.N == other.N and self.q == other.q
                and self.e1 == other.e1 and self.e2 == other.e2
                and self.ang == other.ang)

    def __hash__(self):
        return hash((self.N, self.q, self.e1, self.e2, self.ang))

    def __repr__(self):
        if self.q == 0:
            return "ExactPolar(0)"
        return (f"ExactPolar({self.N}; {self.q} * {self.N - 1}^({self.e1})"
                f" * {self.N}^({self.e2}) * e(2pi i * {self.ang}))")

    def to_json(self):
        return {"q": rat_str(self.q), "e1": rat_str(self.e1),
                "e2": rat_str(self.e2), "ang": rat_str(self.ang)}


def roots_of_unity_sum(N: int, step, extra_ang=0):
    """sum_{i=1..N} exp(2 pi i * (i*step + extra_ang)) as an ExactPolar.

    Equals N * exp(2 pi i * extra_ang) * exp(2 pi i * step * ?) collapsed:
    the arithmetic-progression sum vanishes unless step is an integer,
    in which case every term equals exp(2 pi i * extra_ang).
    """
    step = Q(step)
    if step.denominator == 1:
        return ExactPolar(N, N, 0, 0, extra_ang)
    # geometric sum of a nontrivial N-th root of unity: zero provided
    # N*step is an integer (the progression closes up)
    assert (Q(N) * step).denominator == 1, \
        "progression must run over N-th roots of unity"
    return ExactPolar.zero(N)
