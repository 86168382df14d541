"""Exact series arithmetic.

Provides:

* ``EpsLaurent`` -- Laurent polynomials in the genus parameter eps with
  rational coefficients (the coefficient ring of the tau function).
* ``UniSeries`` -- Laurent series in one variable over a declared
  coefficient ring, with an explicit truncation order.  ``trunc`` is the
  first exponent the series does *not* know; ``trunc is None`` marks an
  exact Laurent polynomial.  Arithmetic never reports coefficients at or
  beyond the truncation order.
* ``MultiSeries`` -- weight-capped series in countably many variables
  v_1, v_2, ... where v_k carries weight k; coefficients are EpsLaurent.
* ``residue``, ``lagrange_invert`` -- residue extraction and exact series
  reversion.
"""
from __future__ import annotations

import math

from .rational import Q, QONE, QZERO, is_rational, rat_str


class EpsLaurent:
    """Laurent polynomial in eps with rational coefficients.

    Stored sparsely as {exponent: nonzero rational}.  Immutable by
    convention: no method mutates self.
    """

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if v != 0:
                    c[int(e)] = v
        self.c = c

    @classmethod
    def const(cls, q):
        return cls({0: Q(q)})

    @classmethod
    def term(cls, q, e):
        return cls({e: Q(q)})

    def coeff(self, e):
        return self.c.get(e, QZERO)

    def min_exp(self):
        return min(self.c) if self.c else None

    def max_exp(self):
        return max(self.c) if self.c else None

    def __bool__(self):
        return bool(self.c)

    def _coerce(self, other):
        if isinstance(other, EpsLaurent):
            return other
        if is_rational(other):
            return EpsLaurent.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, QZERO) + v
            if w == 0:
                c.pop(e, None)
            else:
                c[e] = w
        out = EpsLaurent.__new__(EpsLaurent)
        out.c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        out = EpsLaurent.__new__(EpsLaurent)
        out.c = {e: -v for e, v in self.c.items()}
        return out

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if is_rational(other):
            if other == 0:
                return EpsLaurent()
            out = EpsLaurent.__new__(EpsLaurent)
            out.c = {e: v * other for e, v in self.c.items()}
            return out
        if not isinstance(other, EpsLaurent):
            return NotImplemented
        c = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                w = c.get(e, QZERO) + v1 * v2
                if w == 0:
                    c.pop(e, None)
                else:
                    c[e] = w
        out = EpsLaurent.__new__(EpsLaurent)
        out.c = c
        return out

    __rmul__ = __mul__

    def inv(self):
        if len(self.c) != 1:
            raise ZeroDivisionError("only monomials in eps are invertible")
        (e, v), = self.c.items()
        return EpsLaurent({-e: QONE / v})

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.c == other.c

    __hash__ = None

    def __repr__(self):
        if not self.c:
            return "EpsLaurent(0)"
        parts = []
        for e in sorted(self.c):
            v = self.c[e]
            if e == 0:
                parts.append(f"{v}")
            elif e == 1:
                parts.append(f"({v})*eps")
            else:
                parts.append(f"({v})*eps^{e}")
        return " + ".join(parts)

    def to_json(self):
        return {str(e): rat_str(self.c[e]) for e in sorted(self.c)}

    def exponents(self):
        return sorted(self.c)


class _RatRing:
    """Coefficient-ring adapter for plain rationals."""

    zero = QZERO
    one = QONE

    @staticmethod
    def coerce(v):
        return Q(v)

    @staticmethod
    def inv(v):
        return QONE / v

    @staticmethod
    def is_zero(v):
        return v == 0


class _EpsRing:
    zero = EpsLaurent()
    one = EpsLaurent.const(1)

    @staticmethod
    def coerce(v):
        if isinstance(v, EpsLaurent):
            return v
        return EpsLaurent.const(v)

    @staticmethod
    def inv(v):
        return v.inv()

    @staticmethod
    def is_zero(v):
        return not v


QRING = _RatRing()
EPSRING = _EpsRing()

_BIG = 1 << 60


class UniSeries:
    """Laurent series with finite principal part and explicit truncation."""

    __slots__ = ("var", "ring", "c", "trunc")

    def __init__(self, var, ring, coeffs=None, trunc=None):
        self.var = var
        self.ring = ring
        self.trunc = trunc
        c = {}
        if coeffs:
            for e, v in coeffs.items():
                if trunc is not None and e >= trunc:
                    continue
                if not ring.is_zero(v):
                    c[int(e)] = v
        self.c = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, var, ring, trunc=None):
        return cls(var, ring, {}, trunc)

    @classmethod
    def monomial(cls, var, ring, coef=1, exp=0, trunc=None):
        return cls(var, ring, {exp: ring.coerce(coef)}, trunc)

    @classmethod
    def from_coeff_list(cls, var, ring, coefs, min_exp=0, trunc=None):
        return cls(var, ring,
                   {min_exp + i: ring.coerce(v) for i, v in enumerate(coefs)},
                   trunc)

    # -- inspection ----------------------------------------------------

    def coeff(self, e):
        """Coefficient at exponent e; raises if e is beyond truncation."""
        if self.trunc is not None and e >= self.trunc:
            raise ValueError(
                f"coefficient of {self.var}^{e} not represented "
                f"(truncated at {self.trunc})")
        return self.c.get(e, self.ring.zero)

    def val(self):
        """Valuation: lowest stored exponent, or None for a zero series."""
        return min(self.c) if self.c else None

    def _val_or(self, default):
        return min(self.c) if self.c else default

    def exponents(self):
        return sorted(self.c)

    def is_zero(self):
        return not self.c

    # -- helpers -------------------------------------------------------

    def _check(self, other):
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
        if self.ring is not other.ring:
            raise ValueError("coefficient ring mismatch")

    def _new(self, coeffs, trunc):
        out = UniSeries.__new__(UniSeries)
        out.var = self.var
        out.ring = self.ring
        out.trunc = trunc
        if trunc is not None:
            coeffs = {e: v for e, v in coeffs.items() if e < trunc}
        out.c = {e: v for e, v in coeffs.items() if not self.ring.is_zero(v)}
        return out

    # -- ring operations -----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        self._check(other)
        ta = _BIG if self.trunc is None else self.trunc
        tb = _BIG if other.trunc is None else other.trunc
        t = min(ta, tb)
        c = dict(self.c)
        for e, v in other.c.items():
            w = c.get(e, self.ring.zero) + v
            if self.ring.is_zero(w):
                c.pop(e, None)
            else:
                c[e] = w
        return self._new(c, None if t == _BIG else t)

    def __neg__(self):
        return self._new({e: -v for e, v in self.c.items()}, self.trunc)

    def __sub__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return self + (-other)

    def scale(self, k):
        """Multiply every coefficient by a scalar or ring element."""
        k = self.ring.coerce(k)
        if self.ring.is_zero(k):
            return self._new({}, self.trunc)
        return self._new({e: v * k for e, v in self.c.items()}, self.trunc)

    def shifted(self, n):
        t = None if self.trunc is None else self.trunc + n
        return self._new({e + n: v for e, v in self.c.items()}, t)

    def truncated(self, t):
        if self.trunc is not None:
            t = min(t, self.trunc)
        return self._new(self.c, t)

    def __mul__(self, other):
        if not isinstance(other, UniSeries):
            if is_rational(other):
                return self.scale(other)
            try:
                return self.scale(other)
            except Exception:
                return NotImplemented
        self._check(other)
        # truncation of the product: each factor's unknown tail enters at
        # its trunc shifted by the other factor's valuation
        cand = []
        if self.trunc is not None:
            cand.append(self.trunc + other._val_or(0))
        if other.trunc is not None:
            cand.append(other.trunc + self._val_or(0))
        if not self.c or not other.c:
            t = min(cand) if cand else None
            return self._new({}, t)
        t = min(cand) if cand else None
        tt = _BIG if t is None else t
        c = {}
        zero = self.ring.zero
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                e = e1 + e2
                if e >= tt:
                    continue
                w = c.get(e, zero) + v1 * v2
                c[e] = w
        c = {e: v for e, v in c.items() if not self.ring.is_zero(v)}
        return self._new(c, t)

    __rmul__ = __mul__

    def inv(self, prec=None):
        """Multiplicative inverse as a truncated series.

        For a series of valuation v known modulo x^T the inverse is known
        modulo x^(T - 2v); ``prec`` can request less.
        """
        v = self.val()
        if v is None:
            raise ZeroDivisionError("inverse of zero series")
        lead = self.c[v]
        try:
            lead_inv = self.ring.inv(lead)
        except ZeroDivisionError:
            raise ZeroDivisionError("non-invertible leading term")
        if self.ring.is_zero(lead_inv) and not self.ring.is_zero(lead):
            raise ZeroDivisionError("non-invertible leading term")
        if self.trunc is None:
            if len(self.c) == 1:
                t = prec
                return self._new({-v: lead_inv}, t)
            if prec is None:
                raise ValueError("inverse of a non-monomial polynomial "
                                 "requires an explicit precision")
            t_res = prec
        else:
            t_res = self.trunc - 2 * v
            if prec is not None:
                t_res = min(t_res, prec)
        # self = lead * x^v * (1 + n), n of positive valuation
        n_prec = t_res + v
        n = {e - v: v2 * lead_inv for e, v2 in self.c.items()
             if e != v and e - v < n_prec}
        # geometric series for (1+n)^(-1)
        acc = {0: self.ring.one}
        if n:
            nv = min(n)
            power = dict(n)
            sign = -1
            k = 1
            while k * nv < n_prec:
                for e, val in power.items():
                    if e >= n_prec:
                        continue
                    w = acc.get(e, self.ring.zero) + (val if sign > 0 else -val)
                    acc[e] = w
                # next power of n
                k += 1
                if k * nv >= n_prec:
                    break
                newp = {}
                for e1, v1 in power.items():
                    for e2, v2 in n.items():
                        e = e1 + e2
                        if e >= n_prec:
                            continue
                        newp[e] = newp.get(e, self.ring.zero) + v1 * v2
                power = newp
                sign = -sign
        out = {e - v: val * lead_inv for e, val in acc.items()}
        return self._new(out, t_res)

    def pow(self, n, prec=None):
        if n < 0:
            return self.inv(prec=prec).pow(-n, prec=prec)
        result = UniSeries.monomial(self.var, self.ring, 1, 0, trunc=None)
        base = self if prec is None else self.truncated(prec + max(0, -self._val_or(0)) * n)
        acc = result
        b = base
        m = n
        while m:
            if m & 1:
                acc = acc * b
                if prec is not None:
                    acc = acc.truncated(prec)
            m >>= 1
            if m:
                b = b * b
                if prec is not None:
                    b = b.truncated(prec)
        return acc if prec is None else acc.truncated(prec)

    def deriv(self):
        c = {}
        for e, v in self.c.items():
            if e == 0:
                continue
            c[e - 1] = v * self.ring.coerce(e)
        t = None if self.trunc is None else self.trunc - 1
        return self._new(c, t)

    def compose(self, inner):
        """self(inner) for inner of positive valuation.

        self must have nonnegative valuation (no principal part).
        """
        self._check(inner)
        if self.c and min(self.c) < 0:
            raise ValueError("compose requires nonnegative valuation")
        iv = inner._val_or(1)
        if inner.c and iv < 1:
            raise ValueError("inner series must have positive valuation")
        cand = []
        if inner.trunc is not None:
            cand.append(inner.trunc)
        if self.trunc is not None:
            cand.append(self.trunc * max(iv, 1))
        t = min(cand) if cand else None
        out = UniSeries.zero(self.var, self.ring, t)
        if not self.c:
            return out
        # Horner over descending exponents
        exps = sorted(self.c, reverse=True)
        acc = UniSeries.zero(self.var, self.ring, t)
        prev = exps[0]
        acc = acc + UniSeries.monomial(self.var, self.ring, 1, 0, t).scale(self.c[prev])
        for e in exps[1:]:
            acc = acc * inner.pow(prev - e, prec=t)
            if t is not None:
                acc = acc.truncated(t)
            acc = acc + UniSeries.monomial(self.var, self.ring, 1, 0, t).scale(self.c[e])
            prev = e
        if prev > 0:
            acc = acc * inner.pow(prev, prec=t)
        if t is not None:
            acc = acc.truncated(t)
        return acc

    def log(self, prec=None):
        """Formal logarithm; requires constant term 1 and no principal part."""
        if self.c and min(self.c) < 0:
            raise ValueError("log requires a series without principal part")
        one = self.ring.one
        if self.c.get(0, self.ring.zero) != one:
            raise ValueError("log requires constant term 1")
        if prec is None:
            prec = self.trunc
        if prec is None:
            raise ValueError("log of an exact polynomial requires a precision")
        u = self - UniSeries.monomial(self.var, self.ring, 1, 0, self.trunc)
        u = u.truncated(prec)
        if u.is_zero():
            return UniSeries.zero(self.var, self.ring, prec)
        uv = u.val()
        acc = UniSeries.zero(self.var, self.ring, prec)
        power = u
        k = 1
        while k * uv < prec:
            acc = acc + power.scale(Q((-1) ** (k + 1), k))
            k += 1
            if k * uv >= prec:
                break
            power = (power * u).truncated(prec)
        return acc

    def exp(self, prec=None):
        """Formal exponential; requires positive valuation."""
        if self.c and min(self.c) < 1:
            raise ValueError("exp requires constant term 0")
        if prec is None:
            prec = self.trunc
        if prec is None:
            raise ValueError("exp of an exact polynomial requires a precision")
        u = self.truncated(prec)
        acc = UniSeries.monomial(self.var, self.ring, 1, 0, prec)
        if u.is_zero():
            return acc
        uv = u.val()
        power = u
        k = 1
        fact = QONE
        while k * uv < prec:
            acc = acc + power.scale(QONE / fact)
            k += 1
            fact = fact * k
            if k * uv >= prec:
                break
            power = (power * u).truncated(prec)
        return acc

    def __eq__(self, other):
        if not isinstance(other, UniSeries):
            return NotImplemented
        return (self.var == other.var and self.trunc == other.trunc
                and self.c == other.c)

    __hash__ = None

    def __repr__(self):
        terms = []
        for e in sorted(self.c):
            terms.append(f"({self.c[e]})*{self.var}^{e}")
        body = " + ".join(terms) if terms else "0"
        tail = "" if self.trunc is None else f" + O({self.var}^{self.trunc})"
        return body + tail


def residue(s: UniSeries, at: str = "zero"):
    """Residue of s d(var): coefficient of var^-1 at zero, its negative at
    infinity (so that res_0 + res_inf = 0 for functions with no other poles).

    For ``at="infinity"`` the series is understood as the expansion in the
    chart at infinity (descending exponents, finitely many terms above).
    """
    if at == "zero":
        c = s.coeff(-1)
    elif at == "infinity":
        c = -s.coeff(-1)
    else:
        raise ValueError(f"unknown residue location {at!r}")
    return c


def series_arith(a: UniSeries, b: UniSeries, op: str) -> UniSeries:
    """Dispatch helper for the four basic series operations."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        if not isinstance(b, int):
            raise ValueError("pow exponent must be an integer")
        return a.pow(b)
    raise ValueError(f"unknown op {op!r}")


def lagrange_invert(phi: UniSeries, trunc: int, out_var: str = "w") -> UniSeries:
    """Solve z = w*phi(z) for z(w) modulo w^trunc.

    phi must have an invertible constant term.  Plain fixpoint iteration:
    each pass gains at least one order.
    """
    ring = phi.ring
    if phi.c.get(0) is None or ring.is_zero(phi.c.get(0, ring.zero)):
        raise ValueError("phi must have a nonzero constant term")
    phi_w = UniSeries(out_var, ring, dict(phi.c), phi.trunc)
    w = UniSeries.monomial(out_var, ring, 1, 1, trunc)
    z = w.scale(phi.c[0])
    for _ in range(trunc + 1):
        znew = (w * phi_w.compose(z)).truncated(trunc)
        if znew == z:
            break
        z = znew
    return z


class MultiSeries:
    """Weight-capped series in variables v_1, v_2, ... with EpsLaurent
    coefficients.  A monomial is stored as the weakly decreasing tuple of
    variable indices with multiplicity, e.g. v_3 * v_2^2 -> (3, 2, 2);
    its weight is the sum of the tuple.  Every stored monomial has weight
    <= cap and a nonzero coefficient.
    """

    __slots__ = ("cap", "c")

    def __init__(self, cap, coeffs=None):
        self.cap = cap
        c = {}
        if coeffs:
            for k, v in coeffs.items():
                k = tuple(sorted(k, reverse=True))
                if sum(k) > cap:
                    continue
                if v:
                    c[k] = v
        self.c = c

    @classmethod
    def const(cls, cap, q):
        v = q if isinstance(q, EpsLaurent) else EpsLaurent.const(q)
        return cls(cap, {(): v})

    @classmethod
    def variable(cls, cap, k, coef=None):
        v = coef if coef is not None else EpsLaurent.const(1)
        return cls(cap, {(k,): v})

    def coeff(self, key):
        key = tuple(sorted(key, reverse=True))
        return self.c.get(key, EpsLaurent())

    def min_weight(self):
        return min((sum(k) for k in self.c), default=None)

    def _new(self, c):
        out = MultiSeries.__new__(MultiSeries)
        out.cap = self.cap
        out.c = c
        return out

    def __add__(self, other):
        if isinstance(other, (int, EpsLaurent)) or is_rational(other):
            other = MultiSeries.const(self.cap, other)
        if not isinstance(other, MultiSeries):
            return NotImplemented
        cap = min(self.cap, other.cap)
        c = {k: v for k, v in self.c.items() if sum(k) <= cap}
        for k, v in other.c.items():
            if sum(k) > cap:
                continue
            w = c.get(k, EpsLaurent()) + v
            if w:
                c[k] = w
            else:
                c.pop(k, None)
        out = MultiSeries.__new__(MultiSeries)
        out.cap = cap
        out.c = c
        return out

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        if isinstance(other, (int, EpsLaurent)) or is_rational(other):
            other = MultiSeries.const(self.cap, other)
        return self + (-other)

    def scale(self, q):
        if not isinstance(q, EpsLaurent):
            q = EpsLaurent.const(q)
        if not q:
            return self._new({})
        return self._new({k: v * q for k, v in self.c.items()})

    def __mul__(self, other):
        if isinstance(other, (int, EpsLaurent)) or is_rational(other):
            return self.scale(other)
        if not isinstance(other, MultiSeries):
            return NotImplemented
        cap = min(self.cap, other.cap)
        c = {}
        for k1, v1 in self.c.items():
            w1 = sum(k1)
            if w1 > cap:
                continue
            for k2, v2 in other.c.items():
                if w1 + sum(k2) > cap:
                    continue
                k = tuple(sorted(k1 + k2, reverse=True))
                w = c.get(k, EpsLaurent()) + v1 * v2
                if w:
                    c[k] = w
                else:
                    c.pop(k, None)
        out = MultiSeries.__new__(MultiSeries)
        out.cap = cap
        out.c = c
        return out

    __rmul__ = __mul__

    def log(self):
        """Formal log; requires constant term exactly 1."""
        if self.c.get((), EpsLaurent()) != EpsLaurent.const(1):
            raise ValueError("log requires constant term 1")
        u = self - 1
        if not u.c:
            return self._new({})
        w0 = u.min_weight()
        acc = self._new({})
        power = u
        k = 1
        while k * w0 <= self.cap:
            acc = acc + power.scale(Q((-1) ** (k + 1), k))
            k += 1
            if k * w0 > self.cap:
                break
            power = power * u
        return acc

    def exp(self):
        """Formal exp; requires constant term 0."""
        if () in self.c:
            raise ValueError("exp requires constant term 0")
        acc = MultiSeries.const(self.cap, 1)
        if not self.c:
            return acc
        w0 = self.min_weight()
        power = self
        k = 1
        fact = QONE
        while k * w0 <= self.cap:
            acc = acc + power.scale(QONE / fact)
            k += 1
            fact = fact * k
            if k * w0 > self.cap:
                break
            power = power * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return self.cap == other.cap and self.c == other.c

    __hash__ = None

    def __repr__(self):
        return f"MultiSeries(cap={self.cap}, {len(self.c)} monomials)"


def log_exp(s, op: str):
    """Formal log/exp dispatch over UniSeries and MultiSeries."""
    if op not in ("log", "exp"):
        raise ValueError(f"unknown op {op!r}")
    return s.log() if op == "log" else s.exp()
