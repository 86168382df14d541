"""The hypergeometric tau function and coefficient extraction.

The generating function of rooted hypermaps is the Schur-expanded sum

    Z = sum_lambda s_lambda(p) s_lambda(pt) prod_{cells} (1 + eps * content)

restricted to p_i = i t_i / eps and pt_i = delta_{iN} / eps.  At the
second specialization only the cycle types N^m survive, which leaves a
character-weighted finite sum in every t-monomial weight.  Counts are
read off from the eps-grading of log Z.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import (character, contents, mult_vector, partitions,
                         partitions_upto, z_mu)
from .rational import Q, QONE, QZERO, factorial_q
from .series import EpsLaurent, MultiSeries


def content_product(lam) -> EpsLaurent:
    """prod over cells of (1 + eps * content)."""
    out = EpsLaurent.const(1)
    for c in contents(lam):
        out = out * EpsLaurent({0: QONE, 1: Q(c)})
    return out


def _newton_h(p, n):
    """Complete homogeneous h_0..h_n from power sums p (dict k -> value,
    values in any commutative Q-algebra) via Newton's identities."""
    h = [EpsLaurent.const(1)]
    for k in range(1, n + 1):
        acc = EpsLaurent()
        for i in range(1, k + 1):
            pi = p.get(i)
            if pi is None:
                continue
            acc = acc + pi * h[k - i]
        h.append(acc * Q(1, k))
    return h


def schur_at(lam, p) -> EpsLaurent:
    """s_lambda at a power-sum assignment (dict k -> EpsLaurent), by the
    Jacobi-Trudi determinant det(h_{lam_i - i + j})."""
    lam = tuple(lam)
    if not lam:
        return EpsLaurent.const(1)
    L = len(lam)
    h = _newton_h(p, lam[0] + L - 1)

    def hax(m):
        if m < 0:
            return EpsLaurent()
        return h[m]

    # determinant by column-subset dynamic programming (division-free)
    states = {frozenset(): EpsLaurent.const(1)}
    for i in range(L):
        new = {}
        for used, val in states.items():
            if not val:
                continue
            if len(used) != i:
                continue
            for j in range(L):
                if j in used:
                    continue
                entry = hax(lam[i] - (i + 1) + (j + 1))
                if not entry:
                    continue
                # sign of appending column j: parity of used columns > j
                sgn = -1 if sum(1 for u in used if u > j) % 2 else 1
                term = val * entry * Q(sgn)
                key = used | {j}
                new[key] = new.get(key, EpsLaurent()) + term
        states = new
    full = frozenset(range(L))
    return states.get(full, EpsLaurent())


def schur_at_mn(lam, p) -> EpsLaurent:
    """Independent evaluation through the character expansion
    s_lambda = sum_mu chi^lambda_mu p_mu / z_mu."""
    lam = tuple(lam)
    n = sum(lam)
    if n == 0:
        return EpsLaurent.const(1)
    total = EpsLaurent()
    for mu in partitions(n):
        chi = character(lam, mu)
        if chi == 0:
            continue
        pm = EpsLaurent.const(Q(chi, z_mu(mu)))
        ok = True
        for k in mu:
            v = p.get(k)
            if v is None or not v:
                ok = False
                break
            pm = pm * v
        if ok:
            total = total + pm
    return total


@lru_cache(maxsize=None)
def schur_special(N: int, lam) -> EpsLaurent:
    """s_lambda at pt_i = delta_{iN}/eps: only cycle type N^m survives,
    giving chi^lambda_{N^m} / (N^m m!) * eps^(-m); zero unless N | |lam|."""
    lam = tuple(lam)
    n = sum(lam)
    if n == 0:
        return EpsLaurent.const(1)
    if n % N != 0:
        return EpsLaurent()
    m = n // N
    chi = character(lam, (N,) * m)
    if chi == 0:
        return EpsLaurent()
    denom = Q(N) ** m * factorial_q(m)
    return EpsLaurent.term(Q(chi) / denom, -m)


@lru_cache(maxsize=None)
def coefficient_A(N: int, lam) -> EpsLaurent:
    """A_lambda = s_lambda(pt) * content product: the Schur coefficient
    of the tau function."""
    lam = tuple(lam)
    s = schur_special(N, lam)
    if not s:
        return s
    return s * content_product(lam)


@dataclass
class TauTruncation:
    N: int
    W: int
    series: MultiSeries  # in t-variables, weight(t_k) = k
    _log: MultiSeries = None

    def log(self) -> MultiSeries:
        if self._log is None:
            self._log = self.series.log()
        return self._log


def tau_Z(N: int, W: int) -> TauTruncation:
    """Truncation of Z to total t-weight <= W.

    Exact by weighted homogeneity: the coefficient of a weight-w
    monomial only receives contributions from |lambda| = w.
    """
    assert W >= N
    acc = MultiSeries.const(W, 1)
    for lam in partitions_upto(W):
        n = sum(lam)
        if n == 0 or n % N != 0:
            continue
        a = coefficient_A(N, lam)
        if not a:
            continue
        # s_lambda(p_i = i t_i/eps) = sum_mu chi^lambda_mu /prod m_k! *
        # eps^(-len(mu)) t_mu
        for mu in partitions(n):
            chi = character(lam, mu)
            if chi == 0:
                continue
            denom = 1
            for m in mult_vector(mu).values():
                for i in range(2, m + 1):
                    denom *= i
            coeff = EpsLaurent.term(Q(chi, denom), -len(mu)) * a
            if coeff:
                acc = acc + MultiSeries(W, {tuple(mu): coeff})
    return TauTruncation(N, W, acc)


def _log_coefficient(tau: TauTruncation, degrees) -> EpsLaurent:
    key = tuple(sorted(degrees, reverse=True))
    if sum(key) > tau.W:
        raise ValueError("requested weight exceeds the truncation cap")
    return tau.log().coeff(key)


def _mult_correction(degrees) -> Q:
    c = QONE
    for m in mult_vector(tuple(degrees)).values():
        c = c * factorial_q(m)
    return c


def rhm_from_tau(tau: TauTruncation, g: int, degrees) -> int:
    """Count at genus g and side counts `degrees` from log Z."""
    degrees = tuple(degrees)
    if sum(degrees) % tau.N != 0:
        return 0
    coeff = _log_coefficient(tau, degrees)
    value = coeff.coeff(2 * g - 2) * _mult_correction(degrees)
    assert value.denominator == 1 and value >= 0, \
        "count extraction must be a nonnegative integer"
    return int(value)


def osmh_from_tau(tau: TauTruncation, g: int, degrees):
    """Hurwitz-side normalization: log Z re-expanded in the p-variables
    (t_k = eps p_k / k), read at eps^(2g-2+n).  Exact rational."""
    degrees = tuple(degrees)
    if sum(degrees) % tau.N != 0:
        return QZERO
    coeff = _log_coefficient(tau, degrees)
    scale = QONE
    for d in degrees:
        scale = scale / d
    # multiplying by eps^n moves the eps^(2g-2) part to eps^(2g-2+n)
    return coeff.coeff(2 * g - 2) * scale * _mult_correction(degrees)


def eps_exponent_profile(tau: TauTruncation, degrees):
    """Sorted eps-exponents present in the log-Z coefficient of the given
    monomial; the genus grading predicts only values 2g-2 >= -2."""
    return _log_coefficient(tau, tuple(degrees)).exponents()


def osmh_ratio_table(tau: TauTruncation, profiles):
    """Rows (g, degrees, rhm, osmh, osmh * prod(degrees)) for reporting
    the relative normalization of the two coefficient families."""
    rows = []
    for g, degrees in profiles:
        rhm = rhm_from_tau(tau, g, degrees)
        osmh = osmh_from_tau(tau, g, degrees)
        prod = 1
        for d in degrees:
            prod *= d
        rows.append((g, tuple(degrees), rhm, osmh, osmh * prod))
    return rows
