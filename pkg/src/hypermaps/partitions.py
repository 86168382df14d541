"""Integer partitions and symmetric-group character values.

Partitions are weakly decreasing tuples of positive integers; () is the
empty partition.  Characters are computed by the Murnaghan-Nakayama rule
on beta-numbers (first-column hook lengths), which keeps the border-strip
removal a constant-time set operation.
"""
from __future__ import annotations

from functools import lru_cache

from .rational import Q


def partitions(n: int, max_part=None):
    """All partitions of n with parts <= max_part, lexicographically
    decreasing, as tuples."""
    if n < 0:
        return
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_upto(cap: int):
    """All partitions of every size 0..cap."""
    for n in range(cap + 1):
        yield from partitions(n)


def mult_vector(mu) -> dict:
    """Part multiplicities m_k(mu)."""
    m = {}
    for p in mu:
        m[p] = m.get(p, 0) + 1
    return m


def z_mu(mu):
    """Order of the centralizer of a permutation of cycle type mu:
    prod k^{m_k} m_k!."""
    z = 1
    for k, m in mult_vector(mu).items():
        f = 1
        for i in range(2, m + 1):
            f *= i
        z *= (k ** m) * f
    return z


def contents(lam):
    """Multiset of cell contents j - i for the Young diagram of lam,
    rows and columns counted from 1."""
    out = []
    for i, row in enumerate(lam, start=1):
        for j in range(1, row + 1):
            out.append(j - i)
    return out


def hook_products(lam):
    """Product of hook lengths of lam."""
    cols = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j) + (cols[j] - i) - 1
    return prod


def conjugate(lam):
    """Conjugate partition."""
    if not lam:
        return ()
    out = []
    for j in range(lam[0]):
        out.append(sum(1 for p in lam if p > j))
    return tuple(out)


def _beta_set(lam, length):
    """Beta-numbers lam_i + (length - i) for i = 1..length (padding with
    zero parts), as a frozenset of distinct nonnegative integers."""
    padded = list(lam) + [0] * (length - len(lam))
    return frozenset(padded[i] + (length - 1 - i) for i in range(length))


def _from_beta(beta):
    """Partition recovered from a beta-set, dropping trailing zeros."""
    b = sorted(beta, reverse=True)
    lam = tuple(b[i] - (len(b) - 1 - i) for i in range(len(b)))
    return tuple(p for p in lam if p > 0)


@lru_cache(maxsize=None)
def character(lam, mu) -> int:
    """Irreducible character chi^lam evaluated on cycle type mu.

    Murnaghan-Nakayama on beta-numbers: removing a border strip of size k
    replaces a beta-number b by b - k (if b - k is not already present);
    the sign is (-1)^(number of beta-numbers strictly between b-k and b).
    """
    lam = tuple(lam)
    mu = tuple(mu)
    assert sum(lam) == sum(mu), "character requires |lam| == |mu|"
    if not mu:
        return 1
    length = max(len(lam), 1)
    beta = _beta_set(lam, length)
    return _mn(beta, mu)


def _mn(beta, mu) -> int:
    if not mu:
        return 1
    k = mu[0]
    rest = mu[1:]
    total = 0
    blist = sorted(beta)
    for b in blist:
        nb = b - k
        if nb < 0 or nb in beta:
            continue
        between = sum(1 for x in blist if nb < x < b)
        sign = -1 if between % 2 else 1
        total += sign * _mn((beta - {b}) | {nb}, rest)
    return total


def character_table_column(n: int, mu):
    """chi^lam(mu) for all lam of size n, as a dict."""
    return {lam: character(lam, tuple(mu)) for lam in partitions(n)}


def schur_from_powersums(lam, p):
    """Schur polynomial s_lam evaluated at a power-sum assignment.

    p maps k -> value of the k-th power sum (missing keys mean 0).
    Computed by the character expansion s_lam = sum_mu chi^lam_mu p_mu / z_mu.
    Used as a cross-check against Jacobi-Trudi elsewhere.
    """
    n = sum(lam)
    if n == 0:
        return Q(1)
    total = Q(0)
    for mu in partitions(n):
        chi = character(lam, mu)
        if chi == 0:
            continue
        pm = Q(1)
        ok = True
        for k in mu:
            v = p.get(k)
            if v is None or v == 0:
                ok = False
                break
            pm = pm * v
        if not ok:
            continue
        total += Q(chi) * pm / z_mu(mu)
    return total
