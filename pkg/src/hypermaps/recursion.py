"""Topological recursion on the curve x = z^(N-1) + 1/z, y = -z, and
extraction of hypermap counts from the correlator expansions.

The recursion itself runs in a rescaled coordinate.  Substituting
z = r v with r = (N-1)^(-1/N) turns the curve into

    xt(v) = v^(N-1)/(N-1) + 1/v,    yt = -v,

with x = xt / r, y = r yt, and the recursion input omega_{0,1} = y dx =
yt dxt and B unchanged.  The correlators are therefore literally the
same differentials, but the ramification points become the N-th roots
of unity, so all arithmetic happens in the cyclotomic field Q(zeta_N)
instead of a radical tower.  The rescaling resurfaces only in the
expansion variable: dx/x^(d+1) = r^d dxt/xt^(d+1), so the extracted
coefficient has to be multiplied by (N-1)^(D/N) with D the (necessarily
divisible by N) total degree.

Correlators are stored as coefficient tensors in the global pole basis
xi_{a,k}(v) = dv/(v-a)^k at the ramification points: the tensor maps a
sorted n-tuple of (ramification index, pole order) pairs to the field
coefficient of each distinct ordered monomial.
"""
from __future__ import annotations

import json
import os
from itertools import permutations
from math import comb

from .numfield import NFRing, NumberField
from .rational import Q, QONE, QZERO, rat_str, parse_rat
from .series import QRING, UniSeries, lagrange_invert

TENSOR_CACHE_VERSION = 1


class Curve:
    """Rescaled spectral-curve data over the cyclotomic field."""

    def __init__(self, N: int):
        assert N >= 2
        self.N = N
        self.field = NumberField.cyclotomic_field(N)
        self.ring = NFRing(self.field)
        zeta = self.field.gen
        # a_i = zeta^i, i = 1..N (so a_N = 1)
        self.zeta = zeta
        self.ram = [zeta.pow(i) for i in range(1, N + 1)]
        for a in self.ram:
            assert self.xprime(a).is_zero(), "ramification point check"
            assert not self.xsecond(a).is_zero(), "simple ramification check"

    def x_at(self, v):
        """xt(v) = v^(N-1)/(N-1) + 1/v for a field element v."""
        return v.pow(self.N - 1) * Q(1, self.N - 1) + v.inv()

    def xprime(self, v):
        return v.pow(self.N - 2) - v.pow(-2)

    def xsecond(self, v):
        return v.pow(self.N - 3) * Q(self.N - 2) + v.pow(-3) * Q(2)

    def x_series(self, a_idx: int, trunc: int) -> UniSeries:
        """xt(a + t) as a series in the local parameter t."""
        a = self.ram[a_idx]
        ring = self.ring
        base = UniSeries("t", ring, {0: a, 1: ring.one}, None)
        pos = base.pow(self.N - 1).scale(Q(1, self.N - 1))
        neg = base.inv(prec=trunc)
        return (pos + neg).truncated(trunc)

    def xprime_series(self, a_idx: int, trunc: int) -> UniSeries:
        a = self.ram[a_idx]
        ring = self.ring
        base = UniSeries("t", ring, {0: a, 1: ring.one}, None)
        if self.N == 2:
            pos = UniSeries.monomial("t", ring, ring.one, 0, None)
        else:
            pos = base.pow(self.N - 2)
        neg = base.inv(prec=trunc).pow(2, prec=trunc)
        return (pos - neg).truncated(trunc)


def deck_series(curve: Curve, a_idx: int, order: int) -> UniSeries:
    """The local deck transformation sigma as s(t) = sigma(a+t) - a,
    solved degree by degree from xt(a + s(t)) = xt(a + t).

    Returns s with s(0) = 0, s'(0) = -1, known modulo t^order.
    """
    ring = curve.ring
    work = order + 3
    x_loc = curve.x_series(a_idx, work + 2)
    p2 = x_loc.coeff(2)
    assert not p2.is_zero(), "non-simple ramification"
    xp_loc = x_loc.deriv()
    # Newton iteration on F(s) = xt(a+s) - xt(a+t), starting from the
    # order-2 solution s = -t; each step roughly doubles the precision
    s = UniSeries.monomial("t", ring, -1, 1, work)
    for _ in range(work.bit_length() + 3):
        f = x_loc.compose(s) - x_loc.truncated(work)
        f = f.shifted(-1)
        if f.is_zero():
            break
        corr = f * xp_loc.compose(s).shifted(-1).inv()
        # re-declare the full working precision: coefficients beyond the
        # step's certified order are provisional and get corrected by the
        # following iterations; the defining contracts below are the gate
        s = UniSeries("t", ring, (s - corr).c, work)
    else:
        raise ArithmeticError("deck iteration failed to converge")
    s = s.truncated(order)
    # defining contracts, to working order
    check = x_loc.truncated(order).compose(s) - x_loc.truncated(order)
    assert check.is_zero(), "deck series does not preserve x"
    invol = s.compose(s) - UniSeries.monomial("t", ring, 1, 1, order)
    assert invol.is_zero(), "deck series is not an involution"
    return s


def _default_cache_dir():
    return os.environ.get("HYPERMAPS_CACHE_DIR")


class Recursion:
    """Memoized correlator recursion for a fixed N."""

    def __init__(self, N: int, g_max: int = 2, n_max: int = 3,
                 cache_dir=None):
        self.curve = Curve(N)
        self.N = N
        self.g_max = g_max
        self.n_max = n_max
        # uniform local expansion order, covering the pole-order bound
        # 6g - 4 + 2n with margin
        self.M = 6 * g_max + 2 * n_max + 6
        self.Mw = self.M + 10
        self.cache_dir = cache_dir if cache_dir is not None \
            else _default_cache_dir()
        self._memo = {}
        self._decks = {}
        self._xprime_inv = {}
        self._U = {}        # (a_idx, j) -> UniSeries
        self._loc = {}      # (a_idx, side, b_idx, k) -> UniSeries
        self._resvec = {}   # (a_idx, left key, right key) -> tuple
        self._eta_coeffs = None

    # -- local series ----------------------------------------------------

    def deck(self, a_idx: int) -> UniSeries:
        if a_idx not in self._decks:
            self._decks[a_idx] = deck_series(self.curve, a_idx, self.Mw)
        return self._decks[a_idx]

    def _kernel_U(self, a_idx: int, j: int) -> UniSeries:
        key = (a_idx, j)
        if key in self._U:
            return self._U[key]
        ring = self.curve.ring
        s = self.deck(a_idx)
        t = UniSeries.monomial("t", ring, 1, 1, self.Mw)
        if a_idx not in self._xprime_inv:
            xp = self.curve.xprime_series(a_idx, self.Mw)
            denom = (s - t) * xp
            denom = denom.scale(Q(2))
            self._xprime_inv[a_idx] = denom.inv()
        num = t.pow(j) - s.pow(j)
        u = num * self._xprime_inv[a_idx]
        self._U[key] = u
        return u

    def _local(self, a_idx: int, side: str, b_idx: int, k: int) -> UniSeries:
        """Local expansion of the basis form at the residue point.

        side "z": xi_{b,k}(a+t) / dt = (t + (a-b))^(-k)
        side "s": xi_{b,k}(sigma(a+t)) / dt = s'(t) (s(t) + (a-b))^(-k)
        """
        key = (a_idx, side, b_idx, k)
        if key in self._loc:
            return self._loc[key]
        ring = self.curve.ring
        a = self.curve.ram[a_idx]
        b = self.curve.ram[b_idx]
        if side == "z":
            if a_idx == b_idx:
                out = UniSeries.monomial("t", ring, 1, -k, self.Mw)
            else:
                base = UniSeries("t", ring, {0: a - b, 1: ring.one}, None)
                out = base.inv(prec=self.Mw).pow(k, prec=self.Mw)
        else:
            s = self.deck(a_idx)
            sp = s.deriv()
            if a_idx == b_idx:
                out = sp * s.pow(k).inv()
            else:
                shifted = s + UniSeries.monomial("t", ring, a - b, 0,
                                                 s.trunc)
                out = sp * shifted.inv().pow(k, prec=s.trunc)
        self._loc[key] = out
        return out

    def _factor_series(self, a_idx: int, role) -> UniSeries:
        """Local series for one slot of the residue integrand.

        role is ("z", b_idx, k) / ("s", b_idx, k) for a stable-correlator
        basis form on the z or sigma(z) side, ("zB", k) / ("sB", k) for
        the omega_{0,2} bridge whose other leg is an external variable
        (with the k-1 prefactor folded in), or ("B2",) for
        omega_{0,2}(z, sigma z) itself.
        """
        ring = self.curve.ring
        kind = role[0]
        if kind == "z":
            return self._local(a_idx, "z", role[1], role[2])
        if kind == "s":
            return self._local(a_idx, "s", role[1], role[2])
        if kind == "zB":
            k = role[1]
            return UniSeries.monomial("t", ring, Q(k - 1), k - 2, self.Mw)
        if kind == "sB":
            k = role[1]
            s = self.deck(a_idx)
            return (s.deriv() * s.pow(k - 2)).scale(Q(k - 1)) \
                if k > 2 else s.deriv().scale(Q(k - 1))
        if kind == "B2":
            s = self.deck(a_idx)
            t = UniSeries.monomial("t", ring, 1, 1, self.Mw)
            return s.deriv() * (t - s).pow(2).inv()
        raise ValueError(f"unknown role {role!r}")

    def _res_vector(self, a_idx: int, left, right, j_max: int):
        """tuple over j = 1..j_max of Res_t U_j(t) w(t) dt for the
        integrand w built from the two slot roles (right may be None)."""
        key = (a_idx, left, right, j_max)
        if key in self._resvec:
            return self._resvec[key]
        w = self._factor_series(a_idx, left)
        if right is not None:
            w = w * self._factor_series(a_idx, right)
        assert w.trunc is None or w.trunc >= 1, \
            "insufficient local expansion order"
        w = w.truncated(1)
        zero = self.curve.ring.zero
        out = []
        for j in range(1, j_max + 1):
            u = self._kernel_U(a_idx, j)
            total = zero
            for m, uc in u.c.items():
                wc = w.c.get(-1 - m)
                if wc is not None:
                    total = total + uc * wc
            out.append(total)
        out = tuple(out)
        self._resvec[key] = out
        return out

    # -- the recursion ----------------------------------------------------

    def omega(self, g: int, n: int) -> dict:
        """Coefficient tensor of omega_{g,n} on sorted pole-basis keys."""
        if 2 * g - 2 + n <= 0:
            raise ValueError("unstable moment handled by dedicated "
                             "operations")
        if 6 * g - 4 + 2 * n > 6 * self.g_max - 4 + 2 * self.n_max:
            raise ValueError("requested correlator exceeds the configured "
                             "expansion order")
        key = (g, n)
        if key in self._memo:
            return self._memo[key]
        cached = self._load_cached(g, n)
        if cached is not None:
            self._memo[key] = cached
            return cached
        tensor = self._compute(g, n)
        self._memo[key] = tensor
        self._store_cached(g, n, tensor)
        return tensor

    def _pair_submultisets(self, K):
        """Distinct unordered 2-submultisets {p, q} of the multiset K,
        with their remainders."""
        vals = sorted(set(K))
        out = []
        for i, p in enumerate(vals):
            cp = K.count(p)
            if cp >= 2:
                rest = list(K)
                rest.remove(p)
                rest.remove(p)
                out.append((p, p, tuple(rest)))
            for q in vals[i + 1:]:
                rest = list(K)
                rest.remove(p)
                rest.remove(q)
                out.append((p, q, tuple(rest)))
        return out

    @staticmethod
    def _merge_count(r1, r2):
        """Merged sorted externals and the number of labeled splits that
        realize a fixed ordered external monomial."""
        merged = tuple(sorted(r1 + r2))
        count = 1
        for v in set(r1):
            count *= comb(merged.count(v), r1.count(v))
        return merged, count

    def _compute(self, g: int, n: int) -> dict:
        ring = self.curve.ring
        n_ext = n - 1
        bound = 6 * g - 4 + 2 * n
        j_max = bound - 1
        zero = ring.zero

        # per ramification point: accumulate external-multiset -> vector
        # over j of field coefficients
        result = {}
        for a_idx in range(self.N):
            acc = {}

            def add(r, vec, scale=None):
                cur = acc.get(r)
                if cur is None:
                    cur = [zero] * j_max
                    acc[r] = cur
                if scale is None:
                    for i in range(j_max):
                        cur[i] = cur[i] + vec[i]
                else:
                    for i in range(j_max):
                        cur[i] = cur[i] + vec[i] * scale

            # term omega_{g-1, n+1}(z, sigma z, externals)
            if g >= 1:
                if (g - 1, n + 1) == (0, 2):
                    vec = self._res_vector(a_idx, ("B2",), None, j_max)
                    add((), vec)
                else:
                    prev = self.omega(g - 1, n + 1)
                    for K, c in prev.items():
                        for p, q, rest in self._pair_submultisets(K):
                            vz = self._res_vector(
                                a_idx, ("z", p[0], p[1]),
                                ("s", q[0], q[1]), j_max)
                            if p != q:
                                vs = self._res_vector(
                                    a_idx, ("z", q[0], q[1]),
                                    ("s", p[0], p[1]), j_max)
                                vz = tuple(x + y for x, y in zip(vz, vs))
                            add(rest, vz, c)

            # product terms over ordered stable/bridge splittings
            ext_orders = range(2, bound + 1)
            for g1 in range(g + 1):
                g2 = g - g1
                for j1 in range(n_ext + 1):
                    j2 = n_ext - j1
                    t1 = (g1, 1 + j1)
                    t2 = (g2, 1 + j2)
                    if t1 == (0, 1) or t2 == (0, 1):
                        continue
                    b1 = t1 == (0, 2)
                    b2 = t2 == (0, 2)
                    if b1 and b2:
                        for k in ext_orders:
                            for m in ext_orders:
                                r, cnt = self._merge_count(
                                    ((a_idx, k),), ((a_idx, m),))
                                vec = self._res_vector(
                                    a_idx, ("zB", k), ("sB", m), j_max)
                                add(r, vec, ring.coerce(cnt))
                    elif b1:
                        w2 = self.omega(*t2)
                        for K2, c2 in w2.items():
                            for q in sorted(set(K2)):
                                r2 = list(K2)
                                r2.remove(q)
                                for k in ext_orders:
                                    r, cnt = self._merge_count(
                                        ((a_idx, k),), tuple(r2))
                                    vec = self._res_vector(
                                        a_idx, ("zB", k),
                                        ("s", q[0], q[1]), j_max)
                                    add(r, vec, c2 * Q(cnt))
                    elif b2:
                        w1 = self.omega(*t1)
                        for K1, c1 in w1.items():
                            for p in sorted(set(K1)):
                                r1 = list(K1)
                                r1.remove(p)
                                for m in ext_orders:
                                    r, cnt = self._merge_count(
                                        tuple(r1), ((a_idx, m),))
                                    vec = self._res_vector(
                                        a_idx, ("z", p[0], p[1]),
                                        ("sB", m), j_max)
                                    add(r, vec, c1 * Q(cnt))
                    else:
                        w1 = self.omega(*t1)
                        w2 = self.omega(*t2)
                        for K1, c1 in w1.items():
                            for p in sorted(set(K1)):
                                r1 = list(K1)
                                r1.remove(p)
                                for K2, c2 in w2.items():
                                    for q in sorted(set(K2)):
                                        r2 = list(K2)
                                        r2.remove(q)
                                        r, cnt = self._merge_count(
                                            tuple(r1), tuple(r2))
                                        vec = self._res_vector(
                                            a_idx, ("z", p[0], p[1]),
                                            ("s", q[0], q[1]), j_max)
                                        add(r, vec, c1 * c2 * Q(cnt))

            # fold the z0 pole basis in: slot (a_idx, j+1) with vec[j-1]
            for r, vec in acc.items():
                for j in range(1, j_max + 1):
                    c = vec[j - 1]
                    if c.is_zero():
                        continue
                    full = tuple(sorted(((a_idx, j + 1),) + r))
                    prev = result.get(full)
                    if prev is None:
                        result[full] = c
                    else:
                        # the recursion computes the distinguished-slot
                        # coefficient; symmetry of omega makes every slot
                        # choice agree
                        assert prev == c, "correlator symmetry violated"
        return {k: v for k, v in result.items() if not v.is_zero()}

    # -- tensor cache ------------------------------------------------------

    def _cache_path(self, g, n):
        if not self.cache_dir:
            return None
        name = (f"tensor_N{self.N}_g{g}_n{n}_M{self.M}"
                f"_v{TENSOR_CACHE_VERSION}.json")
        return os.path.join(self.cache_dir, name)

    def _store_cached(self, g, n, tensor):
        path = self._cache_path(g, n)
        if path is None:
            return
        try:
            os.makedirs(self.cache_dir, exist_ok=True)
            payload = {
                ";".join(f"{a},{k}" for a, k in key):
                    [rat_str(c) for c in val.v]
                for key, val in sorted(tensor.items())
            }
            with open(path, "w") as fh:
                json.dump(payload, fh, sort_keys=True)
        except OSError:
            pass

    def _load_cached(self, g, n):
        path = self._cache_path(g, n)
        if path is None or not os.path.exists(path):
            return None
        try:
            with open(path) as fh:
                payload = json.load(fh)
        except (OSError, ValueError):
            return None
        field = self.curve.field
        out = {}
        for skey, vec in payload.items():
            key = tuple(tuple(int(x) for x in part.split(","))
                        for part in skey.split(";")) if skey else ()
            out[key] = field.elem([parse_rat(x) for x in vec])
        return out

    # -- extraction ---------------------------------------------------------

    def _eta_table(self, max_exp: int, max_order: int):
        """Coefficients of the basis forms re-expanded at v = 0 in the
        variable X = 1/xt: eta_{a,k}(X) = (v(X)-a)^(-k) v'(X)."""
        want = (max_exp, max_order)
        if self._eta_coeffs is not None:
            have = self._eta_coeffs[0]
            if have[0] >= max_exp and have[1] >= max_order:
                return self._eta_coeffs[1]
            want = (max(max_exp, have[0]), max(max_order, have[1]))
            max_exp, max_order = want
        ring = self.curve.ring
        trunc = max_exp + 2
        # X = v / (1 + v^N/(N-1)), so v = X * phi(v), phi = 1 + v^N/(N-1)
        phi = UniSeries("X", ring, {0: ring.one,
                                    self.N: ring.coerce(Q(1, self.N - 1))},
                        None)
        v = lagrange_invert(phi, trunc, out_var="X")
        vp = v.deriv()
        table = {}
        for a_idx, a in enumerate(self.curve.ram):
            shifted = v - UniSeries.monomial("X", ring, a, 0, v.trunc)
            inv = shifted.inv(prec=trunc)
            cur = UniSeries.monomial("X", ring, 1, 0, trunc)
            for k in range(1, max_order + 1):
                cur = (cur * inv).truncated(trunc)
                series = (cur * vp).truncated(trunc)
                table[(a_idx, k)] = [series.c.get(e, ring.zero)
                                     for e in range(max_exp + 1)]
        self._eta_coeffs = (want, table)
        return table

    def rhm_from_tr(self, g: int, degrees) -> int:
        """Hypermap count from the correlator expansion; degrees are the
        side counts d_i = k_i + 1 >= 1."""
        degrees = tuple(degrees)
        n = len(degrees)
        if 2 * g - 2 + n <= 0:
            raise ValueError("unstable moment handled by dedicated "
                             "operations")
        total = sum(degrees)
        if total % self.N != 0:
            return 0
        tensor = self.omega(g, n)
        max_order = max((k for K in tensor for _, k in K), default=1)
        exps = tuple(d - 1 for d in degrees)
        table = self._eta_table(max(exps, default=0), max_order)
        ring = self.curve.ring
        acc = ring.zero
        for K, c in tensor.items():
            osum = ring.zero
            for order in set(permutations(K)):
                term = ring.one
                for slot, e in zip(order, exps):
                    term = term * table[slot][e]
                    if term.is_zero():
                        break
                osum = osum + term
            acc = acc + c * osum
        if not acc.is_rational():
            raise ArithmeticError("field descent failure")
        value = acc.rational_part() * Q(self.N - 1) ** (total // self.N)
        if value.denominator != 1 or value < 0:
            raise ArithmeticError("field descent failure")
        return int(value)

    def zn_covariance_defects(self, g: int, n: int):
        """Check the Z_N tensor symmetry: rotating every ramification
        index by one step multiplies the coefficient by the product of
        zeta^(k-1) over the slots.  Returns the list of violated keys."""
        tensor = self.omega(g, n)
        zeta = self.curve.zeta
        bad = []
        for K, c in tensor.items():
            rot = tuple(sorted(((a + 1) % self.N, k) for a, k in K))
            factor = zeta.pow(sum(k - 1 for _, k in K))
            expected = c * factor
            got = tensor.get(rot, self.curve.ring.zero)
            if got != expected:
                bad.append(K)
        return bad


# ---------------------------------------------------------------------------
# unstable shortcuts from the curve presentation (original coordinates)


def rhm01_from_curve(N: int, k: int) -> int:
    """[X^(k+1)] z(X)^N with X = z/(1+z^N): genus 0, one boundary."""
    assert k >= 0
    trunc = k + 3
    phi = UniSeries("z", QRING, {0: QONE, N: QONE}, None)
    z = lagrange_invert(phi, trunc, out_var="X")
    value = z.pow(N, prec=trunc).c.get(k + 1, QZERO)
    assert value.denominator == 1 and value >= 0
    return int(value)


def rhm02_from_curve(N: int, k1: int, k2: int) -> int:
    """Genus 0, two boundaries, from the bivariate residue of the
    two-point function against x1^(k1+1) x2^(k2+1)."""
    assert k1 >= 0 and k2 >= 0
    cap1 = k1 + 2 + N
    cap2 = k2 + 2 + N
    # m(z1,z2) = z1 z2 (z1^(N-1)-z2^(N-1))/(z1-z2), a polynomial
    m = {}
    for i in range(N - 1):
        m[(i + 1, N - 1 - i)] = QONE

    def bmul(d1, d2):
        out = {}
        for (a1, b1), v1 in d1.items():
            for (a2, b2), v2 in d2.items():
                a, b = a1 + a2, b1 + b2
                if a > cap1 + 1 or b > cap2 + 1:
                    continue
                key = (a, b)
                w = out.get(key, QZERO) + v1 * v2
                if w == 0:
                    out.pop(key, None)
                else:
                    out[key] = w
        return out

    # log(1 - m) = -sum m^j / j
    logv = {}
    power = dict(m)
    j = 1
    while power:
        for key, v in power.items():
            w = logv.get(key, QZERO) - v / j
            if w == 0:
                logv.pop(key, None)
            else:
                logv[key] = w
        j += 1
        power = bmul(power, m)
    # d_{z1} d_{z2} log(...)
    dd = {}
    for (a, b), v in logv.items():
        if a >= 1 and b >= 1:
            dd[(a - 1, b - 1)] = v * a * b
    # x^(k+1) per variable: Laurent exponents (N-1)(k+1) - N j
    def xpow_coeffs(k):
        out = {}
        for j in range(k + 2):
            out[(N - 1) * (k + 1) - N * j] = Q(comb(k + 1, j))
        return out

    x1 = xpow_coeffs(k1)
    x2 = xpow_coeffs(k2)
    total = QZERO
    for (a, b), v in dd.items():
        c1 = x1.get(-1 - a)
        if c1 is None:
            continue
        c2 = x2.get(-1 - b)
        if c2 is None:
            continue
        total += v * c1 * c2
    total = -total
    assert total.denominator == 1 and total >= 0
    return int(total)
