from math import factorial

import pytest

from hypermaps import frobenius as F
from hypermaps import oracle as O
from hypermaps.polar import ExactPolar
from hypermaps.rational import Q


def test_eta_n3():
    et = F.eta(3)
    assert et[1, 3] == 1 and et[3, 1] == 1
    assert et[2, 2] == Q(1, 2)
    assert et[1, 1] == 0 and et[1, 2] == 0


def test_mu_and_charge():
    mu, d = F.mu_charge(3)
    assert mu == [Q(1, 2), 0, Q(-1, 2)]
    assert d == 0
    mu2, d2 = F.mu_charge(2)
    assert mu2 == [Q(1, 2), Q(-1, 2)] and d2 == -1


def test_s0_is_identity():
    for N in range(2, 7):
        s0 = F.s_matrix(N, 0)
        for a in range(N):
            for b in range(N):
                assert s0[a][b] == (1 if a == b else 0)


def test_n2_s1_single_entry():
    s1 = F.s_matrix(2, 1)
    assert s1[0][0] == 0 and s1[0][1] == 0
    assert s1[1][0] == 1 and s1[1][1] == 0


def test_s_entry_example_n3():
    assert F.s_entry(3, 1, 2, 1) == 2


def test_tilde_xi_leading_terms():
    xi = F.tilde_xi(3, 3, 8)
    assert xi.coeff(0) == 1 and xi.coeff(3) == 2 and xi.coeff(6) == 4
    xi = F.tilde_xi(2, 1, 7)
    assert [xi.coeff(e) for e in (1, 3, 5)] == [1, 1, 1]
    assert [xi.coeff(e) for e in (0, 2, 4)] == [0, 0, 0]
    xi = F.tilde_xi(3, 2, 9)
    assert xi.coeff(2) == 2 and xi.coeff(5) == 4 and xi.coeff(8) == 8


def test_residue_lemma_small():
    for N in (2, 3):
        for alpha in range(1, N + 1):
            for k in range(5):
                for a in range(k + 3):
                    assert F.s_column_residue_check(N, alpha, a, k), \
                        (N, alpha, a, k)


def test_residue_lemma_k_minus_one():
    for N in (2, 3):
        for alpha in range(1, N + 1):
            for a in range(3):
                assert F.s_column_residue_check(N, alpha, a, -1)


def test_psi_orthogonality():
    for N in range(2, 7):
        assert all(ok for _, _, ok in F.psi_orthogonality_defect(N))


def test_frame_u_equals_x_of_c():
    for N in range(2, 7):
        frame = F.canonical_frame(N)
        for c, u in zip(frame.c, frame.u):
            assert F.x_at_polar(c) == u


def test_frame_delta_branch():
    for N in range(2, 7):
        frame = F.canonical_frame(N)
        for c, dh in zip(frame.c, frame.delta_half):
            xs = c.inv().pow(3) * Q(2)
            if N != 2:
                xs = xs + c.pow(N - 3) * Q((N - 1) * (N - 2))
            assert xs == dh * dh


def test_unstable01_examples():
    assert F.unstable01(2, 1) == Q(1, 2)
    assert F.unstable01(3, 2) == Q(1, 6)
    assert F.unstable01(2, 0) == 0


def test_unstable01_vs_oracle():
    for N in (2, 3, 4):
        for k in range(9):
            if k + 1 > 12:
                break
            lhs = F.unstable01(N, k) * factorial(k + 1)
            assert lhs == O.enumerate_rhm(O.Profile(N, 0, (k + 1,)))


def test_unstable02_examples():
    assert F.unstable02(2, 1, 1) == Q(1, 2)
    assert F.unstable02(2, 0, 0) == 1


def test_unstable02_symmetry():
    for N in (2, 3):
        for k1 in range(4):
            for k2 in range(4):
                assert F.unstable02(N, k1, k2) == F.unstable02(N, k2, k1)


def test_unstable02_vs_oracle():
    for N in (2, 3, 4):
        for k1 in range(5):
            for k2 in range(5):
                if k1 + k2 + 2 > 10:
                    continue
                lhs = F.unstable02(N, k1, k2) \
                    * factorial(k1 + 1) * factorial(k2 + 1)
                assert lhs == O.enumerate_rhm(
                    O.Profile(N, 0, (k1 + 1, k2 + 1))), (N, k1, k2)


def test_symplectic_report_shape():
    # reported, not gated: the defect table exists and is square
    for N in (2, 3):
        for k in range(3):
            defect = F.symplectic_defect(N, k)
            assert len(defect) == N and all(len(r) == N for r in defect)


def test_exact_polar_normalization():
    v = ExactPolar(3, -2, e1=Q(4, 3), ang=Q(7, 3))
    assert v.q == 4 and v.e1 == Q(1, 3)
    assert v.ang == Q(1, 3) + Q(1, 2)
    assert v * v.inv() == ExactPolar.one(3)


def test_exact_polar_sum_guard():
    a = ExactPolar(3, 1, ang=Q(1, 3))
    b = ExactPolar(3, 1, ang=Q(1, 4))
    with pytest.raises(ValueError, match="leaves the exact polar class"):
        a + b
    assert a + (-a) == ExactPolar.zero(3)
