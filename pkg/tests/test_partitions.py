import random

from hypermaps.partitions import (
    character,
    conjugate,
    contents,
    hook_products,
    mult_vector,
    partitions,
    schur_from_powersums,
    z_mu,
)
from hypermaps.rational import Q


def test_partition_counts():
    counts = [len(list(partitions(n))) for n in range(1, 9)]
    assert counts == [1, 2, 3, 5, 7, 11, 15, 22]


def test_partitions_are_sorted():
    for lam in partitions(7):
        assert all(a >= b for a, b in zip(lam, lam[1:]))


def test_z_mu_examples():
    assert z_mu((1, 1, 1)) == 6
    assert z_mu((2, 1)) == 2
    assert z_mu((3,)) == 3
    # classes partition the symmetric group: sum of n!/z_mu is n!
    assert sum(Q(720, z_mu(mu)) for mu in partitions(6)) == 720


def test_conjugate_involution():
    for lam in partitions(8):
        assert conjugate(conjugate(lam)) == lam


def test_contents_and_hooks():
    assert sorted(contents((2, 1))) == [-1, 0, 1]
    assert hook_products((2, 1)) == 3
    assert hook_products((3,)) == 6


def test_character_known_values():
    # S_3: trivial, standard, sign
    assert character((3,), (1, 1, 1)) == 1
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((1, 1, 1), (1, 1, 1)) == 1
    assert character((2, 1), (3,)) == -1
    assert character((1, 1, 1), (2, 1)) == -1
    # column orthogonality at n = 4, mu = (2,1,1) vs (4,)
    dot = sum(character(lam, (2, 1, 1)) * character(lam, (4,))
              for lam in partitions(4))
    assert dot == 0


def test_character_sign_partition():
    for lam in partitions(5):
        assert character(lam, (1,) * 5) == character(conjugate(lam),
                                                     (1,) * 5)


def test_mult_vector():
    assert mult_vector((3, 2, 2, 1)) == {3: 1, 2: 2, 1: 1}


def test_schur_from_powersums_matches_dimension():
    # at p_k = delta_{k1} * n variables... simplest: p_k = x for k=1 only
    # s_lambda(p_1=t, p_k=0) = chi^lambda_{1^n}/n! * t^n
    lam = (2, 1)
    val = schur_from_powersums(lam, {1: Q(3)})
    assert val == Q(2) * Q(27, 6)


def test_schur_powersum_random_consistency():
    from hypermaps.series import EpsLaurent
    from hypermaps.tau import schur_at, schur_at_mn
    rng = random.Random(5)
    for _ in range(5):
        lam = rng.choice([(3, 1), (2, 2), (4,), (2, 1, 1), (3, 2, 1)])
        p = {k: EpsLaurent.const(Q(rng.randint(-5, 5), rng.randint(1, 4)))
             for k in range(1, sum(lam) + 1)}
        assert schur_at(lam, p) == schur_at_mn(lam, p)
        plain = {k: v.coeff(0) for k, v in p.items()}
        assert schur_from_powersums(lam, plain) == schur_at(lam, p).coeff(0)
