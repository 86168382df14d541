import pytest

from hypermaps.oracle import (
    Profile,
    enumerate_rhm,
    genus_table,
    rhm01_closed,
)


def test_anchor_values():
    assert enumerate_rhm(Profile(2, 0, (2,))) == 1
    assert enumerate_rhm(Profile(2, 0, (4,))) == 2
    assert enumerate_rhm(Profile(2, 1, (4,))) == 1
    assert enumerate_rhm(Profile(3, 0, (3,))) == 1
    assert enumerate_rhm(Profile(3, 1, (3,))) == 1


def test_closed_form_agreement():
    for N, cap in ((2, 12), (3, 9), (4, 8)):
        for k in range(cap):
            assert enumerate_rhm(Profile(N, 0, (k + 1,))) == \
                rhm01_closed(N, k), (N, k)


def test_closed_form_divisibility_zeros():
    assert rhm01_closed(2, 0) == 0
    assert rhm01_closed(2, 2) == 0
    assert rhm01_closed(3, 0) == 0
    assert rhm01_closed(3, 1) == 0


def test_degree_permutation_invariance():
    for degs in ((3, 2, 1), (1, 2, 3), (2, 3, 1)):
        assert enumerate_rhm(Profile(2, 0, degs)) == 12
    for degs in ((4, 1, 1), (1, 4, 1), (1, 1, 4)):
        assert enumerate_rhm(Profile(3, 0, degs)) == 24


def test_total_count_partition():
    # every transitive gluing lands in exactly one genus class: for
    # N=2, d=4 there are three pairings of the four darts, all
    # transitive against the canonical 4-cycle
    table = genus_table(2, (4,))
    assert sum(table.values()) == 3
    assert table == {0: 2, 1: 1}
    # N=3, d=3: both 3-cycles are transitive and split across genera
    table = genus_table(3, (3,))
    assert sum(table.values()) == 2
    assert table == {0: 1, 1: 1}


def test_indivisible_totals_vanish():
    assert enumerate_rhm(Profile(2, 0, (3,))) == 0
    assert enumerate_rhm(Profile(3, 1, (4,))) == 0


def test_cap_error():
    with pytest.raises(ValueError, match="oracle cap exceeded"):
        enumerate_rhm(Profile(2, 0, (14,)))
    assert enumerate_rhm(Profile(2, 0, (14,)), dart_cap=14) >= 0


def test_wrong_euler_accounting_is_caught():
    """Dropping the black faces from the Euler count must disagree with
    the closed form somewhere in the calibration window."""
    mismatches = 0
    for N, cap in ((2, 12), (3, 9), (4, 8)):
        for k in range(cap):
            want = rhm01_closed(N, k)
            got = enumerate_rhm(Profile(N, 0, (k + 1,)),
                                euler_variant="noblack")
            if got != want:
                mismatches += 1
    assert mismatches > 0


def test_unknown_variant_rejected():
    with pytest.raises(ValueError, match="unknown euler variant"):
        genus_table(2, (2,), euler_variant="mirror")
