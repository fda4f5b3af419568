import math
from collections import Counter
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from npd.perm import (AN, SN, Partition, Permutation, centralizer_order, class_index, compose,
                      conjugacy_classes, conjugator, cycle_type, distinct_odd_partitions,
                      e_statistic, enumerate_group, inverse, is_derangement, is_even,
                      num_cycles, partitions, partitions_list, sigma_k_sets,
                      sign_by_transpositions, splits_in_an, standard_representative)

from conftest import perm_pairs, perms


def test_composition_applies_right_factor_first():
    a = Permutation.from_cycles(3, [(0, 1)])
    b = Permutation.from_cycles(3, [(1, 2)])
    # (a*b)[i] = a[b[i]]
    assert a * b == Permutation([a[b[i]] for i in range(3)])
    assert a * b == Permutation([1, 2, 0])
    assert a * b != b * a


def test_parse_forms_agree():
    assert Permutation.parse("(0 1)(2 3 4)") == Permutation([1, 0, 3, 4, 2])
    assert Permutation.parse("[1,0,3,4,2]") == Permutation([1, 0, 3, 4, 2])
    assert Permutation.parse("(0 1)", n=4) == Permutation([1, 0, 2, 3])


def test_rejects_non_bijection():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        Permutation.from_cycles(3, [(0, 1), (1, 2)])


@given(perm_pairs())
def test_group_axioms(pair):
    a, b = pair
    e = Permutation.identity(len(a))
    assert a * e == a == e * a
    assert a * a.inverse() == e
    assert (a * b).inverse() == b.inverse() * a.inverse()
    assert compose(a, b) == a * b
    assert inverse(a) == a.inverse()


@given(perms())
def test_cycle_type_is_partition_of_n(p):
    mu = cycle_type(p)
    assert sum(mu) == len(p)
    assert list(mu) == sorted(mu, reverse=True)
    assert num_cycles(p) == len(mu)
    assert Permutation.from_cycles(len(p), p.cycles()) == p


@given(perms())
def test_parity_matches_transposition_count(p):
    assert is_even(p) == (sign_by_transpositions(p) == 1)


@given(perm_pairs())
def test_sign_is_multiplicative(pair):
    a, b = pair
    assert sign_by_transpositions(a * b) == sign_by_transpositions(a) * sign_by_transpositions(b)


@given(perm_pairs())
def test_conjugation_preserves_type_and_conjugator_works(pair):
    a, x = pair
    b = a.conjugate(x)
    assert b == x * a * x.inverse()
    assert cycle_type(a) == cycle_type(b)
    y = conjugator(a, b)
    assert y * a * y.inverse() == b


@given(perms())
def test_derangement_means_no_fixed_point(p):
    assert is_derangement(p) == all(p[i] != i for i in range(len(p)))


@pytest.mark.parametrize("n", range(1, 7))
def test_classes_are_conjugation_orbits(n):
    for kind in (SN, AN):
        group = list(enumerate_group(n, kind))
        left = set(group)
        orbits = []
        while left:
            g = left.pop()
            orbit = {g.conjugate(x) for x in group}
            left -= orbit
            orbits.append(orbit)
        classes = conjugacy_classes(n, kind)
        assert sorted(len(o) for o in orbits) == sorted(c.class_size for c in classes)
        for orbit in orbits:
            assert len({class_index(g, kind) for g in orbit}) == 1


def test_a4_three_cycles_split():
    sizes = sorted(c.class_size for c in conjugacy_classes(4, AN))
    assert sizes == [1, 3, 4, 4]
    assert splits_in_an((3, 1))


@pytest.mark.parametrize("n", range(1, 8))
def test_centralizer_orders(n):
    counts = Counter(cycle_type(g) for g in permutations(range(n)))
    for mu, c in counts.items():
        assert c * centralizer_order(mu) == math.factorial(n)


@pytest.mark.parametrize("n,count", [(1, 1), (5, 7), (10, 42), (15, 176)])
def test_partition_counts(n, count):
    assert len(list(partitions(n))) == count == len(partitions_list(n))


def test_distinct_odd_partitions_small():
    assert sorted(distinct_odd_partitions(8)) == [(5, 3), (7, 1)]


@given(st.integers(min_value=1, max_value=10).flatmap(lambda n: st.sampled_from(partitions_list(n))))
def test_standard_representative_has_type(mu):
    assert cycle_type(standard_representative(mu)) == mu


def test_partition_transpose():
    assert Partition((3, 1)).transpose() == (2, 1, 1)
    assert Partition((4, 2, 1)).transpose().transpose() == (4, 2, 1)


def test_sigma_sets_and_e_statistic():
    g = Permutation.from_cycles(6, [(0, 1), (2, 3, 4)])
    assert sigma_k_sets(g) == [1, 3, 6, 6, 6, 6]
    assert e_statistic(Permutation.identity(5)) == pytest.approx(1.0)
    assert 0 < e_statistic(Permutation.from_cycles(5, [(0, 1, 2, 3, 4)])) <= 1
