import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from npd.derangement_lab import (GroupAction, an_derangement_count, an_stabilizer_size,
                                 bonferroni_betweenness, derangement_ell_criterion, derangements,
                                 ell_set, is_ell_cycle, natural_derangements,
                                 three_cycle_representation_ratio, two_derangement_decompose,
                                 two_ell_cycle_factorization, verify_d_squared)
from npd.errors import SizeGuardExceeded
from npd.perm import AN, SN, Permutation, cycle_type, enumerate_group, group_order, is_derangement, is_even


def subfactorial(n):
    return sum((-1) ** r * math.factorial(n) // math.factorial(r) for r in range(n + 1))


@st.composite
def even_perms(draw, min_n=5, max_n=24):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    p = Permutation(draw(st.permutations(range(n))))
    if not p.is_even():
        p = Permutation.from_cycles(n, [(0, 1)]) * p
    return p


def check_pair(g, d1, d2):
    assert d1 * d2 == g
    assert is_derangement(d1) and is_derangement(d2)
    assert is_even(d1) and is_even(d2)


@pytest.mark.parametrize("n,kind,count", [(4, AN, 3), (5, AN, 24), (4, SN, 9), (5, SN, 44)])
def test_natural_derangement_counts(n, kind, count):
    rep = derangements(GroupAction.natural(n, kind))
    assert rep.count == count
    assert rep.proportion == Fraction(count, group_order(n, kind))


@pytest.mark.parametrize("n", range(2, 10))
def test_an_inclusion_exclusion_matches_brute_force(n):
    brute = sum(1 for g in enumerate_group(n, AN) if is_derangement(g))
    assert an_derangement_count(n) == brute
    even = sum(1 for g in enumerate_group(n, SN) if is_derangement(g) and g.is_even())
    assert brute == even


def test_stabilizer_sizes():
    assert an_stabilizer_size(6, 2) == 12
    assert an_stabilizer_size(6, 5) == an_stabilizer_size(6, 6) == 1


@pytest.mark.parametrize("n", range(3, 15))
def test_bonferroni_betweenness(n):
    rep = bonferroni_betweenness(n)
    assert rep.passed


def test_subset_action():
    act = GroupAction.k_subsets(6, 2)
    assert act.points == 15 and act.is_transitive()
    direct = sum(1 for g in act.group.elements
                 if all(tuple(sorted(g[x] for x in s)) != s for s in act.subsets))
    assert derangements(act).count == direct == 184


def test_non_transitive_action_rejected():
    from npd.class_products import perm_group
    with pytest.raises(ValueError):
        GroupAction(perm_group(4, AN), 5, lambda g: tuple(g) + (4,))


def test_ell_set():
    assert ell_set(8) == {7}
    assert ell_set(9) == {7, 9}
    assert ell_set(12) == {9, 11}


def test_ell_criterion():
    assert derangement_ell_criterion(GroupAction.natural(7)) == 7
    assert derangement_ell_criterion(GroupAction.natural(8)) is None
    assert derangement_ell_criterion(GroupAction.k_subsets(7, 2)) == 7


@given(st.data())
def test_two_ell_cycle_factorization(data):
    m = data.draw(st.integers(min_value=4, max_value=14))
    ell = data.draw(st.integers(min_value=3 * m // 4, max_value=m))
    g = Permutation(data.draw(st.permutations(range(m))))
    if not g.is_even():
        g = Permutation.from_cycles(m, [(0, 1)]) * g
    if ell % 2 == 0 or ell < 3:
        return
    x1, x2 = two_ell_cycle_factorization(g, ell, random.Random(0))
    assert x1 * x2 == g
    assert is_ell_cycle(x1, ell) and is_ell_cycle(x2, ell)


def test_two_ell_cycle_preconditions():
    g = Permutation.identity(8)
    with pytest.raises(ValueError):
        two_ell_cycle_factorization(g, 3)
    with pytest.raises(ValueError):
        two_ell_cycle_factorization(Permutation.from_cycles(8, [(0, 1)]), 7)


@given(even_perms())
def test_decomposition_is_valid(g):
    d1, d2 = two_derangement_decompose(g, rng=random.Random(1))
    check_pair(g, d1, d2)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_decomposition_exhaustive(n):
    rng = random.Random(n)
    for g in enumerate_group(n, AN):
        d = two_derangement_decompose(g, rng=rng)
        check_pair(g, d.d1, d.d2)


def test_case_tree_avoids_fallback_on_large_degrees():
    rng = random.Random(5)
    for n in (12, 13, 16, 21):
        for _ in range(200):
            p = list(range(n))
            rng.shuffle(p)
            g = Permutation(p)
            if not g.is_even():
                g = Permutation.from_cycles(n, [(0, 1)]) * g
            d = two_derangement_decompose(g, rng=rng)
            check_pair(g, d.d1, d.d2)
            assert not d.used_fallback


@pytest.mark.parametrize("cycles", [[], [(0, 1), (2, 3)], [(0, 1, 2)], [tuple(range(11))],
                                    [(0, 1), (2, 3, 4, 5)], [(0, 1), (2, 3), (4, 5), (6, 7)]])
def test_decomposition_structured_elements(cycles):
    for n in (12, 14):
        g = Permutation.from_cycles(n, cycles)
        d = two_derangement_decompose(g, rng=random.Random(0))
        check_pair(g, d.d1, d.d2)


def test_decomposition_rejects_odd_and_small():
    with pytest.raises(ValueError):
        two_derangement_decompose(Permutation.from_cycles(6, [(0, 1)]))
    with pytest.raises(ValueError):
        two_derangement_decompose(Permutation.identity(4))
    with pytest.raises(ValueError):
        two_derangement_decompose(Permutation.identity(6), n=7)


@pytest.mark.parametrize("n", [5, 6, 7])
def test_d_squared_natural(n):
    rep = verify_d_squared(GroupAction.natural(n))
    assert rep.passed and rep.order == group_order(n, AN)


def test_d_squared_subsets():
    assert verify_d_squared(GroupAction.k_subsets(6, 2)).passed


def test_d_squared_fails_for_a4():
    # only three derangements, all of order two: D^2 is the Klein group
    rep = verify_d_squared(GroupAction.natural(4))
    assert not rep.passed
    assert {cycle_type(g) for g in rep.gaps} == {(3, 1)}


def test_three_cycle_ratio_exact():
    # independent count of pairs (a, b) in D x D with ab = (0 1 2)
    n = 7
    D = natural_derangements(n)
    g = Permutation.from_cycles(n, [(0, 1, 2)])
    hits = sum(1 for a in D for b in D if a * b == g)
    want = Fraction(hits * group_order(n, AN), len(D) ** 2)
    assert three_cycle_representation_ratio(n) == want == Fraction(7602, 4805)


def test_three_cycle_ratio_increases_towards_e():
    vals = [three_cycle_representation_ratio(n) for n in (7, 8, 9)]
    assert vals[0] < vals[1] < vals[2] < math.e


def test_three_cycle_ratio_guard():
    with pytest.raises(SizeGuardExceeded):
        three_cycle_representation_ratio(8, guard=100)


@pytest.mark.parametrize("n", [4, 5, 6])
def test_d_squared_class_scan_agrees_with_full_scan(n):
    fast = verify_d_squared(GroupAction.natural(n))
    full = verify_d_squared(GroupAction.natural(n), all_elements=True)
    assert fast.passed == full.passed
    G = GroupAction.natural(n).group
    assert {G.class_of(g) for g in fast.gaps} == {G.class_of(g) for g in full.gaps}
