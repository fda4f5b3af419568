import math
from fractions import Fraction

import pytest
from hypothesis import given

from npd.characters import (an_character_table, character_table, classify_nonvanishing_pair,
                            degree_hook_formula, diagonal_hooks, hook_lengths, mn_character,
                            rim_hook_removals, sn_character_table, unipotent_gl_degree,
                            verify_adegree_bound)
from npd.errors import SizeGuardExceeded, SizeMismatch
from npd.perm import AN, SN, enumerate_group, partitions_list
from npd.quadratic import QuadNumber, conj

from conftest import partitions_st


@pytest.mark.parametrize("n", range(1, 11))
def test_sn_table_orthogonal(n):
    t = sn_character_table(n)
    assert t.check_orthogonality()
    assert sum(d * d for d in t.degrees) == math.factorial(n)
    assert t.degrees == [degree_hook_formula(lam) for lam in partitions_list(n)]


@pytest.mark.parametrize("n", range(1, 11))
def test_an_table_orthogonal(n):
    t = an_character_table(n)
    assert t.check_orthogonality()
    assert sum(d * d for d in t.degrees) == t.order
    assert len(t) == len(t.classes)


@given(partitions_st(max_n=12))
def test_standard_character_counts_fixed_points(mu):
    n = sum(mu)
    if n >= 2:
        assert mn_character((n - 1, 1), mu) == mu.count(1) - 1


@given(partitions_st(max_n=12))
def test_sign_character(mu):
    n = sum(mu)
    sign = (-1) ** (n - len(mu))
    assert mn_character((1,) * n, mu) == sign
    assert mn_character((n,), mu) == 1


@given(partitions_st(max_n=10), partitions_st(max_n=10))
def test_transpose_twists_by_sign(lam, mu):
    if sum(lam) != sum(mu):
        return
    from npd.perm import Partition
    sign = (-1) ** (sum(mu) - len(mu))
    assert mn_character(Partition(lam).transpose(), mu) == sign * mn_character(lam, mu)


@pytest.mark.parametrize("n", [3, 4])
def test_characters_against_group_average(n):
    # <chi, chi> = 1 computed by summing over every group element
    from npd.perm import cycle_type
    elems = list(enumerate_group(n, SN))
    for lam in partitions_list(n):
        total = sum(mn_character(lam, cycle_type(g)) ** 2 for g in elems)
        assert total == math.factorial(n)


def test_a5_golden_ratio_values():
    t = an_character_table(5)
    assert sorted(t.degrees) == [1, 3, 3, 4, 5]
    phi = QuadNumber.from_parts(Fraction(1, 2), Fraction(1, 2), 5)
    five_cycles = [i for i, c in enumerate(t.classes) if c.cycle_type == (5,)]
    assert len(five_cycles) == 2
    threes = [row for row, d in zip(t.values, t.degrees) if d == 3]
    seen = {v for row in threes for v in (row[i] for i in five_cycles)}
    assert phi in seen and (1 - phi) in seen


def test_character_table_dispatch_and_guard():
    assert character_table(4, AN).order == 12
    assert character_table(4, SN).order == 24
    with pytest.raises(SizeGuardExceeded):
        sn_character_table(13)


def test_hooks():
    assert hook_lengths((3, 1)) == [4, 2, 1, 1]
    assert degree_hook_formula((3, 2)) == 5
    assert diagonal_hooks((3, 3, 1)) == (5, 2)
    removed = {(r.result, r.sign) for r in rim_hook_removals((3, 1), 2)}
    assert removed == {((1, 1), 1)}
    removed = {(r.result, r.sign) for r in rim_hook_removals((2, 2), 3)}
    assert removed == {((1,), -1)}


def test_quadratic_arithmetic():
    r5 = QuadNumber.sqrt(5)
    assert r5 * r5 == 5
    assert QuadNumber.sqrt(-3) * QuadNumber.sqrt(-3) == -3
    assert conj(QuadNumber.sqrt(-3)) == -QuadNumber.sqrt(-3)
    x = 1 + r5
    assert conj(x) == x
    galois = 1 - r5
    assert x * galois == -4
    assert (x * galois) / 4 == -1
    z = 1 + QuadNumber.sqrt(-3)
    assert z * conj(z) == 4
    with pytest.raises(ValueError):
        x / x


@pytest.mark.parametrize("q", [2, 3, 4])
def test_unipotent_degrees_known_values(q):
    # row lengths feed the power of q, so (n) is the Steinberg character
    n = 4
    assert unipotent_gl_degree((1,) * n, q) == 1
    assert unipotent_gl_degree((n,), q) == q ** math.comb(n, 2)
    assert unipotent_gl_degree((2,) + (1,) * (n - 2), q) == q * (q ** (n - 1) - 1) // (q - 1)


@pytest.mark.parametrize("q", [2, 3])
def test_unipotent_degrees_sum_of_squares_bound(q):
    # unipotent degrees are among the irreducible degrees of GL_n(q)
    n = 4
    order = q ** math.comb(n, 2) * math.prod(q**j - 1 for j in range(1, n + 1))
    assert sum(unipotent_gl_degree(lam, q) ** 2 for lam in partitions_list(n)) < order
    for lam in partitions_list(n):
        assert order % unipotent_gl_degree(lam, q) == 0


def test_adegree_bound_small_cases():
    for q in (2, 3):
        for n in range(1, 13):
            for L in range(4):
                if n > 2 * L:
                    assert verify_adegree_bound(n, L, q).passed
    with pytest.raises(ValueError):
        verify_adegree_bound(4, 2, 2)


@pytest.mark.parametrize("n", range(10, 15))
def test_twelve_nonvanishing(n):
    rows = classify_nonvanishing_pair(n, (n - 3, 3), (n - 4, 4))
    assert len(rows) == 12
    assert {a * b for _, a, b in rows} <= {-1, 1}


def test_nonvanishing_rejects_bad_types():
    with pytest.raises(SizeMismatch):
        classify_nonvanishing_pair(10, (7, 2), (6, 4))
