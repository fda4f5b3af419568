import itertools
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from npd.errors import NotACohook, NotAHook, SizeGuardExceeded
from npd.linear_strata import zsygmondy_prime
from npd.lusztig_symbols import (COHOOK, HOOK, ODD, HookRecord, SymbolXY, all_hook_cohook_lengths,
                                 bipartition_count, classify_surviving_symbols, cohooks,
                                 count_constrained, defect_class, denominator_divisible,
                                 disjoint_hook_violation, enumerate_symbols, equivalent, hooks,
                                 inefficiency, minimal, rank, rank_by_entries, rank_by_inefficiency,
                                 remove_cohook, remove_hook, shift)

sets = st.frozensets(st.integers(0, 9), max_size=6).map(lambda s: tuple(sorted(s)))
symbols = st.builds(SymbolXY, sets, sets)


@lru_cache(maxsize=None)
def brute_classes(r, top):
    """Minimal classes of rank r among all pairs of subsets of {0..top-1}."""
    found = set()
    subsets = [c for k in range(top + 1) for c in itertools.combinations(range(top), k)]
    for x in subsets:
        for y in subsets:
            s = SymbolXY(x, y)
            if rank_by_inefficiency(s) == r:
                found.add(minimal(s))
    return frozenset(found)


@pytest.mark.parametrize("r", range(0, 5))
def test_enumeration_matches_brute_force(r):
    want = brute_classes(r, r + 3)
    assert brute_classes(r, r + 4) == want  # window large enough
    assert set(enumerate_symbols(r)) == set(want)
    assert len(enumerate_symbols(r)) == len(want)


def test_known_class_counts():
    assert [len(enumerate_symbols(r, ODD)) for r in range(1, 7)] == [2, 6, 12, 25, 46, 86]
    d4 = enumerate_symbols(4, "zero_mod_four")
    assert len(d4) + sum(s.degenerate for s in d4) == 14
    assert len(enumerate_symbols(3, "two_mod_four")) == 5


@given(sets)
def test_inefficiency_shift_invariant(x):
    assert inefficiency(shift(x)) == inefficiency(x)
    assert inefficiency(x) >= 0


@given(symbols)
def test_rank_forms_agree_and_are_invariant(s):
    assert rank_by_entries(s) == rank_by_inefficiency(s) == rank(s)
    assert rank(s.shifted()) == rank(s) == rank(s.swap())
    assert equivalent(s, s.shifted().swap())
    m = minimal(s)
    assert rank(m) == rank(s) and m.defect >= 0
    assert not (m.x and m.y and m.x[0] == 0 and m.y[0] == 0)


@given(symbols, st.integers(1, 8))
def test_hook_removal_lowers_rank(s, d):
    r = rank(s)
    for h in hooks(s, d):
        t = remove_hook(s, h)
        assert rank(t) == r - d and t.defect == s.defect
    for h in cohooks(s, d):
        t = remove_cohook(s, h)
        assert rank(t) == r - d and abs(t.defect - s.defect) == 2


def test_removal_errors():
    s = SymbolXY.of([0, 2], [1])
    with pytest.raises(NotAHook):
        remove_hook(s, HookRecord("X", (0, 2), 2, HOOK))
    with pytest.raises(NotACohook):
        remove_cohook(s, HookRecord("X", (1, 2), 1, COHOOK))
    with pytest.raises(ValueError):
        hooks(s, 0)


def test_symbol_validation_and_repr():
    with pytest.raises(ValueError):
        SymbolXY((2, 1), ())
    assert repr(SymbolXY.of([0, 3], [1])) == "({0,3},{1})"
    assert SymbolXY.of([1], [0]).to_json() == [[1], [0]]


def test_defect_classes():
    assert [defect_class(d) for d in (1, 2, 3, 4, 0, -2)] == [
        "odd", "two_mod_four", "odd", "zero_mod_four", "zero_mod_four", "two_mod_four"]


@pytest.mark.parametrize("r", range(0, 13))
def test_defect_one_counts_are_bipartitions(r):
    assert len(enumerate_symbols(r, lambda d: d == 1)) == bipartition_count(r)


def test_enumeration_guard():
    with pytest.raises(SizeGuardExceeded):
        enumerate_symbols(17)
    with pytest.raises(ValueError):
        enumerate_symbols(-1)


@given(symbols, st.integers(1, 8), st.integers(1, 8))
def test_disjoint_hooks_with_distinct_tops(s, d, d2):
    assert not disjoint_hook_violation(s, d, d2, HOOK, distinct_tops=True)
    assert not disjoint_hook_violation(s, d, d2, COHOOK, distinct_tops=True)


def test_disjoint_hooks_sharing_a_top():
    # rank 3, yet 3 carries a 2-hook (1, 3) and a 3-hook (0, 3)
    s = SymbolXY.of([3], [])
    assert rank(s) == 3
    assert disjoint_hook_violation(s, 2, 3)
    assert not disjoint_hook_violation(s, 2, 3, distinct_tops=True)


@pytest.mark.parametrize("k,k2,want", [(0, 1, 6), (0, 2, 12), (1, 2, 22)])
def test_constrained_counts_stabilize(k, k2, want):
    for a, b in [(HOOK, HOOK), (COHOOK, COHOOK), (HOOK, COHOOK), (COHOOK, HOOK)]:
        counts = {count_constrained(r, [(a, r - k), (b, r - k2)]) for r in range(12, 15)}
        assert counts == {want}


def test_count_constrained_rejects_bad_lengths():
    with pytest.raises(ValueError):
        count_constrained(5, [(HOOK, 6)])


def b2(n):
    return {minimal(SymbolXY.of(x, y)) for x, y in [
        ([n], []), ([0, n], [1]), (list(range(n - 1)) + [n], range(1, n)),
        (range(n + 1), range(1, n + 1))]}


def b3(n):
    return {minimal(SymbolXY.of(x, y)) for x, y in [
        ([n], []), ([1, n], [0]), (list(range(1, n - 1)) + [n], range(n)),
        (range(1, n + 1), range(n + 1))]}


@pytest.mark.parametrize("n", [6, 8, 10])
def test_surviving_symbols_even(n):
    got = classify_surviving_symbols(n, ODD, [(COHOOK, n), (HOOK, n - 1)])
    assert set(got) == b2(n) and len(got) == 4


@pytest.mark.parametrize("n", [7, 9, 11])
def test_surviving_symbols_odd(n):
    got = classify_surviving_symbols(n, ODD, [(HOOK, n), (COHOOK, n - 1)])
    assert set(got) == b3(n) and len(got) == 4


@pytest.mark.parametrize("n", [6, 7, 8, 9])
def test_constraints_agree_with_primitive_divisors(n):
    ells = ((zsygmondy_prime(2, 2 * n), zsygmondy_prime(2, n - 1)) if n % 2 == 0
            else (zsygmondy_prime(2, n), zsygmondy_prime(2, 2 * n - 2)))
    by_ell = {s for s in enumerate_symbols(n, ODD) if all(denominator_divisible(s, 2, l) for l in ells)}
    assert by_ell == (b2(n) if n % 2 == 0 else b3(n))


def test_hook_cohook_lengths():
    hk, ck = all_hook_cohook_lengths(SymbolXY.of([2], []))
    assert hk == [1, 2]
    assert ck == [1, 2]
    with pytest.raises(ValueError):
        denominator_divisible(SymbolXY.of([2], []), 3, 3)
