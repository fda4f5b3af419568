import itertools

import numpy as np
import pytest
from hypothesis import given, strategies as st

from npd.errors import SizeGuardExceeded
from npd.linear_strata import (FqElement, MatrixFq, batch_fixed_dim, batch_matmul, enumerate_sl,
                               fixed_q_product_check, fixed_space_dim, gaussian_binomial, gf,
                               grass_sandwich, intersection_bound_sample, is_transvection,
                               multiplicative_order, sl_elements, sl_order, stratum_census,
                               zsygmondy_prime)

FIELDS = [2, 3, 4, 5, 7, 8, 9]


@pytest.mark.parametrize("q", FIELDS)
def test_field_axioms(q):
    F = gf(q)
    R = range(q)
    for a, b, c in itertools.product(R, repeat=3):
        assert F.mul[a][F.add[b][c]] == F.add[F.mul[a][b]][F.mul[a][c]]
        assert F.add[F.add[a][b]][c] == F.add[a][F.add[b][c]]
        assert F.mul[F.mul[a][b]][c] == F.mul[a][F.mul[b][c]]
    for a in R:
        assert F.add[a][F.neg[a]] == 0
        if a:
            assert F.mul[a][F.inv[a]] == 1
    # the multiplicative group is cyclic of order q - 1
    assert any(len({F.pow(g, k) for k in range(q - 1)}) == q - 1 for g in range(1, q))


def test_unsupported_field():
    with pytest.raises(ValueError):
        gf(6)
    with pytest.raises(ValueError):
        gf(16)


def test_element_syntax():
    a, b = FqElement(4, 2), FqElement(4, 3)
    assert (a * b) * b.inverse() == a
    assert a - a == FqElement(4, 0)
    assert a ** 3 == FqElement(4, 1)
    with pytest.raises(ZeroDivisionError):
        FqElement(5, 0).inverse()


@st.composite
def matrices(draw, q=None, n=None):
    q = q or draw(st.sampled_from(FIELDS))
    n = n or draw(st.integers(min_value=1, max_value=4))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=n, max_size=n))
    return MatrixFq(q, rows)


@given(st.sampled_from(FIELDS).flatmap(
    lambda q: st.integers(1, 4).flatmap(lambda n: st.tuples(matrices(q, n), matrices(q, n)))))
def test_det_multiplicative_and_batch_product(pair):
    a, b = pair
    F = a.field
    assert (a * b).det() == F.mul[a.det()][b.det()]
    batched = batch_matmul(a.to_array()[None], b.to_array()[None], F)[0]
    assert MatrixFq(a.q, batched) == a * b


@given(matrices())
def test_fixed_dim_by_counting_matches_elimination(m):
    F = m.field
    vecs = list(itertools.product(range(m.q), repeat=m.n))
    fixed = sum(1 for v in vecs if all(
        sum_f(F, [F.mul[m.rows[i][k]][v[k]] for k in range(m.n)]) == v[i] for i in range(m.n)))
    assert fixed == m.q ** fixed_space_dim(m)
    assert batch_fixed_dim(m.to_array()[None], F)[0] == fixed_space_dim(m)


def sum_f(F, xs):
    acc = 0
    for x in xs:
        acc = F.add[acc][x]
    return acc


@pytest.mark.parametrize("n,q", [(1, 5), (2, 2), (2, 3), (2, 4), (2, 5), (3, 2), (2, 8)])
def test_enumerate_sl(n, q):
    elems = enumerate_sl(n, q)
    assert len(elems) == sl_order(n, q)
    assert len({e.tobytes() for e in elems}) == len(elems)
    for e in elems[:: max(1, len(elems) // 50)]:
        assert MatrixFq(q, e).det() == 1


def test_sl_guard():
    with pytest.raises(SizeGuardExceeded):
        enumerate_sl(4, 3, guard=1000)


def test_sl_elements_cached_read_only():
    a = sl_elements(2, 3)
    assert a is sl_elements(2, 3)
    with pytest.raises(ValueError):
        a[0, 0, 0] = 2


def test_transvection():
    t = MatrixFq(3, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert is_transvection(t)
    assert not is_transvection(MatrixFq.identity(3, 3))


def span_count(k, m, q):
    F = gf(q)
    vecs = [v for v in itertools.product(range(q), repeat=k)]
    spaces = set()
    for basis in itertools.combinations([v for v in vecs if any(v)], m):
        rows = [list(b) for b in basis]
        from npd.linear_strata import _rank
        if _rank(rows, F) == m:
            from npd.linear_strata import _in_span_set
            spaces.add(frozenset(_in_span_set(list(basis), F)))
    return len(spaces)


@pytest.mark.parametrize("k,m,q", [(4, 2, 2), (3, 1, 3), (3, 2, 3), (3, 1, 4), (4, 1, 2)])
def test_gaussian_binomial_counts_subspaces(k, m, q):
    assert gaussian_binomial(k, m, q) == span_count(k, m, q)


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 1, 3) == 4
    assert gaussian_binomial(4, 2, 2) == 35
    with pytest.raises(ValueError):
        gaussian_binomial(2, 3, 2)


@pytest.mark.parametrize("q", FIELDS)
def test_grass_sandwich(q):
    for k in range(11):
        for m in range(k + 1):
            assert grass_sandwich(k, m, q)


@given(st.integers(0, 12), st.data(), st.integers(2, 9))
def test_gaussian_binomial_symmetry_and_pascal(k, data, q):
    m = data.draw(st.integers(0, k))
    assert gaussian_binomial(k, m, q) == gaussian_binomial(k, k - m, q)
    if 0 < m < k:
        assert gaussian_binomial(k, m, q) == (gaussian_binomial(k - 1, m - 1, q)
                                              + q ** m * gaussian_binomial(k - 1, m, q))


@pytest.mark.parametrize("n,q,counts", [
    (2, 2, {0: 2, 1: 3, 2: 1}),
    (2, 3, {0: 15, 1: 8, 2: 1}),
    (3, 2, {0: 48, 1: 98, 2: 21, 3: 1}),
])
def test_stratum_census(n, q, counts):
    c = stratum_census(n, q)
    assert c.counts == counts
    assert c.passed


def test_stratum_census_against_elimination():
    elems = sl_elements(2, 4)
    c = stratum_census(2, 4)
    direct = {}
    for e in elems:
        d = fixed_space_dim(MatrixFq(4, e))
        direct[d] = direct.get(d, 0) + 1
    assert c.counts == {m: direct.get(m, 0) for m in range(3)}


def test_fixed_q_check_matches_direct_products():
    n, q = 3, 2
    rep = fixed_q_product_check(n, q, 0, 2)
    elems = [MatrixFq(q, e) for e in sl_elements(n, q)]
    S = [m for m in elems if fixed_space_dim(m) == 0]
    T = [m for m in elems if fixed_space_dim(m) == 2]
    direct = sum(1 for s in S for t in T if is_transvection(s * t))
    assert direct == 0 and rep.hits == 0 and rep.passed
    assert rep.transvections == 21


def test_fixed_q_control_without_separation():
    rep = fixed_q_product_check(2, 3, 0, 1)
    assert rep.hits > 0 and not rep.separation_ok and rep.passed


@pytest.mark.parametrize("n,q", [(3, 2), (2, 5), (2, 4)])
def test_intersection_bound_sample(n, q):
    assert intersection_bound_sample(n, q, 20_000, np.random.default_rng(0)) == 0


def brute_zsygmondy(q, e):
    for l in range(2, q ** e):
        if all(l % p for p in range(2, int(l ** 0.5) + 1)) and q % l and multiplicative_order(q, l) == e:
            return l
    return None


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_zsygmondy_brute_force(q):
    for e in range(1, 11):
        if q ** e > 10 ** 6:
            continue
        assert zsygmondy_prime(q, e) == brute_zsygmondy(q, e)


def test_zsygmondy_exceptions_and_values():
    assert zsygmondy_prime(2, 6) is None
    assert zsygmondy_prime(2, 1) is None
    assert zsygmondy_prime(3, 2) is None
    assert zsygmondy_prime(2, 12) == 13
    assert zsygmondy_prime(5, 7) == 19531
