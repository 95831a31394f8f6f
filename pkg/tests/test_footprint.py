import itertools
from math import prod

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cartesian_ghw.cartesian import CartesianSet, preset
from cartesian_ghw.combinatorics import SquareFreeExponent, enumerate_Sd, monomial_set_str
from cartesian_ghw.errors import BudgetExceeded, SearchBudgetExceeded, TooManyMonomials
from cartesian_ghw.field import field_make
from cartesian_ghw.footprint import (
    footprint_bound,
    monomial_pool,
    shadow_report,
    shadow_size_enum,
    shadow_size_ie,
    vanishing_count,
)


def S(m, *supports):
    return [SquareFreeExponent.from_support(m, s) for s in supports]


EXAMPLE_WITNESS = S(5, (0, 1), (0, 2), (0, 3))


def test_shadow_examples():
    for f in (shadow_size_enum, shadow_size_ie):
        assert f((2, 3, 4), S(3, (0, 1))) == 8
        assert f((2, 2, 2, 2, 2), EXAMPLE_WITNESS) == 14
        assert f((2, 2, 2), S(3, (0, 1), (0, 2))) == 3
        assert f((3, 3), S(2, (0,), (1,))) == 8
    assert shadow_report((3, 3), S(2, (0,), (1,))).shadow_size == 8


def test_shadow_limits():
    with pytest.raises(BudgetExceeded):
        shadow_size_enum((10,) * 8, S(8, (0,)), budget=1000)
    many = [SquareFreeExponent.from_support(8, s) for s in itertools.combinations(range(8), 3)]
    with pytest.raises(TooManyMonomials):
        shadow_size_ie((2,) * 8, many)


def test_footprint_examples():
    res = footprint_bound((2, 2, 2), 1, 2, True)
    assert res.value == 6 and monomial_set_str(res.witness) == "{x1, x2}"
    res = footprint_bound((2,) * 5, 2, 3, True)
    assert res.value == 14
    assert res.witness == tuple(EXAMPLE_WITNESS)


@pytest.mark.parametrize("sizes", [(2, 3, 4), (4, 2, 3), (3, 3, 5, 2)])
def test_footprint_r1_is_smallest_sizes_monomial(sizes):
    s = sorted(sizes)
    for d in range(1, len(sizes) + 1):
        want = prod(n - 1 for n in s[:d]) * prod(s[d:])
        assert footprint_bound(sizes, d, 1, True).value == want


def test_search_budget():
    with pytest.raises(SearchBudgetExceeded) as info:
        footprint_bound((3,) * 6, 3, 4, True, budget=10)
    assert info.value.partial is not None


def test_vanishing_examples():
    F2, F3 = field_make(2), field_make(3)
    assert vanishing_count(preset("affine", F2, 3), S(3, (0, 1))) == 6
    assert vanishing_count(preset("torus", F3, 2), S(2, (0,))) == 0
    assert vanishing_count(preset("affine", F3, 2), S(2, (0,), (1,))) == 1


def test_pool_order():
    pool = monomial_pool(3, 2, False)
    assert pool[:3] == enumerate_Sd(3, 2)
    assert len(pool) == 7


monomial_sets = st.integers(1, 6).flatmap(
    lambda m: st.tuples(
        st.lists(st.integers(1, 4), min_size=m, max_size=m),
        st.sets(st.frozensets(st.integers(0, m - 1)), min_size=1, max_size=6),
    )
)


@settings(max_examples=200, deadline=None)
@given(monomial_sets)
def test_enum_equals_inclusion_exclusion(data):
    sizes, supports = data
    m = len(sizes)
    N = [SquareFreeExponent.from_support(m, s) for s in supports]
    assert shadow_size_enum(sizes, N) == shadow_size_ie(sizes, N)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_vanishing_bijection(seed):
    rng = np.random.default_rng(seed)
    q = int(rng.choice([2, 3, 4, 5]))
    F = field_make(q)
    m = int(rng.integers(1, 5))
    factors = tuple((0,) + tuple(int(a) for a in rng.permutation(np.arange(1, q))[: int(rng.integers(1, q))]) for _ in range(m))
    X = CartesianSet(F, factors)
    supports = {frozenset(np.nonzero(rng.integers(0, 2, size=m))[0].tolist()) for _ in range(int(rng.integers(1, 5)))}
    M = [SquareFreeExponent.from_support(m, s) for s in supports]
    assert vanishing_count(X, M) == prod(X.sizes) - shadow_size_ie(X.sizes, M)


def brute_footprint(sizes, d, r, homogeneous):
    pool = monomial_pool(len(sizes), d, homogeneous)
    return min(shadow_size_ie(sizes, N) for N in itertools.combinations(pool, r))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(2, 5), min_size=1, max_size=4), st.data())
def test_footprint_search_matches_brute_force(sizes, data):
    m = len(sizes)
    hom = data.draw(st.booleans())
    d = data.draw(st.integers(1, m))
    k = len(monomial_pool(m, d, hom))
    r = data.draw(st.integers(1, min(k, 4)))
    assert footprint_bound(sizes, d, r, hom).value == brute_footprint(sizes, d, r, hom)
