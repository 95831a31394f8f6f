import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cartesian_ghw.errors import BadRange, ConditionFails
from cartesian_ghw.footprint import footprint_bound
from cartesian_ghw.formulas import (
    code_dimensions,
    condition_holds,
    ghw_formula_affine_punctured,
    ghw_formula_Cd,
    ghw_formula_Cleqd,
    ghw_formula_projective,
    lemma_shadow_lower_bound,
    projective_lengths,
)


def test_condition_examples():
    for d in range(1, 5):
        for r in range(1, 6 - d):
            assert condition_holds((4, 4, 4, 4), d, r)
    assert condition_holds((2, 3, 7, 50), 1, 2)
    assert not condition_holds((2, 3, 3, 50), 2, 3)
    # order of the sizes does not matter
    assert not condition_holds((50, 3, 2, 3), 2, 3)


def test_lemma_examples():
    assert lemma_shadow_lower_bound((2, 2, 2, 2, 2), 2, 3) == 14
    assert lemma_shadow_lower_bound((3, 4, 5), 1, 1) == 4 * 5 * 2
    assert lemma_shadow_lower_bound((2, 3, 4), 2, 2) == 11
    assert footprint_bound((2, 3, 4), 2, 2, True).value == 11


def test_Cd_examples():
    assert [ghw_formula_Cd((2, 2, 2), 1, r) for r in (1, 2, 3)] == [4, 6, 7]
    assert ghw_formula_Cd((2, 3, 4), 2, 1) == 8
    assert ghw_formula_Cd((2, 3, 4), 1, 1) == 12


def test_Cleqd_examples():
    assert ghw_formula_Cleqd((2, 2, 2), 1, 1) == 4
    assert ghw_formula_Cleqd((3, 3), 2, 1) == 4
    with pytest.raises(BadRange):
        ghw_formula_Cleqd((3, 3), 2, 2)


def test_condition_failure_carries_value():
    with pytest.raises(ConditionFails) as info:
        ghw_formula_Cd((2, 3, 3, 50), 2, 3)
    assert info.value.value == lemma_shadow_lower_bound((2, 3, 3, 50), 2, 3)


def test_affine_punctured_examples():
    assert ghw_formula_affine_punctured(3, 2, 1, 1) == 6
    assert ghw_formula_affine_punctured(2, 3, 1, 3) == 7
    assert ghw_formula_affine_punctured(2, 2, 2, 1) == 1


def test_projective_examples():
    assert ghw_formula_projective(2, 2, 2, 1) == 2
    assert ghw_formula_projective(3, 2, 1, 1) == 9
    assert ghw_formula_projective(2, 1, 2, 1) == 1
    with pytest.raises(BadRange):
        ghw_formula_projective(2, 2, 2, 3)


def test_projective_lengths():
    assert projective_lengths(2, 2, 1)[0] == 7
    assert projective_lengths(2, 2, 2) == (7, 4)
    assert projective_lengths(3, 1, 1) == (4, 4)
    # over F_3 the points with one nonzero coordinate are (1,0,0), (0,1,0),
    # (0,0,1); with two there are 3 * 2 of them
    assert projective_lengths(3, 2, 3) == (13, 13 - 3 - 6)


def test_dimensions():
    assert code_dimensions(4, 2) == (6, 11, 10)
    assert code_dimensions(3, 3) == (1, 8, 4)
    assert code_dimensions(5, 2)[0] == 10


def test_bad_sizes():
    with pytest.raises(BadRange):
        ghw_formula_Cd((1, 3), 1, 1)
    with pytest.raises(BadRange):
        ghw_formula_Cd((2, 3), 3, 1)


sizes_st = st.lists(st.integers(2, 6), min_size=1, max_size=5)


@settings(max_examples=200, deadline=None)
@given(sizes_st, st.data())
def test_lemma_bounds_footprint_and_equals_it_under_condition(sizes, data):
    m = len(sizes)
    d = data.draw(st.integers(1, m))
    r = data.draw(st.integers(1, m + 1 - d))
    lb = lemma_shadow_lower_bound(sizes, d, r)
    fb = footprint_bound(sizes, d, r, True).value
    assert lb <= fb
    if condition_holds(sizes, d, r):
        assert lb == fb


@settings(max_examples=100, deadline=None)
@given(sizes_st, st.data())
def test_condition_holds_for_r_at_most_2(sizes, data):
    m = len(sizes)
    d = data.draw(st.integers(1, m))
    for r in range(1, min(2, m + 1 - d) + 1):
        assert condition_holds(sizes, d, r)


def test_projective_lengths_by_count():
    for q, m in itertools.product((2, 3, 4), (1, 2, 3)):
        pts = [v for v in itertools.product(range(q), repeat=m + 1) if any(v)]
        for d in range(1, m + 2):
            heavy = sum(1 for v in pts if sum(1 for x in v if x) >= d) // (q - 1)
            assert projective_lengths(q, m, d) == (len(pts) // (q - 1), heavy)
