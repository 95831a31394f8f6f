import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cartesian_ghw.cartesian import build_code, preset
from cartesian_ghw.errors import BadArgs, BudgetExceeded, CapExceeded
from cartesian_ghw.field import field_make
from cartesian_ghw.ghw import (
    dual_from_hierarchy,
    exact_hierarchy,
    ghw_exact_subspaces,
    ghw_exact_support,
    ghw_exact_support_witness,
    hierarchy,
    min_distance_bruteforce,
    support_hierarchy,
    verify_monotonicity,
    verify_wei_duality,
)
from cartesian_ghw.linalg import MatrixGF, row_basis, row_space_support

F2, F3 = field_make(2), field_make(3)
REP3 = MatrixGF(F2, np.array([[1, 1, 1]]))


def affine_code(q, m, d, hom=True):
    return build_code(preset("affine", field_make(q), m), d, hom)


def test_repetition_code():
    assert ghw_exact_subspaces(REP3, 1)[0] == 3
    assert ghw_exact_support(REP3, 1) == 3
    assert verify_wei_duality(REP3)


def test_hierarchy_f2():
    C = affine_code(2, 3, 1)
    assert ghw_exact_support(C, 2) == 6
    for method in ("exact-subspace", "exact-support", "duality", "footprint", "formula"):
        assert hierarchy(C, method).values == (4, 6, 7)
    assert hierarchy(affine_code(2, 2, 1)).values == (2, 3)
    assert len(hierarchy(affine_code(3, 3, 2)).records) == 3


def test_top_weight_is_support_size():
    C = affine_code(3, 3, 2, hom=False)
    assert ghw_exact_support(C, C.k) == len(row_space_support(C.generator))


def test_monotonicity_examples():
    assert verify_monotonicity((4, 6, 7), 8)
    assert not verify_monotonicity((3, 3), 4)
    assert not verify_monotonicity((0, 2), 4)


def test_duality_examples():
    assert verify_wei_duality(MatrixGF(F2, np.eye(2, dtype=int)))
    assert verify_wei_duality(affine_code(2, 3, 1))
    assert dual_from_hierarchy(3, (2, 3)) == (3,)


def test_witness_support_matches_value():
    C = affine_code(3, 3, 1, hom=False)
    for r in range(1, C.k + 1):
        v, w = ghw_exact_subspaces(C, r)
        assert v == w.support_size
        assert w.coefficients.rows == r
        assert row_space_support(MatrixGF(F3, w.coefficients.data) @ C.generator) == set(w.support)
        v2, supp = ghw_exact_support_witness(C, r)
        assert v2 == v == len(supp)


def test_parallel_search_is_deterministic():
    C = affine_code(3, 3, 1, hom=False)
    for r in (1, 2, 3):
        a = ghw_exact_subspaces(C, r, jobs=1)
        b = ghw_exact_subspaces(C, r, jobs=2)
        assert a[0] == b[0]
        assert a[1].coefficients.tolist() == b[1].coefficients.tolist()


def test_budgets():
    C = affine_code(3, 4, 2)
    with pytest.raises(CapExceeded):
        ghw_exact_subspaces(C, 3, cap=10)
    with pytest.raises(BudgetExceeded):
        support_hierarchy(C, budget=5)
    with pytest.raises(BadArgs):
        ghw_exact_subspaces(C, 0)


def test_bruteforce_min_distance():
    assert min_distance_bruteforce(affine_code(3, 2, 1, hom=False)) == 6


@st.composite
def codes(draw):
    q = draw(st.sampled_from([2, 3]))
    n = draw(st.integers(2, 10))
    k = draw(st.integers(1, min(5, n)))
    seed = draw(st.integers(0, 2**32 - 1))
    G = row_basis(MatrixGF(field_make(q), np.random.default_rng(seed).integers(0, q, size=(k, n))))
    return G


@settings(max_examples=80, deadline=None)
@given(codes())
def test_three_oracles_agree(G):
    if G.rows == 0:
        return
    sub = exact_hierarchy(G, "exact-subspace")
    assert sub == support_hierarchy(G)
    assert sub == exact_hierarchy(G, "duality")
    assert verify_monotonicity(sub, G.cols)
    assert sub[0] == min_distance_bruteforce(G)
