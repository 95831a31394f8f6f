import numpy as np
import pytest

from cartesian_ghw.cartesian import build_code, preset
from cartesian_ghw.field import field_make
from cartesian_ghw.ghw import support_hierarchy
from cartesian_ghw.projective import (
    affine_order,
    build_affine_punctured,
    build_projective_code,
    puncture_degenerate,
    representatives,
    tensor_pattern,
    verify_tensor_relation,
)


def test_representatives():
    P = representatives(2, 2)
    assert len(P) == 7
    assert {tuple(v) for v in P.representatives.tolist()} == {
        v for v in np.ndindex(2, 2, 2) if any(v)
    }
    assert representatives(3, 1).representatives.tolist() == [[0, 1], [1, 0], [1, 1], [1, 2]]
    assert len(representatives(3, 2)) == 13


def test_projective_codes():
    C = build_projective_code(2, 2, 2)
    assert C.generator.shape == (3, 7)
    assert int(np.count_nonzero(C.generator.data[0])) == 2
    assert build_projective_code(2, 2, 1).k == 3
    C = build_projective_code(3, 1, 2)
    assert C.generator.tolist() == [[0, 0, 1, 2]]
    assert C.monomials[0].name(0) == "x0x1"


def test_affine_order():
    assert affine_order(2, 2).tolist() == representatives(2, 2).representatives.tolist()
    pts = affine_order(3, 1)
    assert pts.shape == (8, 2)
    assert pts[:4].tolist() == representatives(3, 1).representatives.tolist()
    for q, m in ((3, 2), (4, 1), (5, 1)):
        pts = affine_order(q, m)
        assert len(pts) + 1 == q ** (m + 1)
        assert len({tuple(v) for v in pts.tolist()}) == len(pts)


def test_tensor_pattern():
    F = field_make(3)
    assert tensor_pattern(F, 1).tolist() == [1, F.xi]


@pytest.mark.parametrize("q,m,d", [(2, 2, 1), (2, 3, 2), (3, 1, 1), (3, 2, 2), (4, 1, 2), (5, 2, 1)])
def test_tensor_relation(q, m, d):
    assert verify_tensor_relation(q, m, d)


def test_scaling_small():
    for d in (1, 2):
        P = build_projective_code(3, 1, d)
        A = build_affine_punctured(3, 2, d)
        assert support_hierarchy(A) == tuple(2 * v for v in support_hierarchy(P))


def test_puncture():
    C = build_projective_code(2, 2, 2)
    assert puncture_degenerate(C).n == 4
    C = build_projective_code(3, 2, 1)
    assert puncture_degenerate(C).n == C.n
    A = build_code(preset("affine", field_make(3), 2), 1, True)
    Ap = puncture_degenerate(A)
    assert Ap.n == 8 and [0, 0] not in Ap.points.tolist()
    assert support_hierarchy(Ap) == support_hierarchy(A)
