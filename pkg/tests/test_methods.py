import pytest

from cartesian_ghw.cartesian import build_code, evaluation_code, preset
from cartesian_ghw.errors import BadArgs, BadRange, ConditionFails
from cartesian_ghw.field import field_make
from cartesian_ghw.methods import footprint_is_exact, footprint_sizes, ghw_value
from cartesian_ghw.projective import build_affine_punctured, build_projective_code


def test_footprint_on_torus_is_a_lower_bound():
    X = preset("torus", field_make(3), 5)
    rec = ghw_value(build_code(X, 2, True), 3, "footprint")
    assert rec.value == 14 and not rec.exact
    assert rec.witness == ["x1x2", "x1x3", "x1x4"]


def test_footprint_exactness_flags():
    F = field_make(3)
    assert footprint_is_exact(build_code(preset("affine", F, 2), 1, True))
    assert footprint_is_exact(build_code(preset("torus", F, 2), 1, False))
    assert not footprint_is_exact(build_code(preset("torus", F, 2), 1, True))


def test_punctured_footprint_sizes():
    C = build_affine_punctured(3, 2, 1, ordered_by_frame=False)
    assert footprint_sizes(C) == (3, 3)
    for r in (1, 2):
        assert ghw_value(C, r, "footprint").value == ghw_value(C, r, "exact-support").value == ghw_value(C, r, "formula").value
    with pytest.raises(BadArgs):
        footprint_sizes(build_projective_code(2, 2, 1))


def test_formula_guards():
    F = field_make(5)
    X = preset("custom", F, 0, "0,1;0,1,2;0,1,2,3;0,1,2,3,4")
    with pytest.raises(BadRange):
        ghw_value(build_code(X, 3, True), 3, "formula")
    pts = preset("affine_punctured", F, 2)
    C = evaluation_code(F, pts, 1, False, family="affine_punctured")
    with pytest.raises(BadRange):
        ghw_value(C, 1, "formula")


def test_condition_failure_is_reported():
    X = preset("custom", field_make(53), 0, "0,1;0,1,2;0,1,2;" + ",".join(map(str, range(50))))
    C = build_code(X, 2, True)
    with pytest.raises(ConditionFails):
        ghw_value(C, 3, "formula")


def test_unknown_method():
    with pytest.raises(BadArgs):
        ghw_value(build_code(preset("affine", field_make(2), 2), 1), 1, "magic")
