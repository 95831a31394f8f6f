"""Square-free evaluation codes on projective space and their affine cone."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .cartesian import EvaluationCode, evaluation_code
from .errors import BadDegree
from .field import FieldSpec, field_make
from .linalg import MatrixGF, rank


@dataclass(frozen=True)
class ProjectiveFrame:
    """One representative per point of P^m(F_q), first nonzero coordinate 1."""

    spec: FieldSpec
    m: int
    representatives: np.ndarray = field(repr=False)

    @property
    def xi(self) -> int:
        return self.spec.xi

    def __len__(self) -> int:
        return self.representatives.shape[0]


def representatives(q: int | FieldSpec, m: int) -> ProjectiveFrame:
    """Normalized representatives in lexicographic order of their encodings."""
    spec = q if isinstance(q, FieldSpec) else field_make(q)
    if m < 0:
        raise ValueError("m must be non-negative")
    reps = []
    for lead in range(m + 1):
        for tail in itertools.product(range(spec.q), repeat=m - lead):
            reps.append((0,) * lead + (1,) + tail)
    reps.sort()
    return ProjectiveFrame(spec, m, np.array(reps, dtype=np.int64).reshape(len(reps), m + 1))


def build_projective_code(q: int | FieldSpec, m: int, d: int) -> EvaluationCode:
    """Evaluations of the degree-d square-free monomials in x_0..x_m on the frame."""
    frame = representatives(q, m)
    if not 1 <= d <= m + 1:
        raise BadDegree(f"degree {d} outside 1..{m + 1}")
    return evaluation_code(
        frame.spec, frame.representatives, d, True, family="projective", var_offset=0
    )


def affine_order(q: int | FieldSpec, m: int) -> np.ndarray:
    """F_q^{m+1} minus the origin as the blocks P, xi P, ..., xi^{q-2} P."""
    frame = representatives(q, m)
    spec = frame.spec
    blocks = [spec.mul_arr(frame.representatives, s) for s in spec.nonzero_by_powers()]
    return np.concatenate(blocks, axis=0)


def build_affine_punctured(q: int | FieldSpec, m: int, d: int, ordered_by_frame: bool = True) -> EvaluationCode:
    """C_d on F_q^m minus the origin.

    With ``ordered_by_frame`` the points follow the block order of
    ``affine_order(q, m - 1)``; otherwise the grid order of the affine preset.
    """
    from .cartesian import preset

    spec = q if isinstance(q, FieldSpec) else field_make(q)
    pts = affine_order(spec, m - 1) if ordered_by_frame else preset("affine_punctured", spec, m)
    return evaluation_code(spec, pts, d, True, family="affine_punctured")


def tensor_pattern(spec: FieldSpec, d: int) -> np.ndarray:
    """(1, xi^d, xi^{2d}, ..., xi^{d(q-2)})."""
    return np.array([spec.pow(spec.xi, d * i) for i in range(spec.q - 1)], dtype=np.int64)


def verify_tensor_relation(q: int | FieldSpec, m: int, d: int) -> bool:
    """Check that each affine row is the Kronecker product of the pattern with the projective row."""
    spec = q if isinstance(q, FieldSpec) else field_make(q)
    proj = build_projective_code(spec, m, d)
    aff = build_affine_punctured(spec, m + 1, d)
    if aff.monomials != proj.monomials:
        return False
    pattern = tensor_pattern(spec, d)
    P = proj.generator.data
    expected = np.concatenate([spec.mul_arr(P, s) for s in pattern], axis=1)
    if not np.array_equal(expected, aff.generator.data):
        return False
    return rank(aff.generator) == rank(proj.generator)


def puncture_degenerate(C: EvaluationCode) -> EvaluationCode:
    """Drop the coordinates where every codeword vanishes."""
    keep = np.any(C.generator.data != 0, axis=0)
    return EvaluationCode(
        MatrixGF(C.spec, C.generator.data[:, keep]),
        C.monomials,
        C.points[keep],
        C.homogeneous,
        C.degree,
        C.family,
        C.cartesian,
        C.var_offset,
    )
