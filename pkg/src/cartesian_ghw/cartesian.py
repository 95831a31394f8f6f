"""Cartesian evaluation sets and the square-free evaluation codes over them."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .combinatorics import SquareFreeExponent, enumerate_Sd, enumerate_Sleqd
from .errors import BadDegree, BadPreset, RankDeficient
from .field import FieldSpec
from .linalg import MatrixGF, nullspace_basis, rank


@dataclass(frozen=True)
class CartesianSet:
    """X = A_1 x ... x A_m with each A_i an ordered subset of F_q."""

    spec: FieldSpec
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        factors = tuple(tuple(int(a) for a in f) for f in self.factors)
        if not factors:
            raise ValueError("a Cartesian set needs at least one factor")
        for f in factors:
            if not f:
                raise ValueError("empty factor")
            if len(set(f)) != len(f):
                raise ValueError(f"duplicate elements in factor {f}")
            for a in f:
                self.spec.check(a)
        object.__setattr__(self, "factors", factors)

    @property
    def m(self) -> int:
        return len(self.factors)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(f) for f in self.factors)

    @property
    def has_zero(self) -> tuple[bool, ...]:
        return tuple(0 in f for f in self.factors)

    @property
    def size(self) -> int:
        return int(np.prod(self.sizes))

    def permuted(self, perm: Sequence[int]) -> CartesianSet:
        """The set with factor i moved from position perm[i]."""
        return CartesianSet(self.spec, tuple(self.factors[j] for j in perm))


def parse_factors(spec: FieldSpec, text: str) -> CartesianSet:
    """Parse ``"0,1;0,1,2"`` into a CartesianSet."""
    try:
        factors = [tuple(int(tok) for tok in part.split(",") if tok.strip()) for part in text.split(";")]
    except ValueError as exc:
        raise ValueError(f"bad factor specification {text!r}") from exc
    return CartesianSet(spec, tuple(factors))


def points(X: CartesianSet) -> np.ndarray:
    """All points of X as an (n, m) array, last factor index varying fastest."""
    return np.array(list(itertools.product(*X.factors)), dtype=np.int64).reshape(X.size, X.m)


@dataclass(frozen=True, eq=False)
class EvaluationCode:
    """Evaluations of a list of square-free monomials at an ordered point list."""

    generator: MatrixGF
    monomials: tuple[SquareFreeExponent, ...]
    points: np.ndarray = field(repr=False)
    homogeneous: bool
    degree: int
    family: str = "cartesian"
    cartesian: CartesianSet | None = None
    var_offset: int = 1

    @property
    def spec(self) -> FieldSpec:
        return self.generator.spec

    @property
    def n(self) -> int:
        return self.generator.cols

    @property
    def k(self) -> int:
        return self.generator.rows

    @property
    def m(self) -> int:
        return self.points.shape[1]


def evaluate_monomial(spec: FieldSpec, pts: np.ndarray, mono: SquareFreeExponent) -> np.ndarray:
    vals = np.ones(pts.shape[0], dtype=np.int64)
    for i in sorted(mono.support):
        vals = spec.mul_arr(vals, pts[:, i])
    return vals


def evaluation_code(
    spec: FieldSpec,
    pts: np.ndarray,
    d: int,
    homogeneous: bool = True,
    *,
    family: str = "points",
    cartesian: CartesianSet | None = None,
    var_offset: int = 1,
    check_rank: bool = True,
) -> EvaluationCode:
    """Code spanned by ev(x^alpha) for alpha in S_d (or S_<=d) at the given points."""
    pts = np.asarray(pts, dtype=np.int64)
    m = pts.shape[1]
    if homogeneous and not 1 <= d <= m:
        raise BadDegree(f"homogeneous degree {d} outside 1..{m}")
    if not homogeneous and not 0 <= d <= m:
        raise BadDegree(f"degree {d} outside 0..{m}")
    monos = tuple(enumerate_Sd(m, d) if homogeneous else enumerate_Sleqd(m, d))
    gen = np.stack([evaluate_monomial(spec, pts, a) for a in monos])
    G = MatrixGF(spec, gen)
    if check_rank and rank(G) != len(monos):
        raise RankDeficient(f"generator of rank {rank(G)} for {len(monos)} monomials")
    return EvaluationCode(G, monos, pts, homogeneous, d, family, cartesian, var_offset)


def build_code(X: CartesianSet, d: int, homogeneous: bool = True) -> EvaluationCode:
    """C_d (homogeneous) or C_<=d over the Cartesian set X.

    Full rank is asserted whenever every factor has at least two elements;
    factors of size one make some monomials coincide as functions, so the
    check is skipped there.
    """
    check = min(X.sizes) >= 2
    return evaluation_code(
        X.spec, points(X), d, homogeneous, family="cartesian", cartesian=X, check_rank=check
    )


PRESETS = ("affine", "affine_punctured", "torus", "custom")


def preset(kind: str, spec: FieldSpec, m: int, custom_factors: str | Sequence[Sequence[int]] | None = None):
    """Standard evaluation sets.

    ``affine`` and ``torus`` return CartesianSets with factor order
    0, 1, xi, xi**2, ... (zero omitted for the torus); ``affine_punctured``
    returns the affine point array with the origin removed; ``custom`` parses
    ``custom_factors``.
    """
    kind = kind.replace("-", "_")
    if kind not in PRESETS:
        raise BadPreset(f"unknown preset {kind!r}")
    if kind == "custom":
        if custom_factors is None:
            raise BadPreset("custom preset needs factors")
        if isinstance(custom_factors, str):
            return parse_factors(spec, custom_factors)
        return CartesianSet(spec, tuple(tuple(f) for f in custom_factors))
    if m < 1:
        raise BadPreset("m must be positive")
    units = tuple(spec.nonzero_by_powers())
    if kind == "torus":
        return CartesianSet(spec, (units,) * m)
    X = CartesianSet(spec, ((0,) + units,) * m)
    if kind == "affine":
        return X
    pts = points(X)
    return pts[np.any(pts != 0, axis=1)]


def dual_code(C: EvaluationCode | MatrixGF) -> MatrixGF:
    """Generator matrix of the dual code."""
    G = C.generator if isinstance(C, EvaluationCode) else C
    return nullspace_basis(G)
