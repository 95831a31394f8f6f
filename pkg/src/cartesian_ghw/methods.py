"""One entry point for d_r of an evaluation code by any method.

Besides the value, each method reports whether the value is the exact GHW
for the given code or only a lower bound.  The footprint bound is exact for
C_<=d over any Cartesian set and for C_d when every factor contains 0; the
closed formulas are exact under the same hypotheses plus the size
condition.  Elsewhere both are lower bounds.
"""

from __future__ import annotations

import time

from .cartesian import EvaluationCode
from .errors import BadArgs, BadRange
from .footprint import DEFAULT_SEARCH_BUDGET, footprint_bound
from .formulas import (
    ghw_formula_affine_punctured,
    ghw_formula_Cd,
    ghw_formula_Cleqd,
    ghw_formula_projective,
)
from .ghw import (
    DEFAULT_SUPPORT_BUDGET,
    GHWRecord,
    generator_of,
    ghw_exact_subspaces,
    ghw_exact_support_witness,
)
from .linalg import DEFAULT_SUBSPACE_CAP


def footprint_sizes(C: EvaluationCode) -> tuple[int, ...]:
    """Box sizes for the footprint bound of C.

    Homogeneous codes on F_q^m minus the origin have the same supports as on
    the full grid, which has sizes (q, ..., q).
    """
    if C.family == "cartesian" and C.cartesian is not None:
        return C.cartesian.sizes
    if C.family == "affine_punctured" and C.homogeneous:
        return (C.spec.q,) * C.m
    raise BadArgs(f"the footprint bound is not available for {C.family} codes")


def footprint_is_exact(C: EvaluationCode) -> bool:
    if C.family == "affine_punctured":
        return True
    if C.cartesian is None:
        return False
    return (not C.homogeneous) or all(C.cartesian.has_zero)


def formula_value(C: EvaluationCode, r: int) -> tuple[int, bool]:
    """(closed-form value, whether it is the exact d_r)."""
    q, d = C.spec.q, C.degree
    if C.family == "projective":
        return ghw_formula_projective(q, C.m - 1, d, r), True
    if C.family == "affine_punctured":
        if not C.homogeneous:
            raise BadRange("no closed formula for non-homogeneous punctured codes")
        return ghw_formula_affine_punctured(q, C.m, d, r), True
    if C.family == "cartesian" and C.cartesian is not None:
        sizes = C.cartesian.sizes
        if C.homogeneous:
            return ghw_formula_Cd(sizes, d, r), all(C.cartesian.has_zero)
        return ghw_formula_Cleqd(sizes, d, r), True
    raise BadRange(f"no closed formula for {C.family} codes")


def ghw_value(
    C: EvaluationCode,
    r: int,
    method: str,
    *,
    cap: int = DEFAULT_SUBSPACE_CAP,
    budget: int = DEFAULT_SUPPORT_BUDGET,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
    jobs: int = 1,
    timing: bool = False,
) -> GHWRecord:
    t0 = time.perf_counter()
    offset = C.var_offset if isinstance(C, EvaluationCode) else 1
    if method == "exact-subspace":
        value, wit = ghw_exact_subspaces(C, r, cap, jobs)
        witness, exact = wit.coefficients.tolist(), True
    elif method == "exact-support":
        value, support = ghw_exact_support_witness(C, r, budget)
        witness, exact = sorted(support), True
    elif method == "duality":
        from .ghw import exact_hierarchy

        G = generator_of(C)
        if not 1 <= r <= G.rows:
            raise BadArgs(f"r = {r} outside 1..{G.rows}")
        value, witness, exact = exact_hierarchy(G, "duality", budget=budget)[r - 1], None, True
    elif method == "footprint":
        if not isinstance(C, EvaluationCode):
            raise BadArgs("the footprint bound needs an evaluation code")
        k = generator_of(C).rows
        if not 1 <= r <= k:
            raise BadArgs(f"r = {r} outside 1..{k}")
        res = footprint_bound(footprint_sizes(C), C.degree, r, C.homogeneous, search_budget)
        value, exact = res.value, footprint_is_exact(C)
        witness = [a.name(offset) for a in res.witness]
    elif method == "formula":
        if not isinstance(C, EvaluationCode):
            raise BadArgs("closed formulas need an evaluation code")
        value, exact = formula_value(C, r)
        witness = None
    else:
        raise BadArgs(f"unknown method {method!r}")
    ms = (time.perf_counter() - t0) * 1000 if timing else None
    return GHWRecord(r, int(value), method, witness, exact, ms)
