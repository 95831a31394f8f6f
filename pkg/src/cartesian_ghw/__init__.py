"""Generalized Hamming weights of square-free evaluation codes on Cartesian sets.

The package builds the codes spanned by square-free monomials evaluated on
a product set A_1 x ... x A_m over a finite field (and on projective space),
and computes their weight hierarchies three ways: exact search, the
footprint bound and closed formulas.
"""

from .cartesian import CartesianSet, EvaluationCode, build_code, parse_factors, preset
from .combinatorics import SquareFreeExponent, enumerate_Sd, enumerate_Sleqd, gaussian_binomial
from .errors import (
    BudgetError,
    BudgetExceeded,
    CapExceeded,
    CodeError,
    ConditionFails,
    SearchBudgetExceeded,
)
from .field import FieldElement, FieldSpec, field_make
from .footprint import footprint_bound, shadow_size_enum, shadow_size_ie
from .formulas import (
    condition_holds,
    ghw_formula_affine_punctured,
    ghw_formula_Cd,
    ghw_formula_Cleqd,
    ghw_formula_projective,
)
from .ghw import ghw_exact_subspaces, ghw_exact_support, hierarchy, support_hierarchy
from .linalg import MatrixGF, rank, rref
from .methods import ghw_value
from .projective import build_affine_punctured, build_projective_code

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
