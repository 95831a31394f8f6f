"""Seeded verification suites shared by the ``verify`` command and the test suite.

Each suite returns a SuiteResult counting passing instances and keeping a
short description of every failing one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, prod
from typing import Callable, Iterable

import numpy as np

from .cartesian import CartesianSet, build_code, preset
from .combinatorics import SquareFreeExponent, enumerate_Sd, enumerate_Sleqd, gaussian_binomial
from .errors import ConditionFails
from .field import field_make
from .footprint import footprint_bound, shadow_size_enum, shadow_size_ie, vanishing_count
from .formulas import (
    condition_holds,
    ghw_formula_Cd,
    ghw_formula_Cleqd,
    ghw_formula_projective,
    projective_lengths,
)
from .ghw import (
    ghw_exact_subspaces,
    min_distance_bruteforce,
    support_hierarchy,
    verify_monotonicity,
    verify_wei_duality,
)
from .linalg import MatrixGF, rank, row_basis
from .projective import (
    build_affine_punctured,
    build_projective_code,
    puncture_degenerate,
    verify_tensor_relation,
)

GRID_CAP = 10**7


@dataclass
class SuiteResult:
    name: str
    total: int = 0
    passed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def check(self, condition: bool, description: str) -> None:
        self.total += 1
        if condition:
            self.passed += 1
        else:
            self.failures.append(description)

    @property
    def detail(self) -> str:
        text = f"{self.passed}/{self.total} passed"
        if self.failures:
            text += "; first failures: " + " | ".join(self.failures[:5])
        return text


def _rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def _random_cartesian(rng, q: int, m: int, with_zero: bool) -> CartesianSet:
    F = field_make(q)
    factors = []
    for _ in range(m):
        size = int(rng.integers(2, q + 1))
        if with_zero:
            rest = rng.permutation(np.arange(1, q))[: size - 1]
            factor = (0,) + tuple(int(a) for a in rest)
        else:
            factor = tuple(int(a) for a in rng.permutation(q)[:size])
        factors.append(factor)
    return CartesianSet(F, tuple(factors))


def _random_monomials(rng, m: int, count: int) -> list[SquareFreeExponent]:
    pool = [SquareFreeExponent.from_support(m, s) for d in range(m + 1) for s in itertools.combinations(range(m), d)]
    idx = rng.choice(len(pool), size=min(count, len(pool)), replace=False)
    return [pool[int(i)] for i in sorted(idx)]


# -- grids -------------------------------------------------------------------


def sharpness_grid(qs: Iterable[int] = (2, 3, 4, 5), ms: Iterable[int] = (2, 3, 4), cap: int = GRID_CAP) -> SuiteResult:
    """C_d over F_q^m: exact subspace GHW = footprint bound = closed formula."""
    res = SuiteResult("sharpness")
    for q in qs:
        F = field_make(q)
        for m in ms:
            X = preset("affine", F, m)
            for d in range(1, m + 1):
                C = build_code(X, d, True)
                for r in range(1, m + 2 - d):
                    if gaussian_binomial(C.k, r, q) > cap:
                        continue
                    exact = ghw_exact_subspaces(C, r, cap)[0]
                    fb = footprint_bound(X.sizes, d, r, True).value
                    formula = ghw_formula_Cd(X.sizes, d, r)
                    res.check(exact == fb == formula, f"q={q} m={m} d={d} r={r}: exact={exact} fp={fb} formula={formula}")
    return res


def leq_grid(qs: Iterable[int] = (2, 3, 4, 5), ms: Iterable[int] = (2, 3, 4), cap: int = GRID_CAP) -> SuiteResult:
    """C_<=d over F_q^m and (F_q^*)^m: exact = footprint for every r within the cap,
    and both equal the formula where the condition holds and r <= m + 1 - d."""
    res = SuiteResult("leq-sharpness")
    for q in qs:
        F = field_make(q)
        for m in ms:
            families = [("affine", preset("affine", F, m))]
            if q >= 3:
                families.append(("torus", preset("torus", F, m)))
            for name, X in families:
                for d in range(1, m + 1):
                    C = build_code(X, d, False)
                    for r in range(1, C.k + 1):
                        if gaussian_binomial(C.k, r, q) > cap:
                            continue
                        exact = ghw_exact_subspaces(C, r, cap)[0]
                        fb = footprint_bound(X.sizes, d, r, False).value
                        ok = exact == fb
                        formula = None
                        if r <= m + 1 - d and condition_holds(X.sizes, d, r):
                            formula = ghw_formula_Cleqd(X.sizes, d, r)
                            ok = ok and formula == exact
                        res.check(ok, f"{name} q={q} m={m} d={d} r={r}: exact={exact} fp={fb} formula={formula}")
    return res


def mixed_sizes(cap: int = GRID_CAP) -> SuiteResult:
    """{0,1} x {0,1,2} x {0,1,2,3} in F_5, d = 1, 2, 3, both families."""
    res = SuiteResult("mixed-sizes")
    F = field_make(5)
    X = CartesianSet(F, ((0, 1), (0, 1, 2), (0, 1, 2, 3)))
    for hom in (True, False):
        for d in (1, 2, 3):
            C = build_code(X, d, hom)
            values = support_hierarchy(C)
            res.check(verify_monotonicity(values, C.n), f"hom={hom} d={d}: {values} not monotone")
            for r, v in enumerate(values, 1):
                if gaussian_binomial(C.k, r, 5) <= cap:
                    sub = ghw_exact_subspaces(C, r, cap)[0]
                    res.check(sub == v, f"hom={hom} d={d} r={r}: subspace {sub} vs support {v}")
                fb = footprint_bound(X.sizes, d, r, hom).value
                res.check(fb == v, f"hom={hom} d={d} r={r}: footprint {fb} vs exact {v}")
                if r <= 3 + 1 - d and condition_holds(X.sizes, d, r):
                    f = (ghw_formula_Cd if hom else ghw_formula_Cleqd)(X.sizes, d, r)
                    res.check(f == v, f"hom={hom} d={d} r={r}: formula {f} vs exact {v}")
            if hom and d == 1:
                res.check(values[0] == 12, f"d_1(C_1) = {values[0]}, expected 12")
            if hom and d == 2:
                res.check(values[0] == 8, f"d_1(C_2) = {values[0]}, expected 8")
    return res


def projective_suite(qs: Iterable[int] = (2, 3), ms: Iterable[int] = (1, 2, 3), cap: int = GRID_CAP) -> SuiteResult:
    """Tensor identity, affine/projective GHW scaling, projective formula, degenerate length."""
    res = SuiteResult("projective")
    for q in qs:
        F = field_make(q)
        for m in ms:
            for d in range(1, m + 2):
                res.check(verify_tensor_relation(F, m, d), f"tensor q={q} m={m} d={d}")
                P = build_projective_code(F, m, d)
                A = build_affine_punctured(F, m + 1, d)
                hp = support_hierarchy(P)
                ha = support_hierarchy(A)
                for r in range(1, P.k + 1):
                    if gaussian_binomial(P.k, r, q) <= cap:
                        res.check(
                            ghw_exact_subspaces(P, r, cap)[0] == hp[r - 1]
                            and ghw_exact_subspaces(A, r, cap)[0] == ha[r - 1],
                            f"oracles q={q} m={m} d={d} r={r}",
                        )
                res.check(
                    ha == tuple((q - 1) * v for v in hp),
                    f"scaling q={q} m={m} d={d}: affine {ha} vs projective {hp}",
                )
                for r in range(1, m + 3 - d):
                    f = ghw_formula_projective(q, m, d, r)
                    res.check(f == hp[r - 1], f"formula q={q} m={m} d={d} r={r}: {f} vs {hp[r - 1]}")
                Pn = puncture_degenerate(P)
                res.check(Pn.n == projective_lengths(q, m, d)[1], f"length q={q} m={m} d={d}: {Pn.n}")
                res.check(support_hierarchy(Pn) == hp, f"puncturing changed the hierarchy q={q} m={m} d={d}")
    return res


def example_torus(extended: bool = True) -> SuiteResult:
    """(F_3^*)^5, d = 2, r = 3: footprint 14 with its witness; exact value 16."""
    from .ghw import ghw_exact_support

    res = SuiteResult("torus-example")
    F = field_make(3)
    X = preset("torus", F, 5)
    fb = footprint_bound(X.sizes, 2, 3, True)
    res.check(fb.value == 14, f"footprint {fb.value}")
    expected = tuple(SquareFreeExponent.from_support(5, s) for s in ((0, 1), (0, 2), (0, 3)))
    res.check(fb.witness == expected, f"witness {fb.witness_str()}")
    if extended:
        exact = ghw_exact_support(build_code(X, 2, True), 3)
        res.check(exact == 16, f"exact d_3 = {exact}")
    return res


# -- randomized property suites ------------------------------------------------


def shadow_agreement(trials: int = 200, seed: int = 0) -> SuiteResult:
    res = SuiteResult("shadow")
    rng = _rng(seed)
    for _ in range(trials):
        m = int(rng.integers(1, 9))
        sizes = tuple(int(n) for n in rng.integers(1, 5, size=m))
        N = _random_monomials(rng, m, int(rng.integers(1, 7)))
        a, b = shadow_size_enum(sizes, N), shadow_size_ie(sizes, N)
        res.check(a == b, f"sizes={sizes} N={[x.name() for x in N]}: enum {a} vs ie {b}")
    return res


def bijection(trials: int = 200, seed: int = 0) -> SuiteResult:
    """|V_X(M)| = prod n_i - |shadow(M)| when every factor contains 0."""
    res = SuiteResult("bijection")
    rng = _rng(seed)
    for _ in range(trials):
        q = int(rng.choice([2, 3, 4, 5]))
        m = int(rng.integers(1, 6))
        X = _random_cartesian(rng, q, m, with_zero=True)
        M = _random_monomials(rng, m, int(rng.integers(1, 6)))
        lhs = vanishing_count(X, M)
        rhs = prod(X.sizes) - shadow_size_ie(X.sizes, M)
        res.check(lhs == rhs, f"X={X.factors} M={[x.name() for x in M]}: {lhs} vs {rhs}")
    return res


def random_code(rng, q: int, n: int, k: int) -> MatrixGF:
    F = field_make(q)
    G = MatrixGF(F, rng.integers(0, q, size=(k, n)))
    return row_basis(G)


def duality(trials: int = 200, seed: int = 0) -> SuiteResult:
    """Wei's duality on random codes with n <= 14, k <= 7, q in {2, 3}."""
    res = SuiteResult("duality")
    rng = _rng(seed)
    for _ in range(trials):
        q = int(rng.choice([2, 3]))
        n = int(rng.integers(2, 15))
        k = int(rng.integers(1, min(7, n) + 1))
        G = random_code(rng, q, n, k)
        if G.rows == 0:
            res.check(True, "")
            continue
        res.check(verify_wei_duality(G), f"q={q} G={G.tolist()}")
    return res


def monotonicity(trials: int = 200, seed: int = 0, cap: int = 2 * 10**4) -> SuiteResult:
    """Random codes: strictly increasing hierarchies, and the three exact oracles agree."""
    res = SuiteResult("monotonicity")
    rng = _rng(seed)
    for _ in range(trials):
        q = int(rng.choice([2, 3]))
        n = int(rng.integers(2, 17))
        k = int(rng.integers(1, min(8, n) + 1))
        G = random_code(rng, q, n, k)
        if G.rows == 0:
            res.check(True, "")
            continue
        values = support_hierarchy(G)
        ok = verify_monotonicity(values, n)
        for r in range(1, G.rows + 1):
            if gaussian_binomial(G.rows, r, q) <= cap:
                ok = ok and ghw_exact_subspaces(G, r, cap)[0] == values[r - 1]
        if q ** G.rows <= 10**5:
            ok = ok and min_distance_bruteforce(G) == values[0]
        res.check(ok, f"q={q} G={G.tolist()} hierarchy={values}")
    return res


def dimensions(qs: Iterable[int] = (2, 3, 4), max_m: int = 5) -> SuiteResult:
    """rank of the generator = C(m, d) and sum_{i<=d} C(m, i)."""
    res = SuiteResult("dimension")
    for q in qs:
        F = field_make(q)
        for m in range(1, max_m + 1):
            X = preset("affine", F, m)
            for d in range(0, m + 1):
                for hom in (True, False):
                    if hom and d == 0:
                        continue
                    C = build_code(X, d, hom)
                    want = comb(m, d) if hom else sum(comb(m, i) for i in range(d + 1))
                    got = rank(C.generator)
                    res.check(got == want, f"q={q} m={m} d={d} hom={hom}: rank {got} vs {want}")
    return res


def permutation(trials: int = 200, seed: int = 0) -> SuiteResult:
    """Permuting the factors leaves the weight hierarchy unchanged."""
    res = SuiteResult("permutation")
    rng = _rng(seed)
    for _ in range(trials):
        q = int(rng.choice([2, 3, 4, 5]))
        # three factors over F_4 or F_5 make the exact hierarchy search slow
        m = 2 if q >= 4 else int(rng.integers(2, 4))
        X = _random_cartesian(rng, q, m, with_zero=bool(rng.integers(0, 2)))
        hom = bool(rng.integers(0, 2))
        d = int(rng.integers(1, m + 1))
        perm = [int(i) for i in rng.permutation(m)]
        a = support_hierarchy(build_code(X, d, hom))
        b = support_hierarchy(build_code(X.permuted(perm), d, hom))
        res.check(a == b, f"X={X.factors} perm={perm} d={d} hom={hom}: {a} vs {b}")
    return res


def tensor(qs: Iterable[int] = (2, 3), ms: Iterable[int] = (1, 2, 3)) -> SuiteResult:
    res = SuiteResult("tensor")
    for q in qs:
        for m in ms:
            for d in range(1, m + 2):
                res.check(verify_tensor_relation(q, m, d), f"q={q} m={m} d={d}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "sharpness": sharpness_grid,
    "leq": leq_grid,
    "mixed": mixed_sizes,
    "projective": projective_suite,
    "torus-example": example_torus,
    "shadow": shadow_agreement,
    "bijection": bijection,
    "duality": duality,
    "monotonicity": monotonicity,
    "dimension": dimensions,
    "permutation": permutation,
    "tensor": tensor,
}

RANDOMIZED = {"shadow", "bijection", "duality", "monotonicity", "permutation"}
GRIDDED = {"sharpness": ("qs", "ms"), "leq": ("qs", "ms"), "projective": ("qs", "ms"), "tensor": ("qs", "ms")}
