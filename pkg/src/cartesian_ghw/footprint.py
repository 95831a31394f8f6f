"""Shadows of square-free monomial sets and the footprint bound.

For a Cartesian set with sizes (n_1, ..., n_m) the footprint of the vanishing
ideal is the box B_X = {0..n_1-1} x ... x {0..n_m-1}.  The shadow of a set N
of square-free monomials is the part of the box divisible by some member of
N; a square-free monomial divides beta exactly when its support is inside
supp(beta).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, prod
from typing import Iterable, Sequence

import numpy as np

from .cartesian import CartesianSet, points
from .combinatorics import SquareFreeExponent, enumerate_Sd, enumerate_Sleqd, monomial_set_str
from .errors import BadRange, BudgetExceeded, SearchBudgetExceeded, TooManyMonomials

DEFAULT_BOX_BUDGET = 10**7
DEFAULT_SEARCH_BUDGET = 10**7
MAX_IE_TERMS = 30


@dataclass(frozen=True)
class ShadowReport:
    monomials: tuple[SquareFreeExponent, ...]
    shadow_size: int
    method: str
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class FootprintResult:
    r: int
    d: int
    homogeneous: bool
    value: int
    witness: tuple[SquareFreeExponent, ...]
    examined: int
    complete: bool = True

    def witness_str(self) -> str:
        return monomial_set_str(self.witness)


def _normalize(sizes: Sequence[int], N: Iterable) -> tuple[tuple[int, ...], list[SquareFreeExponent]]:
    sizes = tuple(int(n) for n in sizes)
    monos = [a if isinstance(a, SquareFreeExponent) else SquareFreeExponent(tuple(a)) for a in N]
    for a in monos:
        if a.m != len(sizes):
            raise BadRange(f"monomial {a.bits} has {a.m} variables, sizes have {len(sizes)}")
    if len(set(monos)) != len(monos):
        raise BadRange("monomials must be distinct")
    return sizes, monos


def shadow_size_enum(sizes: Sequence[int], N: Iterable, budget: int = DEFAULT_BOX_BUDGET) -> int:
    """|shadow(N)| by walking every beta in the box."""
    sizes, monos = _normalize(sizes, N)
    total = prod(sizes)
    if total > budget:
        raise BudgetExceeded(f"box of size {total} exceeds budget {budget}")
    # support bitmask of every box element, built by broadcasting
    mask = np.zeros((), dtype=np.int64)
    for i, n in enumerate(sizes):
        mask = np.add.outer(mask, (np.arange(n) > 0).astype(np.int64) << i)
    mask = mask.ravel()
    covered = np.zeros(mask.shape, dtype=bool)
    for a in monos:
        am = a.mask
        covered |= (mask & am) == am
    return int(covered.sum())


def shadow_size_ie(sizes: Sequence[int], N: Iterable) -> int:
    """|shadow(N)| by inclusion-exclusion over subsets of N."""
    sizes, monos = _normalize(sizes, N)
    if len(monos) > MAX_IE_TERMS:
        raise TooManyMonomials(f"{len(monos)} monomials exceed {MAX_IE_TERMS}")
    masks = [a.mask for a in monos]
    total = 0
    for size in range(1, len(masks) + 1):
        sign = 1 if size % 2 else -1
        for subset in itertools.combinations(masks, size):
            union = 0
            for am in subset:
                union |= am
            total += sign * prod((n - 1) if union >> i & 1 else n for i, n in enumerate(sizes))
    return total


def shadow_report(sizes: Sequence[int], N: Iterable, budget: int = DEFAULT_BOX_BUDGET) -> ShadowReport:
    """Shadow size by inclusion-exclusion, cross-checked by enumeration when the box is small."""
    sizes, monos = _normalize(sizes, N)
    value = shadow_size_ie(sizes, monos)
    method = "inclusion-exclusion"
    if prod(sizes) <= budget:
        if shadow_size_enum(sizes, monos, budget) != value:
            raise AssertionError("shadow methods disagree")
        method = "enumeration"
    return ShadowReport(tuple(monos), value, method, sizes)


def monomial_pool(m: int, d: int, homogeneous: bool) -> list[SquareFreeExponent]:
    return enumerate_Sd(m, d) if homogeneous else enumerate_Sleqd(m, d)


def _support_weights(sizes: Sequence[int]) -> np.ndarray:
    """weight[T] = number of box elements whose support is exactly T."""
    w = np.ones(1, dtype=np.int64)
    for n in sizes:
        w = np.concatenate([w, w * (n - 1)])
    return w


def footprint_bound(
    sizes: Sequence[int],
    d: int,
    r: int,
    homogeneous: bool = True,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> FootprintResult:
    """Minimum shadow size over r-subsets of S_d (or S_<=d) monomials.

    Subsets are explored in lexicographic order of their ranks in the
    descending-deglex pool, so the first minimizer found is the reported
    witness.  A partial subset is dropped as soon as its shadow reaches the
    best value so far, since adding monomials never shrinks a shadow.
    Shadows are aggregated over support patterns: the box elements with
    support exactly T number prod_{i in T} (n_i - 1).
    """
    sizes = tuple(int(n) for n in sizes)
    m = len(sizes)
    if homogeneous and not 1 <= d <= m:
        raise BadRange(f"d = {d} outside 1..{m}")
    if not homogeneous and not 0 <= d <= m:
        raise BadRange(f"d = {d} outside 0..{m}")
    pool = monomial_pool(m, d, homogeneous)
    if not 1 <= r <= len(pool):
        raise BadRange(f"r = {r} outside 1..{len(pool)}")

    weights = _support_weights(sizes)
    T = np.arange(1 << m, dtype=np.int64)
    upsets = np.stack([(T & a.mask) == a.mask for a in pool])

    best = [None, None]  # value, chosen indices
    examined = 0
    P = len(pool)

    def search(start: int, depth: int, covered: np.ndarray, chosen: list[int]):
        nonlocal examined
        for i in range(start, P - (r - depth) + 1):
            examined += 1
            if examined > budget:
                raise _OutOfBudget
            cov = covered | upsets[i]
            value = int(weights[cov].sum())
            if best[0] is not None and value >= best[0]:
                continue
            chosen.append(i)
            if depth + 1 == r:
                best[0], best[1] = value, list(chosen)
            else:
                search(i + 1, depth + 1, cov, chosen)
            chosen.pop()

    complete = True
    try:
        search(0, 0, np.zeros(1 << m, dtype=bool), [])
    except _OutOfBudget:
        complete = False
    witness = tuple(pool[i] for i in best[1]) if best[1] is not None else ()
    result = FootprintResult(r, d, homogeneous, best[0], witness, examined, complete)
    if not complete:
        raise SearchBudgetExceeded(
            f"footprint search stopped after {budget} candidates (C({P},{r}) = {comb(P, r)})", result
        )
    return result


class _OutOfBudget(Exception):
    pass


def vanishing_count(X: CartesianSet | np.ndarray, M: Iterable) -> int:
    """Number of points where every monomial of M evaluates to zero.

    A product of field elements is zero iff one factor is, so x^alpha
    vanishes at P exactly when P_i = 0 for some i in supp(alpha).
    """
    pts = points(X) if isinstance(X, CartesianSet) else np.asarray(X, dtype=np.int64)
    monos = [a if isinstance(a, SquareFreeExponent) else SquareFreeExponent(tuple(a)) for a in M]
    zero = pts == 0
    vanish = np.ones(pts.shape[0], dtype=bool)
    for a in monos:
        idx = sorted(a.support)
        vanish &= zero[:, idx].any(axis=1) if idx else np.zeros(pts.shape[0], dtype=bool)
    return int(vanish.sum())
