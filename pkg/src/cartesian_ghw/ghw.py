"""Exact generalized Hamming weights.

Two independent exact searches are provided.

``ghw_exact_subspaces`` walks every r-dimensional subcode, represented by
the RREF coefficient matrix R of its basis with respect to the generator G.
The subcode vanishes at coordinate j iff R g_j = 0 for the column g_j, so
only the distinct columns of G (with multiplicities) matter and no codeword
is ever formed.

``ghw_exact_support`` works on the column matroid instead: the subcodes of
dimension >= r with support inside S correspond to column sets outside S of
rank <= k - r, so d_r = n - (largest column set of rank k - r).  Those
largest sets are flats spanned by columns, enumerated once each via their
greedy basis.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .cartesian import EvaluationCode, dual_code
from .combinatorics import gaussian_binomial
from .errors import BadArgs, BudgetExceeded, CapExceeded
from .field import FieldSpec, field_make
from .linalg import (
    DEFAULT_SUBSPACE_CAP,
    MatrixGF,
    free_positions,
    matmul,
    pattern_row_block,
    pivot_patterns,
    rank,
    row_basis,
    row_space_support,
)

DEFAULT_SUPPORT_BUDGET = 10**7
METHODS = ("exact-subspace", "exact-support", "footprint", "formula", "duality")

_ROW_TABLE_LIMIT = 1 << 24
_CHUNK = 1 << 14


@dataclass(frozen=True)
class SubcodeWitness:
    coefficients: MatrixGF
    support: frozenset[int]

    @property
    def support_size(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class GHWRecord:
    r: int
    value: int
    method: str
    witness: object = None
    exact: bool = True
    millis: float | None = None


@dataclass
class WeightHierarchyReport:
    q: int
    n: int
    k: int
    records: list[GHWRecord]
    sizes: tuple[int, ...] | None = None
    d: int | None = None
    homogeneous: bool | None = None
    family: str | None = None

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(rec.value for rec in self.records)


def generator_of(C: EvaluationCode | MatrixGF) -> MatrixGF:
    """A full-rank generator matrix for C."""
    G = C.generator if isinstance(C, EvaluationCode) else C
    if rank(G) < G.rows:
        G = row_basis(G)
    return G


def _distinct_columns(G: MatrixGF) -> tuple[np.ndarray, np.ndarray]:
    uniq, counts = np.unique(G.data.T, axis=0, return_counts=True)
    return uniq.reshape(-1, G.rows), counts


# -- subspace search ---------------------------------------------------------


class _PatternSearch:
    """Best subcode (largest zero-column weight) for a sequence of pivot patterns."""

    def __init__(self, spec: FieldSpec, k: int, r: int, cols: np.ndarray, counts: np.ndarray):
        self.spec, self.k, self.r = spec, k, r
        self.cols = cols
        self.weights = counts.astype(np.float64)
        self.best = -1.0
        self.found: tuple[int, tuple[int, ...]] | None = None

    def _annihilated(self, rows: np.ndarray, cols: np.ndarray) -> np.ndarray:
        return matmul(self.spec, rows, cols.T) == 0

    def run(self, indexed_patterns: Sequence[tuple[int, tuple[int, ...]]]):
        for idx, pattern in indexed_patterns:
            self._pattern(idx, pattern)
        return self.best, self.found

    def _pattern(self, idx: int, pattern: tuple[int, ...]):
        spec, k, r = self.spec, self.k, self.r
        u = len(self.cols)
        sizes = [spec.q ** len(f) for f in free_positions(pattern, k)]
        tables: list[np.ndarray | None] = []
        for t in range(r):
            if sizes[t] * u <= _ROW_TABLE_LIMIT:
                tables.append(self._annihilated(pattern_row_block(spec, pattern, t, k), self.cols))
            elif t == r - 1:
                tables.append(None)
            else:
                raise CapExceeded(f"row {t} of pattern {pattern} has {sizes[t]} choices", sizes[t])

        def last_row(wvec: np.ndarray, active: np.ndarray, prefix: tuple[int, ...]):
            wa = wvec[active]
            table = tables[r - 1]
            for start in range(0, sizes[r - 1], _CHUNK if table is None else sizes[r - 1]):
                if table is None:
                    block = pattern_row_block(spec, pattern, r - 1, k, start, start + _CHUNK)
                    A = self._annihilated(block, self.cols[active])
                else:
                    A = table[:, active]
                zeros = A @ wa if A.size else np.zeros(A.shape[0])
                i = int(np.argmax(zeros))
                if zeros[i] > self.best:
                    self.best = float(zeros[i])
                    self.found = (idx, prefix + (start + i,))

        def descend(t: int, wvec: np.ndarray, prefix: tuple[int, ...]):
            if t == r - 1:
                last_row(wvec, np.nonzero(wvec)[0], prefix)
                return
            table = tables[t]
            for c in range(sizes[t]):
                nw = wvec * table[c]
                if nw.sum() <= self.best:
                    continue
                descend(t + 1, nw, prefix + (c,))

        descend(0, self.weights, ())


def _search_worker(args):
    q, k, r, cols, counts, chunk = args
    return _PatternSearch(field_make(q), k, r, cols, counts).run(chunk)


def _subspace_best(G: MatrixGF, r: int, jobs: int = 1):
    spec, k = G.spec, G.rows
    cols, counts = _distinct_columns(G)
    patterns = list(enumerate(pivot_patterns(k, r)))
    if jobs <= 1 or len(patterns) < 2:
        best, found = _PatternSearch(spec, k, r, cols, counts).run(patterns)
    else:
        chunks = [patterns[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(
                pool.map(_search_worker, [(spec.q, k, r, cols, counts, ch) for ch in chunks if ch])
            )
        # max zero weight; ties go to the earliest subspace in enumeration order
        best, found = max(
            (res for res in results if res[1] is not None),
            key=lambda res: (res[0], tuple(-x for x in (res[1][0],) + res[1][1])),
        )
    pattern = patterns[found[0]][1]
    R = np.stack([pattern_row_block(spec, pattern, t, k, c, c + 1)[0] for t, c in enumerate(found[1])])
    return int(round(best)), MatrixGF(spec, R)


def ghw_exact_subspaces(
    C: EvaluationCode | MatrixGF, r: int, cap: int = DEFAULT_SUBSPACE_CAP, jobs: int = 1
) -> tuple[int, SubcodeWitness]:
    """d_r by enumerating all r-dimensional subcodes.

    The witness is the first minimizing subcode in canonical enumeration
    order, whatever the number of workers.
    """
    G = generator_of(C)
    k = G.rows
    if not 1 <= r <= k:
        raise BadArgs(f"r = {r} outside 1..{k}")
    count = gaussian_binomial(k, r, G.spec.q)
    if count > cap:
        raise CapExceeded(f"{count} subspaces of dimension {r} exceed the cap {cap}", count)
    zeros, R = _subspace_best(G, r, jobs)
    support = frozenset(row_space_support(R @ G))
    if len(support) != G.cols - zeros:
        raise AssertionError("zero-column count disagrees with the witness support")
    return len(support), SubcodeWitness(R, support)


# -- support (column flat) search -----------------------------------------------


def _projective_columns(G: MatrixGF):
    """Nonzero columns normalized to leading 1, deduplicated, with counts."""
    spec = G.spec
    cols = G.data.T
    nonzero = np.any(cols != 0, axis=1)
    zero_count = int((~nonzero).sum())
    nz = cols[nonzero]
    if nz.shape[0] == 0:
        return np.zeros((0, G.rows), dtype=np.int64), np.zeros(0, dtype=np.int64), zero_count, nonzero, None
    lead = nz[np.arange(nz.shape[0]), np.argmax(nz != 0, axis=1)]
    normed = spec.mul_arr(nz, spec.inv_arr(lead)[:, None])
    uniq, inverse, counts = np.unique(normed, axis=0, return_inverse=True, return_counts=True)
    return uniq, counts, zero_count, nonzero, inverse.ravel()


def _flat_search(spec: FieldSpec, pts: np.ndarray, w: np.ndarray, target_rank: int, budget: int, all_ranks: bool):
    """Heaviest flat of each rank <= target_rank (first found on ties).

    Returns ({rank: weight}, {rank: closed mask}, nodes, complete).
    """
    u, k = pts.shape
    best: dict[int, int] = {}
    best_mask: dict[int, np.ndarray] = {}
    nodes = 0

    class _Stop(Exception):
        pass

    def record(rk: int, weight: int, closed: np.ndarray):
        if rk not in best or weight > best[rk]:
            best[rk] = weight
            best_mask[rk] = closed

    def visit(res: np.ndarray, closed: np.ndarray, last: int, rk: int, weight: int):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise _Stop
        if all_ranks or rk == target_rank:
            record(rk, weight, closed)
        if rk == target_rank:
            return
        for j in range(last + 1, u):
            if closed[j]:
                continue
            row = res[j]
            lead = int(np.argmax(row != 0))
            b = spec.mul_arr(row, spec.inv(int(row[lead])))
            new_res = spec.sub_arr(res, spec.mul_arr(res[:, lead : lead + 1], b[None, :]))
            new_closed = ~np.any(new_res != 0, axis=1)
            newly = new_closed & ~closed
            if int(np.argmax(newly)) != j:
                continue
            visit(new_res, new_closed, j, rk + 1, weight + int(w[newly].sum()))

    complete = True
    try:
        visit(pts.copy(), np.zeros(u, dtype=bool), -1, 0, 0)
    except _Stop:
        complete = False
    return best, best_mask, nodes, complete


def _support_from_flat(G: MatrixGF, nonzero, inverse, closed: np.ndarray) -> frozenset[int]:
    in_flat = np.ones(G.cols, dtype=bool)
    if inverse is not None:
        in_flat[np.nonzero(nonzero)[0]] = closed[inverse]
    return frozenset(np.nonzero(~in_flat)[0].tolist())


def ghw_exact_support(
    C: EvaluationCode | MatrixGF, r: int, budget: int = DEFAULT_SUPPORT_BUDGET
) -> int:
    """d_r from the column matroid of the generator."""
    return ghw_exact_support_witness(C, r, budget)[0]


def ghw_exact_support_witness(
    C: EvaluationCode | MatrixGF, r: int, budget: int = DEFAULT_SUPPORT_BUDGET
) -> tuple[int, frozenset[int]]:
    G = generator_of(C)
    k, n = G.rows, G.cols
    if not 1 <= r <= k:
        raise BadArgs(f"r = {r} outside 1..{k}")
    pts, counts, zero_count, nonzero, inverse = _projective_columns(G)
    best, masks, nodes, complete = _flat_search(G.spec, pts, counts, k - r, budget, all_ranks=False)
    if not complete:
        upper = n - zero_count - best[k - r] if k - r in best else None
        raise BudgetExceeded(
            f"support search stopped after {budget} flats", upper_bound=upper, lower_bound=r
        )
    support = _support_from_flat(G, nonzero, inverse, masks[k - r])
    return n - zero_count - best[k - r], support


def support_hierarchy(C: EvaluationCode | MatrixGF, budget: int = DEFAULT_SUPPORT_BUDGET) -> tuple[int, ...]:
    """All d_r from one pass over the flats of rank < k."""
    G = generator_of(C)
    k, n = G.rows, G.cols
    if k == 0:
        return ()
    pts, counts, zero_count, _, _ = _projective_columns(G)
    best, _, nodes, complete = _flat_search(G.spec, pts, counts, k - 1, budget, all_ranks=True)
    if not complete:
        raise BudgetExceeded(f"support search stopped after {budget} flats")
    return tuple(n - zero_count - best[k - r] for r in range(1, k + 1))


def min_distance_bruteforce(C: EvaluationCode | MatrixGF, limit: int = 10**7) -> int:
    """Minimum weight over all q^k - 1 nonzero codewords."""
    G = generator_of(C)
    spec, k = G.spec, G.rows
    total = spec.q**k
    if total > limit:
        raise BudgetExceeded(f"{total} codewords exceed {limit}")
    best = G.cols
    for start in range(1, total, _CHUNK):
        idx = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        coeffs = np.stack([(idx // spec.q**j) % spec.q for j in range(k)], axis=1)
        words = matmul(spec, coeffs, G.data)
        best = min(best, int(np.count_nonzero(words, axis=1).min()))
    return best


# -- hierarchies and Wei's theorems ------------------------------------------


def verify_monotonicity(report_or_values, n: int | None = None) -> bool:
    """1 <= d_1 < d_2 < ... < d_k <= n."""
    if isinstance(report_or_values, WeightHierarchyReport):
        values, n = report_or_values.values, report_or_values.n
    else:
        values = tuple(report_or_values)
    if n is None:
        raise BadArgs("code length required")
    if not values:
        return True
    return values[0] >= 1 and values[-1] <= n and all(a < b for a, b in zip(values, values[1:]))


def dual_from_hierarchy(n: int, dual_values: Sequence[int]) -> tuple[int, ...]:
    """Hierarchy of C from the hierarchy of its dual (Wei's complement rule)."""
    excluded = {n + 1 - v for v in dual_values}
    return tuple(sorted(set(range(1, n + 1)) - excluded))


def exact_hierarchy(
    C: EvaluationCode | MatrixGF,
    method: str = "exact-support",
    cap: int = DEFAULT_SUBSPACE_CAP,
    budget: int = DEFAULT_SUPPORT_BUDGET,
    jobs: int = 1,
) -> tuple[int, ...]:
    G = generator_of(C)
    if method == "exact-subspace":
        return tuple(ghw_exact_subspaces(G, r, cap, jobs)[0] for r in range(1, G.rows + 1))
    if method == "exact-support":
        return support_hierarchy(G, budget)
    if method == "duality":
        H = dual_code(G)
        return dual_from_hierarchy(G.cols, support_hierarchy(H, budget) if H.rows else ())
    raise BadArgs(f"{method!r} is not an exact method")


def verify_wei_duality(C: EvaluationCode | MatrixGF, budget: int = DEFAULT_SUPPORT_BUDGET) -> bool:
    """{d_r(C)} equals {1..n} minus {n + 1 - d_r(C_dual)}."""
    G = generator_of(C)
    H = dual_code(G)
    mine = set(support_hierarchy(G, budget))
    theirs = support_hierarchy(H, budget) if H.rows else ()
    return mine == set(dual_from_hierarchy(G.cols, theirs))


def hierarchy(
    C: EvaluationCode | MatrixGF,
    method: str = "exact-support",
    cap: int = DEFAULT_SUBSPACE_CAP,
    budget: int = DEFAULT_SUPPORT_BUDGET,
    jobs: int = 1,
    timing: bool = False,
) -> WeightHierarchyReport:
    """Full weight hierarchy by one method, with one record per r.

    ``footprint`` and ``formula`` delegate to the footprint and formulas
    modules through :func:`cartesian_ghw.methods.ghw_value`.
    """
    from .methods import ghw_value

    G = generator_of(C)
    records = []
    if method in ("exact-support", "duality"):
        t0 = time.perf_counter()
        values = exact_hierarchy(G, method, cap, budget, jobs)
        ms = (time.perf_counter() - t0) * 1000 if timing else None
        records = [GHWRecord(r, v, method, None, True, ms) for r, v in enumerate(values, 1)]
    else:
        for r in range(1, G.rows + 1):
            records.append(ghw_value(C, r, method, cap=cap, budget=budget, jobs=jobs, timing=timing))
    report = _report(C, G, records)
    if all(rec.exact for rec in records) and not verify_monotonicity(report):
        raise AssertionError(f"hierarchy {report.values} is not strictly increasing")
    return report


def _report(C, G: MatrixGF, records) -> WeightHierarchyReport:
    kw = {}
    if isinstance(C, EvaluationCode):
        kw = dict(
            sizes=C.cartesian.sizes if C.cartesian is not None else None,
            d=C.degree,
            homogeneous=C.homogeneous,
            family=C.family,
        )
    return WeightHierarchyReport(G.spec.q, G.cols, G.rows, list(records), **kw)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CGHW_JOBS", "1")))
    except ValueError:
        return 1
