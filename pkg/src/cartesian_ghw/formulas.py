"""Closed-form GHW values and related counts, in exact integer arithmetic.

Size tuples are sorted ascending before use, so callers may pass them in
any order.  Every function raises BadRange outside the parameter range where
its value is established instead of extrapolating.
"""

from __future__ import annotations

from math import comb, prod
from typing import Sequence

from .errors import BadRange, ConditionFails


def _sizes(sizes: Sequence[int]) -> list[int]:
    s = sorted(int(n) for n in sizes)
    if not s:
        raise BadRange("empty size tuple")
    if s[0] < 2:
        raise BadRange(f"all sizes must be >= 2, got {tuple(sizes)}")
    return s


def _check_dr(m: int, d: int, r: int) -> None:
    if not 1 <= d <= m:
        raise BadRange(f"d = {d} outside 1..{m}")
    if not 1 <= r <= m + 1 - d:
        raise BadRange(f"r = {r} outside 1..{m + 1 - d} (m + 1 - d)")


def condition_holds(sizes: Sequence[int], d: int, r: int) -> bool:
    """The size-growth condition needed by the formulas for d_r.

    For every d <= i < j <= d + r - 2 it requires
    n_{d+r-1} n_{d-1} (n_i + n_j - 1) <= (n_{d+r-1} + n_{d-1} - 1) n_i n_j,
    with 1-based indices into the sorted sizes and n_0 taken to be 1.
    """
    s = _sizes(sizes)
    _check_dr(len(s), d, r)

    def n(i: int) -> int:
        return 1 if i == 0 else s[i - 1]

    top, low = n(d + r - 1), n(d - 1)
    for i in range(d, d + r - 1):
        for j in range(i + 1, d + r - 1):
            if top * low * (n(i) + n(j) - 1) > (top + low - 1) * n(i) * n(j):
                return False
    return True


def lemma_shadow_lower_bound(sizes: Sequence[int], d: int, r: int) -> int:
    """prod_{i<d}(n_i - 1) * prod_{i>=d+r} n_i * (prod_{d<=i<d+r} n_i - 1)."""
    s = _sizes(sizes)
    _check_dr(len(s), d, r)
    head = prod(n - 1 for n in s[: d - 1])
    tail = prod(s[d + r - 1 :])
    block = prod(s[d - 1 : d + r - 1])
    return head * tail * (block - 1)


def _formula(sizes, d, r) -> int:
    value = lemma_shadow_lower_bound(sizes, d, r)
    if not condition_holds(sizes, d, r):
        raise ConditionFails(
            f"size condition fails for sizes={tuple(sorted(sizes))}, d={d}, r={r}", value
        )
    return value


def ghw_formula_Cd(sizes: Sequence[int], d: int, r: int) -> int:
    """d_r of C_d over a Cartesian set whose factors all contain 0."""
    return _formula(sizes, d, r)


def ghw_formula_Cleqd(sizes: Sequence[int], d: int, r: int) -> int:
    """d_r of C_<=d over any Cartesian set with these sizes."""
    return _formula(sizes, d, r)


def ghw_formula_affine_punctured(q: int, m: int, d: int, r: int) -> int:
    """d_r of C_d evaluated on F_q^m minus the origin."""
    _check_dr(m, d, r)
    return (q - 1) ** (d - 1) * q ** (m - d - r + 1) * (q**r - 1)


def ghw_formula_projective(q: int, m: int, d: int, r: int) -> int:
    """d_r of the square-free projective code of degree d on P^m(F_q)."""
    if not 1 <= d <= m + 1:
        raise BadRange(f"d = {d} outside 1..{m + 1}")
    if not 1 <= r <= m + 2 - d:
        raise BadRange(f"r = {r} outside 1..{m + 2 - d} (m + 2 - d)")
    body = q ** (m - d - r + 2) * (q**r - 1)
    if d == 1:
        # (q^r - 1) / (q - 1) is an integer
        return body // (q - 1)
    return body * (q - 1) ** (d - 2)


def projective_lengths(q: int, m: int, d: int) -> tuple[int, int]:
    """(length of the projective code, length after removing zero columns).

    The removed coordinates are the points with fewer than d nonzero
    coordinates; P^m(F_q) has C(m+1, i) (q-1)^(i-1) points with exactly i.
    """
    if d < 1:
        raise BadRange("d must be >= 1")
    full = (q ** (m + 1) - 1) // (q - 1)
    return full, full - sum(comb(m + 1, i) * (q - 1) ** (i - 1) for i in range(1, d))


def code_dimensions(m: int, d: int) -> tuple[int, int, int]:
    """(dim C_d, dim C_<=d, dim of the projective code on P^m)."""
    if m < 1 or d < 0:
        raise BadRange(f"m = {m}, d = {d}")
    return comb(m, d), sum(comb(m, i) for i in range(d + 1)), comb(m + 1, d)
