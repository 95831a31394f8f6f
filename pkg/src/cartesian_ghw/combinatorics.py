"""Square-free exponent tuples, the degree-lexicographic order, and counting helpers."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BadArgs, BadDegree, DimensionMismatch


@functools.total_ordering
@dataclass(frozen=True)
class SquareFreeExponent:
    """A tuple in {0,1}^m, i.e. a square-free monomial in m variables.

    Comparison operators use the degree-lexicographic order: higher degree
    wins, and among equal degrees the tuple with the larger entry at the
    first differing index wins, so x1 > x2 > ... > xm.
    """

    bits: tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if any(b not in (0, 1) for b in bits):
            raise ValueError(f"not a square-free exponent: {self.bits}")
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_support(cls, m: int, support: Iterable[int]) -> SquareFreeExponent:
        bits = [0] * m
        for i in support:
            bits[i] = 1
        return cls(tuple(bits))

    @property
    def m(self) -> int:
        return len(self.bits)

    @property
    def degree(self) -> int:
        return sum(self.bits)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, b in enumerate(self.bits) if b)

    @property
    def mask(self) -> int:
        """Bitmask with bit i set iff variable i occurs."""
        return sum(1 << i for i, b in enumerate(self.bits) if b)

    def name(self, offset: int = 1) -> str:
        """Monomial name such as ``x1x3``; ``1`` for the constant monomial."""
        if not self.degree:
            return "1"
        return "".join(f"x{i + offset}" for i, b in enumerate(self.bits) if b)

    def __str__(self) -> str:
        return self.name()

    def __lt__(self, other: SquareFreeExponent) -> bool:
        return deglex_compare(self, other) < 0


@dataclass(frozen=True)
class BoxExponent:
    """An exponent tuple beta with 0 <= beta_i <= n_i - 1."""

    entries: tuple[int, ...]
    sizes: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != len(self.sizes):
            raise DimensionMismatch("entries and sizes differ in length")
        for b, n in zip(self.entries, self.sizes):
            if not 0 <= b < n:
                raise ValueError(f"box exponent {self.entries} outside sizes {self.sizes}")

    @property
    def mask(self) -> int:
        return sum(1 << i for i, b in enumerate(self.entries) if b)


def _as_sfe(a) -> SquareFreeExponent:
    return a if isinstance(a, SquareFreeExponent) else SquareFreeExponent(tuple(a))


def deglex_compare(a, b) -> int:
    """Return 1 if a > b, -1 if a < b and 0 if equal, in degree-lex order."""
    a, b = _as_sfe(a), _as_sfe(b)
    if a.m != b.m:
        raise DimensionMismatch(f"{a.m} vs {b.m} variables")
    da, db = a.degree, b.degree
    if da != db:
        return 1 if da > db else -1
    for x, y in zip(a.bits, b.bits):
        if x != y:
            return 1 if x > y else -1
    return 0


def enumerate_Sd(m: int, d: int) -> list[SquareFreeExponent]:
    """All square-free exponents of degree d in m variables, descending deglex."""
    if d < 0 or d > m:
        raise BadDegree(f"degree {d} outside 0..{m}")
    # combinations() is lexicographic in the support, which for a fixed
    # degree is exactly descending deglex
    return [SquareFreeExponent.from_support(m, s) for s in itertools.combinations(range(m), d)]


def enumerate_Sleqd(m: int, d: int) -> list[SquareFreeExponent]:
    """All square-free exponents of degree <= d, descending deglex."""
    if d < 0 or d > m:
        raise BadDegree(f"degree {d} outside 0..{m}")
    out: list[SquareFreeExponent] = []
    for deg in range(d, -1, -1):
        out.extend(enumerate_Sd(m, deg))
    return out


def divides(a, b) -> bool:
    """True iff the square-free monomial a divides the box monomial b."""
    a = _as_sfe(a)
    entries = b.entries if isinstance(b, BoxExponent) else tuple(b)
    if a.m != len(entries):
        raise DimensionMismatch(f"{a.m} vs {len(entries)} variables")
    return all(entries[i] >= 1 for i in a.support)


def gaussian_binomial(k: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^k."""
    if q < 2 or r < 0 or k < 0 or r > k:
        raise BadArgs(f"gaussian_binomial({k}, {r}, {q})")
    num = den = 1
    for i in range(r):
        num *= q ** (k - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def monomial_set_str(monos: Sequence[SquareFreeExponent], offset: int = 1) -> str:
    return "{" + ", ".join(a.name(offset) for a in monos) + "}"
