"""Dense matrices over F_q stored as numpy arrays of canonical encodings."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .combinatorics import gaussian_binomial
from .errors import CapExceeded, DimensionMismatch, SpecMismatch
from .field import FieldSpec

DEFAULT_SUBSPACE_CAP = 10**7


@dataclass(frozen=True, eq=False)
class MatrixGF:
    spec: FieldSpec
    data: np.ndarray

    def __post_init__(self):
        data = np.array(self.data, dtype=np.int64, copy=True)
        if data.ndim == 1:
            data = data.reshape(1, -1) if data.size else data.reshape(0, 0)
        if data.ndim != 2:
            raise DimensionMismatch("matrix data must be two-dimensional")
        if data.size and (data.min() < 0 or data.max() >= self.spec.q):
            raise ValueError(f"entries outside F_{self.spec.q}")
        data.setflags(write=False)
        object.__setattr__(self, "data", data)

    @classmethod
    def zeros(cls, spec: FieldSpec, rows: int, cols: int) -> MatrixGF:
        return cls(spec, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> MatrixGF:
        return cls(spec, np.eye(n, dtype=np.int64))

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def transpose(self) -> MatrixGF:
        return MatrixGF(self.spec, self.data.T)

    @property
    def T(self) -> MatrixGF:
        return self.transpose()

    def __matmul__(self, other: MatrixGF) -> MatrixGF:
        if other.spec != self.spec:
            raise SpecMismatch("matrices over different fields")
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        return MatrixGF(self.spec, matmul(self.spec, self.data, other.data))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixGF)
            and other.spec == self.spec
            and other.shape == self.shape
            and np.array_equal(other.data, self.data)
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.shape, self.data.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.data.tolist()

    def __repr__(self) -> str:
        return f"MatrixGF(q={self.spec.q}, {self.tolist()})"


def matmul(spec: FieldSpec, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Field product of two encoded integer arrays (a: s x t, b: t x u)."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if spec.is_prime:
        if a.shape[1] * (spec.p - 1) ** 2 < 2**62:
            return (a @ b) % spec.p
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for t in range(a.shape[1]):
        out = spec.add_arr(out, spec.mul_arr(a[:, t : t + 1], b[t : t + 1, :]))
    return out


def _rref_array(spec: FieldSpec, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    a = np.array(a, dtype=np.int64, copy=True)
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = spec.mul_arr(a[r], spec.inv(int(a[r, c])))
        factors = a[:, c].copy()
        factors[r] = 0
        others = np.nonzero(factors)[0]
        if others.size:
            a[others] = spec.sub_arr(a[others], spec.mul_arr(factors[others, None], a[r][None, :]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: MatrixGF) -> tuple[MatrixGF, tuple[int, ...]]:
    """Reduced row echelon form (same shape, zero rows last) and pivot columns."""
    a, piv = _rref_array(m.spec, m.data)
    return MatrixGF(m.spec, a), tuple(piv)


def rank(m: MatrixGF) -> int:
    return len(rref(m)[1])


def row_basis(m: MatrixGF) -> MatrixGF:
    """The nonzero rows of rref(m): a basis of the row space."""
    r, piv = rref(m)
    return MatrixGF(m.spec, r.data[: len(piv)].reshape(len(piv), m.cols))


def nullspace_basis(m: MatrixGF) -> MatrixGF:
    """Basis (as rows) of {v : m v^T = 0}."""
    spec = m.spec
    r, piv = rref(m)
    n = m.cols
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for row, pc in enumerate(piv):
            out[i, pc] = spec.neg(int(r.data[row, f]))
    return MatrixGF(spec, out.reshape(len(free), n))


def row_space_support(b: MatrixGF) -> set[int]:
    """Coordinates where some vector of the row space of b is nonzero."""
    if b.rows == 0:
        return set()
    return set(np.nonzero(np.any(b.data != 0, axis=0))[0].tolist())


# -- canonical enumeration of subspaces --------------------------------------


def pivot_patterns(k: int, r: int) -> list[tuple[int, ...]]:
    """All pivot column patterns of r x k RREF matrices, lexicographic."""
    return list(itertools.combinations(range(k), r))


def free_positions(pattern: Sequence[int], k: int) -> list[list[int]]:
    """Per row of an RREF matrix with the given pivots, its free columns."""
    pset = set(pattern)
    return [[c for c in range(p + 1, k) if c not in pset] for p in pattern]


def pattern_row_block(
    spec: FieldSpec, pattern: Sequence[int], row: int, k: int, start: int = 0, stop: int | None = None
) -> np.ndarray:
    """Rows ``start:stop`` of all admissible values of one RREF row.

    Row ``row`` has a 1 at its pivot, zeros at the other pivots and before its
    pivot, and arbitrary entries in its free columns.  Choices are ordered as
    ``itertools.product`` over the free columns (last free column fastest).
    """
    free = free_positions(pattern, k)[row]
    total = spec.q ** len(free)
    stop = total if stop is None else min(stop, total)
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.zeros((idx.size, k), dtype=np.int64)
    out[:, pattern[row]] = 1
    for j, c in enumerate(reversed(free)):
        out[:, c] = (idx // spec.q**j) % spec.q
    return out


def pattern_size(spec: FieldSpec, pattern: Sequence[int], k: int) -> int:
    return spec.q ** sum(len(f) for f in free_positions(pattern, k))


def enumerate_subspaces(
    k: int, r: int, spec: FieldSpec, cap: int = DEFAULT_SUBSPACE_CAP, patterns: Sequence[tuple[int, ...]] | None = None
) -> Iterator[MatrixGF]:
    """Yield every r-dimensional subspace of F_q^k once, as its RREF basis.

    Order: pivot patterns lexicographically, then row choices with the first
    row outermost.  ``patterns`` restricts the stream to a chunk.
    """
    count = gaussian_binomial(k, r, spec.q)
    if count > cap:
        raise CapExceeded(f"{count} subspaces exceed the cap {cap}", count)
    if r == 0:
        yield MatrixGF(spec, np.zeros((0, k), dtype=np.int64))
        return
    for pattern in patterns if patterns is not None else pivot_patterns(k, r):
        blocks = [pattern_row_block(spec, pattern, t, k) for t in range(r)]
        for choice in itertools.product(*(range(len(b)) for b in blocks)):
            yield MatrixGF(spec, np.stack([blocks[t][c] for t, c in enumerate(choice)]))
