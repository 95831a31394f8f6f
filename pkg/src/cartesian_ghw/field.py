"""Finite fields F_q for prime powers q <= 2**16.

Elements are stored as canonical integers.  For q = p the encoding is the
residue; for q = p**e it is the coefficient vector of the polynomial
representative (low degree first) read as base-p digits, so the class of
``x`` is encoded as ``p``.

Multiplication goes through discrete log / antilog tables built once per
field.  The ``*_arr`` methods apply the same operations elementwise to numpy
integer arrays and are what the matrix and search code use.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import DivisionByZero, NotAPrimePower, SpecMismatch, Unsupported

MAX_ORDER = 2**16


def _factor(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, or raise NotAPrimePower."""
    if not isinstance(q, (int, np.integer)) or isinstance(q, bool) or q < 2:
        raise NotAPrimePower(f"{q!r} is not a prime power")
    f = _factor(int(q))
    if len(f) != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    ((p, e),) = f.items()
    return p, e


# -- polynomial helpers over F_p (coefficient lists, low degree first) -------


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m."""
    a = _poly_trim(list(a))
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _poly_trim(a)
    return a


def _is_irreducible(m: list[int], p: int) -> bool:
    e = len(m) - 1
    for deg in range(1, e // 2 + 1):
        for low in itertools.product(range(p), repeat=deg):
            if not _poly_rem(m, list(low) + [1], p):
                return False
    return True


def _smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    # product() varies the last slot fastest, so with slot 0 = constant term
    # this walks candidates in low-degree-first lexicographic order
    for low in itertools.product(range(p), repeat=e):
        m = list(low) + [1]
        if _is_irreducible(m, p):
            return tuple(m)
    raise AssertionError(f"no irreducible polynomial of degree {e} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q with q = p**e and a fixed primitive element ``xi``."""

    p: int
    e: int
    q: int
    modulus: tuple[int, ...]
    xi: int
    exp_table: np.ndarray = field(repr=False, compare=False)
    log_table: np.ndarray = field(repr=False, compare=False)
    digit_table: np.ndarray = field(repr=False, compare=False)

    def __hash__(self) -> int:
        return hash((self.p, self.e, self.modulus, self.xi))

    @property
    def is_prime(self) -> bool:
        return self.e == 1

    # -- scalar operations on encodings -------------------------------------

    def check(self, a: int) -> int:
        a = int(a)
        if not 0 <= a < self.q:
            raise ValueError(f"{a} is not an element of F_{self.q}")
        return a

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        da, db = self.digit_table[a], self.digit_table[b]
        return self._pack((da + db) % self.p)

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self._pack((-self.digit_table[a]) % self.p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return int(self.exp_table[int(self.log_table[a]) + int(self.log_table[b])])

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero(f"0 has no inverse in F_{self.q}")
        return int(self.exp_table[(self.q - 1 - int(self.log_table[a])) % (self.q - 1)])

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            a, n = self.inv(a), -n
        if a == 0:
            return 1 if n == 0 else 0
        return int(self.exp_table[(int(self.log_table[a]) * n) % (self.q - 1)])

    def elements(self) -> list[int]:
        return list(range(self.q))

    def nonzero_by_powers(self) -> list[int]:
        """1, xi, xi**2, ..., xi**(q-2)."""
        return [int(v) for v in self.exp_table[: self.q - 1]]

    def _pack(self, digits) -> int:
        return int(sum(int(d) * self.p**i for i, d in enumerate(digits)))

    # -- elementwise numpy operations ---------------------------------------

    def add_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        d = (self.digit_table[a] + self.digit_table[b]) % self.p
        return d @ self._place_values

    def neg_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if self.e == 1:
            return (-a) % self.p
        if self.p == 2:
            return a.copy()
        return ((-self.digit_table[a]) % self.p) @ self._place_values

    def sub_arr(self, a, b) -> np.ndarray:
        return self.add_arr(a, self.neg_arr(b))

    def mul_arr(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        if self.e == 1:
            return (a * b) % self.p
        out = self.exp_table[self.log_table[a] + self.log_table[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def inv_arr(self, a) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise DivisionByZero(f"0 has no inverse in F_{self.q}")
        return self.exp_table[(self.q - 1 - self.log_table[a]) % (self.q - 1)]

    @functools.cached_property
    def _place_values(self) -> np.ndarray:
        return np.array([self.p**i for i in range(self.e)], dtype=np.int64)

    def __call__(self, value: int) -> "FieldElement":
        return FieldElement(self, self.check(value))


@functools.lru_cache(maxsize=None)
def field_make(q: int) -> FieldSpec:
    """Build F_q deterministically.

    The modulus is the lexicographically smallest monic irreducible
    polynomial of degree e (coefficients compared from the constant term up)
    and ``xi`` is the primitive element with the smallest encoding.
    """
    p, e = prime_power(q)
    if q > MAX_ORDER:
        raise Unsupported(f"q = {q} exceeds the supported maximum {MAX_ORDER}")
    modulus = _smallest_irreducible(p, e) if e > 1 else ()

    digits = np.zeros((q, e), dtype=np.int64)
    for v in range(q):
        x = v
        for i in range(e):
            digits[v, i] = x % p
            x //= p

    if e == 1:

        def slow_mul(a: int, b: int) -> int:
            return a * b % p

    elif p == 2:
        red = sum(c << i for i, c in enumerate(modulus))

        def slow_mul(a: int, b: int) -> int:
            acc = 0
            while b:
                if b & 1:
                    acc ^= a
                b >>= 1
                a <<= 1
                if a >> e & 1:
                    a ^= red
            return acc

    else:
        mod = list(modulus)
        place = [p**i for i in range(e)]

        def slow_mul(a: int, b: int) -> int:
            da, db = digits[a], digits[b]
            prod = [0] * (2 * e - 1)
            for i in range(e):
                if da[i]:
                    for j in range(e):
                        prod[i + j] = (prod[i + j] + int(da[i]) * int(db[j])) % p
            rem = _poly_rem(prod, mod, p)
            return sum(c * place[i] for i, c in enumerate(rem))

    def slow_pow(a: int, n: int) -> int:
        r = 1
        while n:
            if n & 1:
                r = slow_mul(r, a)
            a = slow_mul(a, a)
            n >>= 1
        return r

    order = q - 1
    primes = list(_factor(order)) if order > 1 else []
    xi = next(
        a for a in range(1, q) if all(slow_pow(a, order // ell) != 1 for ell in primes)
    )

    # doubled antilog table so log a + log b never needs a reduction
    exp = np.zeros(2 * order, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    v = 1
    for i in range(order):
        exp[i] = v
        log[v] = i
        v = slow_mul(v, xi)
    exp[order:] = exp[:order]
    return FieldSpec(p, e, q, modulus, xi, exp, log, digits)


@dataclass(frozen=True)
class FieldElement:
    """An element of a FieldSpec with Python operator support."""

    spec: FieldSpec
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.spec.q:
            raise ValueError(f"{self.value} is not an element of F_{self.spec.q}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise SpecMismatch(f"F_{self.spec.q} vs F_{other.spec.q}")
            return other.value
        if isinstance(other, (int, np.integer)):
            return self.spec.check(other)
        return NotImplemented

    def _wrap(self, v: int) -> FieldElement:
        return FieldElement(self.spec, v)

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.spec.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return NotImplemented
        return self._wrap(self.spec.mul(self.value, self.spec.inv(b)))

    def __neg__(self):
        return self._wrap(self.spec.neg(self.value))

    def __pow__(self, n: int):
        return self._wrap(self.spec.pow(self.value, n))

    def inv(self) -> FieldElement:
        return self._wrap(self.spec.inv(self.value))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __repr__(self) -> str:
        return f"F{self.spec.q}({self.value})"


# functional aliases mirroring the scalar API


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inv()


def power(a: FieldElement, n: int) -> FieldElement:
    return a**n
