import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cartesian_ghw.errors import DivisionByZero, NotAPrimePower, SpecMismatch
from cartesian_ghw.field import field_make, prime_power

ORDERS = [2, 3, 4, 5, 7, 8, 9, 16, 25, 27]


def test_prime_field_5():
    F = field_make(5)
    assert (F.p, F.e, F.xi) == (5, 1, 2)


def test_f4_modulus_is_x2_x_1():
    F = field_make(4)
    assert (F.p, F.e) == (2, 2)
    assert F.modulus == (1, 1, 1)
    # x is encoded as 2, x + 1 as 3
    assert F.mul(2, 3) == 1


def test_not_a_prime_power():
    with pytest.raises(NotAPrimePower):
        field_make(6)
    with pytest.raises(NotAPrimePower):
        prime_power(1)


def test_small_ops():
    assert field_make(3).add(1, 2) == 0
    assert field_make(5).inv(2) == 3
    with pytest.raises(DivisionByZero):
        field_make(5).inv(0)


def test_large_field_builds():
    F = field_make(2**16)
    a = 12345
    assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", ORDERS)
def test_xi_is_primitive(q):
    F = field_make(q)
    powers = {F.pow(F.xi, i) for i in range(q - 1)}
    assert powers == set(range(1, q))
    assert F.nonzero_by_powers() == [F.pow(F.xi, i) for i in range(q - 1)]


@pytest.mark.parametrize("q", ORDERS)
def test_tables_match_schoolbook(q):
    F = field_make(q)
    a = np.repeat(np.arange(q), q)
    b = np.tile(np.arange(q), q)
    prod = F.mul_arr(a, b)
    for x, y, z in zip(a.tolist(), b.tolist(), prod.tolist()):
        assert F.mul(x, y) == z
    assert np.array_equal(F.add_arr(a, F.neg_arr(a)), np.zeros_like(a))


@st.composite
def field_triples(draw):
    q = draw(st.sampled_from(ORDERS))
    x = st.integers(0, q - 1)
    return field_make(q), draw(x), draw(x), draw(x)


@settings(max_examples=300, deadline=None)
@given(field_triples())
def test_field_axioms(t):
    F, a, b, c = t
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.sub(F.add(a, b), b) == a
    if a:
        assert F.mul(a, F.inv(a)) == 1
        assert F.pow(a, F.q - 1) == 1


@settings(max_examples=100, deadline=None)
@given(field_triples())
def test_element_wrapper(t):
    F, a, b, _ = t
    x, y = F(a), F(b)
    assert int(x + y) == F.add(a, b)
    assert int(x * y) == F.mul(a, b)
    assert int(x - y) == F.sub(a, b)
    if b:
        assert int((x / y) * y) == a


def test_mixing_fields_fails():
    with pytest.raises(SpecMismatch):
        field_make(3)(1) + field_make(5)(1)
