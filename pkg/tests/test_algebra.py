import random

import pytest

from algebra import ExactAlgebra
from core.errors import ArityMismatch, NotProper, ZeroDivisionPolynomial


@pytest.fixture
def A():
    return ExactAlgebra(2)


@pytest.fixture
def gens(A):
    z, l2, l1 = A.ring.gens
    return z, l1, l2


def test_generator_order(A):
    assert [str(s) for s in A.ring.symbols] == ['z', 'l2', 'l1']
    assert str(A.lam(1)) == 'l1'


def test_mp_arith(A, gens):
    z, l1, l2 = gens
    assert A.mp_arith(l1, -l1, 'add') == 0
    assert A.mp_arith(l1 - l2, l1 + l2, 'mul') == l1**2 - l2**2
    assert A.mp_arith((l1 - l2) * z, z * z, 'add') == z**2 + l1 * z - l2 * z


def test_mp_arith_rejects_foreign_ring(A, gens):
    other = ExactAlgebra(3)
    with pytest.raises(ArityMismatch):
        A.mp_arith(gens[1], other.ring.gens[0], 'add')


def test_rf_reduce(A, gens):
    z, l1, l2 = gens
    assert A.rf_reduce(l1**2 - l2**2, l1 - l2) == A.lam(1) + A.lam(2)
    assert A.rf_reduce(z, z) == A.one
    assert A.rf_reduce(l1 * z + z**2, z * (l1 + z)) == A.one


def test_rf_reduce_zero_denominator(A, gens):
    with pytest.raises(ZeroDivisionPolynomial):
        A.rf_reduce(gens[0], A.ring.zero)


def test_z_split_examples(A):
    z, l1, l2 = A.z, A.lam(1), A.lam(2)
    assert A.z_split((z**2 + 1) / z) == (z, 1 / z)
    f = l1 / (z + l2)
    assert A.z_split(f) == (A.zero, f)
    g = ((l1 - l2 + z) * z + 1) / (l1 - l2 + z)
    assert A.z_split(g) == (z, 1 / (l1 - l2 + z))


def test_z_split_non_monic_denominator(A):
    z, l1, l2 = A.z, A.lam(1), A.lam(2)
    f = (z**3 + l2 * z) / (l1 * z + 1)
    poly, proper = A.z_split(f)
    assert poly + proper == f
    assert A.is_z_polynomial(poly)
    assert A.is_proper(proper)
    assert A.z_split(poly) == (poly, A.zero)
    assert A.z_split(proper) == (A.zero, proper)


def test_z_inf_leading(A):
    z, l1, l2 = A.z, A.lam(1), A.lam(2)
    assert A.z_inf_leading(1 / z) == A.one
    assert A.z_inf_leading(l1 / (z + l2)) == l1
    assert A.z_inf_leading(1 / (z * (l1 - l2 + z))) == A.zero
    with pytest.raises(NotProper):
        A.z_inf_leading(z / (z + 1))


def test_ring_axioms(A):
    z, l1, l2 = A.z, A.lam(1), A.lam(2)
    a = (l1 + z) / (l2 - z)
    b = l1 * l2 / (z + 3)
    c = (z**2 - l1) / (l1 + l2)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def random_poly(A, rng, terms=3):
    z, l2, l1 = A.ring.gens
    p = A.ring.zero
    for _ in range(terms):
        monomial = z**rng.randint(0, 2) * l1**rng.randint(0, 2) * l2**rng.randint(0, 1)
        p += rng.randint(-5, 5) * monomial
    return p


def random_function(A, rng):
    den = random_poly(A, rng)
    return A.rf_reduce(random_poly(A, rng), den if den else A.ring.one + A.ring.gens[0])


@pytest.mark.parametrize('seed', range(8))
def test_random_ring_axioms(A, seed):
    rng = random.Random(seed)
    a, b, c = (random_function(A, rng) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == A.zero
    assert a * A.one == a


@pytest.mark.parametrize('seed', range(8))
def test_random_z_split(A, seed):
    f = random_function(A, random.Random(seed))
    poly, proper = A.z_split(f)
    assert poly + proper == f
    assert A.is_z_polynomial(poly)
    assert A.is_proper(proper)
    assert A.z_split(poly) == (poly, A.zero)
    assert A.z_split(proper) == (A.zero, proper)


def test_shift_lambda(A):
    z, l1, l2 = A.z, A.lam(1), A.lam(2)
    assert A.shift_lambda(l1 - l2, (1, 0)) == l1 - z - l2
    assert A.shift_lambda(1 / (l2 - l1 + z), (1, 0)) == 1 / (l2 - l1 + 2 * z)
    assert A.shift_lambda(l1 - l2, (1, 1)) == l1 - l2


def test_nonequivariant(A):
    z, l1 = A.z, A.lam(1)
    assert A.nonequivariant((l1 + z) / z) == A.one
    with pytest.raises(ZeroDivisionPolynomial):
        A.nonequivariant(1 / l1)
