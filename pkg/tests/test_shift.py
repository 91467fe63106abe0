import pytest

from core.errors import InconsistentComposition
from mirror import (
    classical_shift_residual, compose_check, delta, flow_residual, ifun_series,
    multi_flow_residual, shift_apply, shift_operator
)
from toric.cohomology import LocalizedClass
from .conftest import ALL_FANS, SMALL_FANS, load_model


def test_p1_delta(p1):
    A = p1.algebra
    a = A.lam(1) - A.lam(2)
    x0, x1 = p1.points
    first = delta(p1, x0, (1, 0))
    assert first.offset == (0, 0)
    assert first.factor == a
    second = delta(p1, x1, (1, 0))
    assert second.offset == (1, 1)
    assert second.factor == 1 / (A.z - a)


def test_shift_of_unit(p1):
    A = p1.algebra
    a = A.lam(1) - A.lam(2)
    unit = p1.series(4, {(0, 0): p1.cohomology.constant(1)})
    shifted = shift_apply(p1, shift_operator(p1, (1, 0)), unit)
    assert shifted.coefficient((0, 0)) == LocalizedClass((a, A.zero))
    assert shifted.coefficient((1, 1)) == LocalizedClass((A.zero, 1 / (A.z - a)))


@pytest.mark.parametrize('name', SMALL_FANS)
def test_classical_limit_of_unit(name):
    model = load_model(name)
    unit = model.series(4, {(0,) * model.m: model.cohomology.constant(1)})
    for i in range(model.m):
        shifted = shift_apply(model, shift_operator(model, model.unit_vector(i)), unit)
        assert shifted.coefficient((0,) * model.m) == model.cohomology.divisor(i)


@pytest.mark.parametrize('name', SMALL_FANS)
def test_flow_identity(name):
    model = load_model(name)
    ifun = ifun_series(model, 4)
    for i in range(model.m):
        assert flow_residual(model, i, ifun).is_zero()


@pytest.mark.parametrize('name', ['p2', 'p1xp1'])
def test_pairwise_flow_identity(name):
    model = load_model(name)
    ifun = ifun_series(model, 4)
    for i in range(model.m):
        for j in range(i + 1, model.m):
            assert multi_flow_residual(model, (i, j), ifun).is_zero()


def test_full_flow_identity_on_p2(p2):
    ifun = ifun_series(p2, 6)
    assert multi_flow_residual(p2, (0, 1, 2), ifun).is_zero()


def test_repeated_indices_rejected(p2):
    with pytest.raises(ValueError):
        multi_flow_residual(p2, (0, 0), ifun_series(p2, 0))


def test_flow_residual_detects_corruption(p1):
    ifun = ifun_series(p1, 4)
    A = p1.algebra
    broken = ifun.series + p1.series(4, {(1, 1): LocalizedClass((A.one, A.zero))})
    assert not flow_residual(p1, 0, broken).is_zero()


def test_composition_offsets():
    p1 = load_model('p1')
    assert compose_check(p1, (1, 0), (0, 1)) == (1, 1)
    assert compose_check(p1, (1, 0), (0, 0)) == (0, 0)
    assert compose_check(p1, (1, 0), (1, 0)) == (0, 0)
    assert compose_check(load_model('p1xp1'), (1, 0, 0, 0), (0, 0, 1, 0)) == (0, 0, 0, 0)
    assert compose_check(load_model('p2'), (1, 0, 0), (0, 1, 0)) == (0, 0, 0)


@pytest.mark.parametrize('name', ['p1', 'p2', 'p1xp1', 'f1', 'f2'])
def test_composition_is_consistent(name):
    model = load_model(name)
    for i in range(model.m):
        for j in range(model.m):
            try:
                compose_check(model, model.unit_vector(i), model.unit_vector(j))
            except InconsistentComposition as e:
                pytest.fail(e.message)


@pytest.mark.parametrize('name', ['p2', 'f1'])
def test_classical_shift(name):
    model = load_model(name)
    cohomology = model.cohomology
    for i in range(model.m):
        for exponent in cohomology.basis:
            f = cohomology.polynomial({exponent: 1})
            assert not classical_shift_residual(model, i, f)


@pytest.mark.slow
@pytest.mark.parametrize('name', ALL_FANS)
def test_flow_identity_full_cutoff(name):
    model = load_model(name)
    ifun = ifun_series(model, 6)
    for i in range(model.m):
        assert flow_residual(model, i, ifun).is_zero()
    for i in range(model.m):
        for j in range(i + 1, model.m):
            assert multi_flow_residual(model, (i, j), ifun).is_zero()
