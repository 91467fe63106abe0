from fractions import Fraction

import pytest

from core.errors import (
    ArityMismatch, BadWallIncidence, InvalidCocharacter, InvalidOmega,
    NoIsolatedMinimum, NonConvexSupport, NonPrimitiveRay, NotSimplicial, NotSmooth
)
from toric import Fan, FixedPoint
from toric.fan import is_projective_space, validate_fan
from toric.fixed_points import minimal_weights
from toric.simplex import find_ample_vector
from .conftest import ALL_FANS, load_fan, load_model


def test_p2_is_anticanonical():
    cert = validate_fan(load_fan('p2'))
    assert cert.omega == (1, 1, 1)
    assert cert.source == 'anticanonical'
    assert cert.curve_classes() == ((1, 1, 1),)


def test_p1_wall_class():
    assert load_model('p1').curve_classes == ((1, 1),)


def test_non_smooth_cone():
    fan = Fan(dimension=2, rays=((1, 0), (1, 2)), cones=((0, 1),))
    with pytest.raises(NotSmooth) as e:
        validate_fan(fan)
    assert e.value.details['determinant'] == 2


def test_non_primitive_ray():
    fan = Fan(dimension=2, rays=((2, 0), (0, 1)), cones=((0, 1),))
    with pytest.raises(NonPrimitiveRay):
        validate_fan(fan)


def test_cone_with_too_few_rays():
    fan = Fan(dimension=2, rays=((1, 0), (0, 1)), cones=((0,),))
    with pytest.raises(NotSimplicial):
        validate_fan(fan)


def test_wall_shared_by_three_cones():
    fan = Fan(
        dimension=2,
        rays=((1, 0), (0, 1), (-1, 1), (1, 1)),
        cones=((0, 1), (1, 2), (1, 3))
    )
    with pytest.raises(BadWallIncidence):
        validate_fan(fan)


def test_non_convex_support():
    # three quadrants of the plane
    fan = Fan(
        dimension=2,
        rays=((1, 0), (0, 1), (-1, 0), (0, -1)),
        cones=((0, 1), (1, 2), (2, 3))
    )
    with pytest.raises(NonConvexSupport) as e:
        validate_fan(fan)
    assert e.value.code == 'NON_CONVEX_SUPPORT'


def test_half_plane_support_is_convex():
    fan = Fan(dimension=2, rays=((1, 0), (0, 1), (-1, 0)), cones=((0, 1), (1, 2)))
    validate_fan(fan)

def test_hirzebruch_one_classes():
    model = load_model('f1')
    assert set(model.curve_classes) == {(0, 1, 0, 1), (1, -1, 1, 0)}
    assert model.certificate.source == 'anticanonical'
    # the fourth wall gives the sum of the other two classes
    degrees = {w.degree for w in model.certificate.wall_classes}
    assert (1, 0, 1, 1) in degrees


def test_hirzebruch_three_drops_decomposable_class():
    model = load_model('f3')
    assert set(model.curve_classes) == {(0, 1, 0, 1), (1, -3, 1, 0)}


@pytest.mark.parametrize('name', ['f2', 'f3', 'local_p2'])
def test_linear_program_omega(name):
    model = load_model(name)
    assert model.certificate.source == 'linear-program'
    for d in model.curve_classes:
        assert model.certificate.grading(d) >= 1


def test_local_p2_class():
    assert load_model('local_p2').curve_classes == ((1, 1, 1, -3),)


def test_user_omega():
    cert = validate_fan(load_fan('p2'), omega=(Fraction(1, 3), 0, 1))
    assert cert.source == 'user'
    assert cert.grading((1, 1, 1)) == Fraction(4, 3)


@pytest.mark.parametrize('omega', [(1, -1, 0), (1, 1)])
def test_invalid_omega(omega):
    with pytest.raises(InvalidOmega):
        validate_fan(load_fan('p2'), omega=omega)


def test_ample_vector_feasible():
    classes = [(1, -2, 1, 0), (0, 1, 0, 1)]
    h = find_ample_vector(classes, 4)
    assert h is not None
    for d in classes:
        assert sum(a * b for a, b in zip(h, d)) >= 1


def test_ample_vector_infeasible():
    assert find_ample_vector([(1, 1), (-1, -1)], 2) is None


def test_projective_space_detection():
    assert is_projective_space(load_fan('p1'))
    assert is_projective_space(load_fan('p3'))
    assert not is_projective_space(load_fan('p1xp1'))
    assert not is_projective_space(load_fan('local_p2'))


def test_p1_fixed_points(p1):
    A = p1.algebra
    l1, l2 = A.lam(1), A.lam(2)
    x0, x1 = p1.points
    assert x0.cone == (0,) and x1.cone == (1,)
    assert x0.weights == (l1 - l2, A.zero)
    assert x1.weights == (A.zero, l2 - l1)
    assert x0.label == 'x[1]'


def test_p2_restrictions(p2):
    A = p2.algebra
    x = p2.points[0]
    assert x.cone == (0, 1)
    assert x.weights == (A.lam(1) - A.lam(3), A.lam(2) - A.lam(3), A.zero)
    assert x.euler_class == (A.lam(1) - A.lam(3)) * (A.lam(2) - A.lam(3))


def test_hirzebruch_restrictions(f1):
    A = f1.algebra
    l1, l2, l3, l4 = (A.lam(i) for i in range(1, 5))
    x = next(p for p in f1.points if p.cone == (1, 2))
    assert x.weights == (A.zero, l1 + l2 - l4, l3 - l1, A.zero)


@pytest.mark.parametrize('name', ALL_FANS)
def test_fixed_point_invariants(name):
    model = load_model(name)
    fan = model.fan
    assert len(model.points) == len(fan.cones)
    assert all(x.euler_class for x in model.points)
    tangent_sets = [x.tangent_weights for x in model.points]
    assert len(set(tangent_sets)) == len(tangent_sets)
    for d in model.curve_classes:
        for c in range(fan.dimension):
            assert sum(d[i] * fan.rays[i][c] for i in range(fan.m)) == 0


def test_p1_section_degrees(p1):
    assert p1.section_degrees((1, 0)) == [(0, 0), (1, 1)]
    assert p1.section_degrees((0, 1)) == [(1, 1), (0, 0)]
    assert p1.section_degrees((0, 0)) == [(0, 0), (0, 0)]


@pytest.mark.parametrize('name', ALL_FANS)
def test_unit_section_degrees(name):
    model = load_model(name)
    for i in range(model.m):
        k = model.unit_vector(i)
        for x in model.points:
            expected = tuple(k[j] - x.pairing(k)[j] for j in range(model.m))
            assert model.section_degree(x, k) == expected


def test_negative_cocharacter_rejected(p1):
    with pytest.raises(InvalidCocharacter) as e:
        p1.minimal_weights((-1, 0))
    assert e.value.code == 'INVALID_COCHARACTER'


@pytest.mark.parametrize('k', [(1,), (1, 0, 0)])
def test_cocharacter_arity_rejected(p1, k):
    with pytest.raises(ArityMismatch):
        p1.minimal_weights(k)
    with pytest.raises(ArityMismatch):
        p1.points[0].pairing(k)


def test_p1xp1_euler_classes_repeat_up_to_sign():
    model = load_model('p1xp1')
    eulers = [x.euler_class for x in model.points]
    assert len(set(eulers)) == 2
    assert len({x.tangent_weights for x in model.points}) == 4


def _point(index, cone, rows):
    return FixedPoint(index=index, cone=cone, restrictions=rows, weights=(), euler_class=None)


def test_inconsistent_minimal_locus():
    points = [_point(0, (0,), ((1, 0), (0, 0))), _point(1, (1,), ((0, 0), (0, 1)))]
    with pytest.raises(NoIsolatedMinimum):
        minimal_weights(points, (1, 1))


def test_missing_minimal_locus():
    points = [_point(0, (0,), ((-1, 0), (0, 0)))]
    with pytest.raises(NoIsolatedMinimum):
        minimal_weights(points, (1, 0))


def test_fan_dict_round_trip():
    fan = load_fan('f2')
    assert Fan.from_dict(fan.to_dict()) == fan
    assert Fan.from_dict(fan.to_dict()).fan_hash() == fan.fan_hash()
