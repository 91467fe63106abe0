"""
Fan validation: primitivity, smoothness, wall structure and a projectivity
certificate solved as an exact linear program.
"""
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix

from core.errors import (
    BadWallIncidence, InvalidOmega, NonConvexSupport, NonPrimitiveRay,
    NotProjective, NotSimplicial, NotSmooth
)
from core.logger import logger
from . import Fan, ProjectivityCertificate, WallClass
from .simplex import find_ample_vector


def cone_matrix(fan: Fan, cone: Sequence[int]) -> Matrix:
    """D×D integer matrix with the cone's rays as columns"""
    return Matrix([list(fan.rays[i]) for i in cone]).T


def unimodular_inverse(fan: Fan, cone: Sequence[int]) -> List[List[int]]:
    """Integer inverse of the cone's column matrix"""
    inverse = cone_matrix(fan, cone).inv()
    return [[int(v) for v in inverse.row(r)] for r in range(inverse.rows)]


def _check_rays(fan: Fan):
    for idx, ray in enumerate(fan.rays, start=1):
        g = 0
        for v in ray:
            g = gcd(g, v)
        if g != 1:
            raise NonPrimitiveRay(
                f"Ray {idx} {list(ray)} is not primitive (gcd {g})",
                {'ray': idx}
            )


def _check_cones(fan: Fan):
    for cone in fan.cones:
        labels = [i + 1 for i in cone]
        if len(cone) != fan.dimension:
            raise NotSimplicial(
                f"Maximal cone {labels} has {len(cone)} rays, expected {fan.dimension}",
                {'cone': labels}
            )
        det = cone_matrix(fan, cone).det()
        if det == 0:
            raise NotSimplicial(f"Maximal cone {labels} is degenerate", {'cone': labels})
        if abs(det) != 1:
            raise NotSmooth(
                f"Maximal cone {labels} has determinant {det}",
                {'cone': labels, 'determinant': int(det)}
            )


def _walls(fan: Fan) -> Dict[Tuple[int, ...], List[Tuple[int, ...]]]:
    incidence: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {}
    for cone in fan.cones:
        for wall in combinations(cone, fan.dimension - 1):
            incidence.setdefault(wall, []).append(cone)
    for wall, cones in incidence.items():
        if len(cones) > 2:
            raise BadWallIncidence(
                f"Wall {[i + 1 for i in wall]} is shared by {len(cones)} maximal cones",
                {'wall': [i + 1 for i in wall]}
            )
    return incidence


def _check_convex_support(fan: Fan, incidence: Dict[Tuple[int, ...], List[Tuple[int, ...]]]):
    """
    Every boundary wall spans a supporting hyperplane of |Σ|: all rays lie on
    the side of its cone. Complete fans have no boundary walls.
    """
    if fan.dimension == 1:
        return
    for wall, cones in sorted(incidence.items()):
        if len(cones) != 1:
            continue
        apex = next(i for i in cones[0] if i not in wall)
        normal = Matrix([list(fan.rays[j]) for j in wall]).nullspace()[0]
        side = sum(normal[c] * fan.rays[apex][c] for c in range(fan.dimension))
        for i, ray in enumerate(fan.rays):
            value = sum(normal[c] * ray[c] for c in range(fan.dimension))
            if value * side < 0:
                raise NonConvexSupport(
                    f"Support of the fan is not convex: ray {i + 1} lies beyond "
                    f"boundary wall {[j + 1 for j in wall]}",
                    {'wall': [j + 1 for j in wall], 'ray': i + 1}
                )


def _wall_relation(fan: Fan, wall: Tuple[int, ...],
                   left: Tuple[int, ...], right: Tuple[int, ...]) -> Tuple[int, ...]:
    """Relation b_p + b_q + Σ_{j∈wall} d_j b_j = 0 normalized on the completing rays"""
    p = next(i for i in left if i not in wall)
    q = next(i for i in right if i not in wall)
    inverse = unimodular_inverse(fan, left)
    # b_q in the basis of the left cone
    coords = [sum(inverse[r][c] * fan.rays[q][c] for c in range(fan.dimension))
              for r in range(fan.dimension)]
    position = {ray: r for r, ray in enumerate(left)}
    if coords[position[p]] != -1:
        raise BadWallIncidence(
            f"Cones {[i + 1 for i in left]} and {[i + 1 for i in right]} "
            f"do not lie on opposite sides of their common wall",
            {'wall': [i + 1 for i in wall]}
        )
    degree = [0] * fan.m
    degree[p] = 1
    degree[q] = 1
    for j in wall:
        degree[j] = -coords[position[j]]
    return tuple(degree)


def wall_curve_classes(fan: Fan) -> List[WallClass]:
    """Curve classes of all interior walls, in wall order"""
    classes = []
    for wall, cones in sorted(_walls(fan).items()):
        if len(cones) != 2:
            continue
        left, right = cones
        classes.append(WallClass(
            degree=_wall_relation(fan, wall, left, right),
            wall=wall,
            cones=(left, right)
        ))
    return classes


def _support_function(fan: Fan, h: Sequence[Fraction]) -> Tuple[Tuple[Fraction, ...], ...]:
    """Linear functionals m_σ with m_σ(b_j) = h_j for j ∈ σ"""
    support = []
    for cone in fan.cones:
        rows = Matrix([list(fan.rays[j]) for j in cone])
        rhs = Matrix([h[j] for j in cone])
        solution = rows.LUsolve(rhs)
        support.append(tuple(Fraction(int(v.p), int(v.q)) for v in solution))
    return tuple(support)


def _check_strict_convexity(fan: Fan, walls: Sequence[WallClass],
                            support: Sequence[Sequence[Fraction]], h: Sequence[Fraction]):
    cone_index = {cone: i for i, cone in enumerate(fan.cones)}
    for wall in walls:
        left, right = wall.cones
        q = next(i for i in right if i not in wall.wall)
        m_left = support[cone_index[left]]
        slack = h[q] - sum((a * b for a, b in zip(m_left, fan.rays[q])), Fraction(0))
        if slack <= 0:
            raise NotProjective(
                f"Support function is not strictly convex across wall "
                f"{[i + 1 for i in wall.wall]}",
                {'wall': [i + 1 for i in wall.wall]}
            )


def validate_fan(fan: Fan, omega: Optional[Sequence] = None) -> ProjectivityCertificate:
    """
    Certify smoothness, primitivity and wall structure, then produce a strictly
    convex support function. A user-supplied omega only has to pair positively
    with every wall class.
    """
    _check_rays(fan)
    _check_cones(fan)
    _check_convex_support(fan, _walls(fan))
    walls = wall_curve_classes(fan)
    degrees = []
    for wall in walls:
        if wall.degree not in degrees:
            degrees.append(wall.degree)

    if omega is not None:
        h = [Fraction(v) for v in omega]
        if len(h) != fan.m:
            raise InvalidOmega(f"omega has {len(h)} entries, the fan has {fan.m} rays")
        for d in degrees:
            if sum((a * b for a, b in zip(h, d)), Fraction(0)) <= 0:
                raise InvalidOmega(
                    f"omega does not pair positively with wall class {list(d)}",
                    {'degree': list(d)}
                )
        source = 'user'
    else:
        anticanonical = [Fraction(1)] * fan.m
        if all(sum(d) >= 1 for d in degrees):
            h = anticanonical
            source = 'anticanonical'
        else:
            h = find_ample_vector(degrees, fan.m)
            if h is None:
                raise NotProjective("No strictly convex support function exists")
            source = 'linear-program'

    support = _support_function(fan, h)
    _check_strict_convexity(fan, walls, support, h)
    logger.info(
        f"Validated fan with {fan.m} rays and {len(fan.cones)} cones, "
        f"omega {[str(v) for v in h]} ({source})"
    )
    return ProjectivityCertificate(
        support=support,
        omega=tuple(h),
        wall_classes=tuple(walls),
        source=source
    )


def is_projective_space(fan: Fan) -> bool:
    """True for the fan of P^D: D+1 rays summing to zero, every D-subset a cone"""
    if fan.m != fan.dimension + 1:
        return False
    if any(sum(ray[c] for ray in fan.rays) != 0 for c in range(fan.dimension)):
        return False
    expected = {tuple(c) for c in combinations(range(fan.m), fan.dimension)}
    return set(fan.cones) == expected
