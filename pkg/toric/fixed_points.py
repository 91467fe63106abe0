"""
Torus fixed points, their restriction data, and the minimal weights of a cocharacter.
"""
from typing import List, Sequence

from algebra import ExactAlgebra
from core.errors import InvalidCocharacter, NoIsolatedMinimum
from . import Degree, Fan, FixedPoint
from .fan import unimodular_inverse


def restriction_matrix(fan: Fan, cone: Sequence[int]) -> List[List[int]]:
    """
    Integer matrix R with u_j(x) = Σ_k R_jk λ_k at the fixed point of the cone.

    Rays outside the cone restrict to zero; inside, v_σ = B_σ^{-1} Σ_{i∉σ} b_i λ_i
    and u_j = v_j + λ_j.
    """
    m = fan.m
    inverse = unimodular_inverse(fan, cone)
    R = [[0] * m for _ in range(m)]
    for pos, j in enumerate(cone):
        R[j][j] = 1
        for i in range(m):
            if i in cone:
                continue
            R[j][i] = sum(inverse[pos][c] * fan.rays[i][c] for c in range(fan.dimension))
    return R


def fixed_points(fan: Fan, algebra: ExactAlgebra) -> List[FixedPoint]:
    """One fixed point per maximal cone, ordered by sorted cone index sets"""
    points = []
    for index, cone in enumerate(sorted(fan.cones)):
        R = restriction_matrix(fan, cone)
        weights = tuple(algebra.linear_form(row) for row in R)
        euler = algebra.one
        for j in cone:
            euler *= weights[j]
        points.append(FixedPoint(
            index=index,
            cone=tuple(cone),
            restrictions=tuple(tuple(row) for row in R),
            weights=weights,
            euler_class=euler
        ))
    return points


def minimal_weights(points: Sequence[FixedPoint], k: Sequence[int]) -> Degree:
    """
    Weight vector (u_j(x*)·k)_j shared by every fixed point x* whose tangent
    weights pair non-negatively with k.
    """
    if any(v < 0 for v in k):
        raise InvalidCocharacter(
            f"Cocharacter {list(k)} must have non-negative entries", {'k': list(k)}
        )
    candidates = set()
    for point in points:
        pairing = point.pairing(k)
        if all(pairing[j] >= 0 for j in point.cone):
            candidates.add(pairing)
    if len(candidates) != 1:
        raise NoIsolatedMinimum(
            f"Cocharacter {list(k)} has "
            f"{'no' if not candidates else 'an inconsistent'} minimal fixed locus",
            {'k': list(k), 'candidates': sorted(list(c) for c in candidates)}
        )
    return next(iter(candidates))

