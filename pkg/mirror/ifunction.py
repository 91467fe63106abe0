"""
Equivariant I-function with the prefactor z·exp(Σ u_i log y_i / z) stripped
and Q^d y^d fused into (Qy)^d.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence

from algebra import ExactAlgebra, NovikovSeries, RationalFunction
from algebra.novikov import Degree, degree_add
from core.errors import ZeroDenominator
from core.logger import logger
from toric import FixedPoint
from toric.cohomology import LocalizedClass
from toric.model import ToricModel

GAUGE_MARKER = 'z*exp(sum_i u_i*log(y_i)/z); Q^d*y^d -> (Qy)^d'


def pochhammer_ratio(algebra: ExactAlgebra, u: RationalFunction, n: int) -> RationalFunction:
    """Π_{c≤0}(u + cz) / Π_{c≤n}(u + cz), telescoped to finitely many factors"""
    z = algebra.z
    if n > 0:
        den = algebra.one
        for c in range(1, n + 1):
            den *= u + c * z
        if not den:
            raise ZeroDenominator(f"Factor u + cz vanishes identically for u = {u}")
        return algebra.one / den
    if n < 0:
        num = algebra.one
        for c in range(n + 1, 1):
            num *= u + c * z
        return num
    return algebra.one


def ifun_coeff(model: ToricModel, d: Sequence[int], x: FixedPoint) -> RationalFunction:
    """Restriction of the degree-d I-function coefficient to the fixed point x"""
    value = model.algebra.one
    for u, n in zip(x.weights, d):
        if n:
            value *= pochhammer_ratio(model.algebra, u, n)
            if not value:
                break
    return value


def effective_degrees(curve_classes: Sequence[Sequence[int]], omega: Sequence[Fraction],
                      cutoff) -> List[Degree]:
    """Non-negative integer combinations of wall classes with ω·d ≤ cutoff, in (ω, lex) order"""
    cutoff = Fraction(cutoff)
    m = len(omega)

    def weight(d):
        return sum((Fraction(w) * v for w, v in zip(omega, d)), Fraction(0))

    zero = (0,) * m
    seen = {zero}
    frontier = [zero]
    steps = [tuple(c) for c in curve_classes]
    while frontier:
        next_frontier = []
        for base in frontier:
            for step in steps:
                candidate = degree_add(base, step)
                if candidate not in seen and weight(candidate) <= cutoff:
                    seen.add(candidate)
                    next_frontier.append(candidate)
        frontier = next_frontier
    return sorted(seen, key=lambda d: (weight(d), d))


@dataclass(frozen=True)
class StrippedIFun:
    """Ĩ as a Novikov series of localized classes"""
    series: NovikovSeries
    degrees: tuple
    gauge: str = GAUGE_MARKER

    @property
    def cutoff(self) -> Fraction:
        return self.series.cutoff

    def coefficient(self, d: Sequence[int]) -> LocalizedClass:
        return self.series.coefficient(d)


def ifun_values(model: ToricModel, d: Sequence[int]) -> LocalizedClass:
    """Coefficient vector over all fixed points for any degree d"""
    return LocalizedClass(tuple(ifun_coeff(model, d, x) for x in model.points))


def ifun_series(model: ToricModel, cutoff) -> StrippedIFun:
    """Fill Ĩ over every effective degree within the cutoff"""
    degrees = effective_degrees(model.curve_classes, model.omega, cutoff)
    coeffs = {}
    for d in degrees:
        coeffs[d] = ifun_values(model, d)
    series = model.series(cutoff, coeffs)
    logger.info(f"I-function filled over {len(degrees)} degrees at cutoff {cutoff}")
    return StrippedIFun(series=series, degrees=tuple(degrees))
