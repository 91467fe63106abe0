"""
Shift operators in the stripped gauge.

At a fixed point x the operator for a cocharacter k acts as
    (𝔖_k f)(x) = Δ_x(k) · (Qy)^{d_k(x)} · f(x)|_{λ → λ − z·k}
and the covariant derivative as
    (𝔇_i f)_d(x) = (u_i(x) + z·(u_i·d)) · f_d(x).
"""
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from algebra import NovikovSeries, RationalFunction
from algebra.novikov import Degree, degree_add
from core.errors import InconsistentComposition
from core.logger import logger
from toric import FixedPoint
from toric.cohomology import GlobalClass, LocalizedClass
from toric.model import ToricModel
from .ifunction import StrippedIFun, pochhammer_ratio


@dataclass(frozen=True)
class ShiftFactor:
    point: FixedPoint
    k: Degree
    offset: Degree
    factor: RationalFunction


@dataclass(frozen=True)
class StrippedShiftOp:
    k: Degree
    factors: Tuple[ShiftFactor, ...]


def delta(model: ToricModel, x: FixedPoint, k: Sequence[int]) -> ShiftFactor:
    """Δ_x(k) = Π_j Π_{c≤0}(u_j(x)+cz) / Π_{c≤−u_j(x)·k}(u_j(x)+cz) with offset d_k(x)"""
    k = tuple(k)
    factor = model.algebra.one
    for u, n in zip(x.weights, x.pairing(k)):
        if n:
            factor *= pochhammer_ratio(model.algebra, u, -n)
    return ShiftFactor(point=x, k=k, offset=model.section_degree(x, k), factor=factor)


def shift_operator(model: ToricModel, k: Sequence[int]) -> StrippedShiftOp:
    k = tuple(k)
    return StrippedShiftOp(k=k, factors=tuple(delta(model, x, k) for x in model.points))


def shift_apply(model: ToricModel, op: StrippedShiftOp, f: NovikovSeries) -> NovikovSeries:
    """Apply 𝔖_k to a series of localized classes"""
    algebra = model.algebra
    n = len(op.factors)
    result: Dict[Degree, List[RationalFunction]] = {}
    for d, c in f.items():
        for idx, sf in enumerate(op.factors):
            value = c[idx]
            if not value:
                continue
            target = degree_add(d, sf.offset)
            if f.weight(target) > f.cutoff:
                continue
            row = result.setdefault(target, [algebra.zero] * n)
            row[idx] += algebra.shift_lambda(value, op.k) * sf.factor
    return f.like({d: LocalizedClass(tuple(v)) for d, v in result.items()})


def covariant_derivative(model: ToricModel, i: int, f: NovikovSeries) -> NovikovSeries:
    """𝔇_i for a 0-based ray index"""
    z = model.algebra.z
    weights = [x.weights[i] for x in model.points]

    def apply(d, c):
        return LocalizedClass(tuple((w + z * d[i]) * v for w, v in zip(weights, c.values)))

    return f.map_items(apply)


def _series(f) -> NovikovSeries:
    return f.series if isinstance(f, StrippedIFun) else f


def flow_residual(model: ToricModel, i: int, ifun) -> NovikovSeries:
    """𝔇_i Ĩ − 𝔖_{e_i} Ĩ"""
    series = _series(ifun)
    lhs = covariant_derivative(model, i, series)
    rhs = shift_apply(model, shift_operator(model, model.unit_vector(i)), series)
    return lhs - rhs


def multi_flow_residual(model: ToricModel, indices: Sequence[int], ifun) -> NovikovSeries:
    """𝔇_{i1}⋯𝔇_{ia} Ĩ − 𝔖_{i1}⋯𝔖_{ia} Ĩ for pairwise distinct indices"""
    if len(set(indices)) != len(indices):
        raise ValueError(f"Indices {list(indices)} must be pairwise distinct")
    series = _series(ifun)
    lhs = series
    rhs = series
    for i in reversed(indices):
        lhs = covariant_derivative(model, i, lhs)
        rhs = shift_apply(model, shift_operator(model, model.unit_vector(i)), rhs)
    return lhs - rhs


def _composition_offset(model: ToricModel, k: Degree, l: Degree) -> Degree:
    kl = tuple(a + b for a, b in zip(k, l))
    offsets = set()
    for x in model.points:
        first = delta(model, x, k)
        second = delta(model, x, l)
        combined = delta(model, x, kl)
        product = first.factor * model.algebra.shift_lambda(second.factor, k)
        if product != combined.factor:
            raise InconsistentComposition(
                f"Shift factors for {list(k)} and {list(l)} do not compose at {x.label}",
                {'point': x.label}
            )
        offsets.add(tuple(
            a + b - c for a, b, c in zip(first.offset, second.offset, combined.offset)
        ))
    if len(offsets) != 1:
        raise InconsistentComposition(
            f"Composition of {list(k)} and {list(l)} has no common degree offset",
            {'offsets': sorted(list(o) for o in offsets)}
        )
    return offsets.pop()


def compose_check(model: ToricModel, k: Sequence[int], l: Sequence[int]) -> Degree:
    """d(k,l) with 𝔖_k∘𝔖_l = (Qy)^{d(k,l)}·𝔖_{k+l}, checked symmetric"""
    k, l = tuple(k), tuple(l)
    forward = _composition_offset(model, k, l)
    backward = _composition_offset(model, l, k)
    if forward != backward:
        raise InconsistentComposition(
            f"d(k,l) = {list(forward)} differs from d(l,k) = {list(backward)}"
        )
    logger.debug(f"Composition offset d({list(k)}, {list(l)}) = {list(forward)}")
    return forward


def classical_shift_residual(model: ToricModel, i: int, f: GlobalClass) -> LocalizedClass:
    """
    Degree-0 part of 𝔖_i(f) minus u_i·f|_{u_i → u_i − z, λ_i → λ_i − z},
    both restricted to the fixed points.
    """
    algebra = model.algebra
    cohomology = model.cohomology
    k = model.unit_vector(i)
    op = shift_operator(model, k)
    values = cohomology.restrict(f)

    lhs = []
    for idx, sf in enumerate(op.factors):
        if any(sf.offset):
            lhs.append(algebra.zero)
        else:
            lhs.append(sf.factor * algebra.shift_lambda(values[idx], k))

    rhs = []
    for x in model.points:
        total = algebra.zero
        for exponent, coeff in f.terms():
            term = algebra.shift_lambda(coeff, k)
            for j, power in enumerate(exponent):
                if power:
                    shifted = x.weights[j] - algebra.z if j == i else x.weights[j]
                    term *= shifted ** power
            total += term
        rhs.append(x.weights[i] * total)

    return LocalizedClass(tuple(a - b for a, b in zip(lhs, rhs)))
