"""
Equivariant cohomology in two representations: localized vectors over the
fixed points and normal forms in a monomial basis of u_1..u_m.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from sympy import Matrix

from algebra import ExactAlgebra, RationalFunction, matrix as mx
from core.errors import ArityMismatch, BasisIncomplete, NotGlobal
from core.logger import logger
from . import Fan, FixedPoint

Exponent = Tuple[int, ...]


@dataclass(frozen=True)
class LocalizedClass:
    """Values of a class at the fixed points, in fixed-point order"""
    values: Tuple[RationalFunction, ...]

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index: int) -> RationalFunction:
        return self.values[index]

    def __bool__(self) -> bool:
        return any(bool(v) for v in self.values)

    def _check(self, other: 'LocalizedClass'):
        if len(other.values) != len(self.values):
            raise ArityMismatch(
                f"Localized classes over {len(self.values)} and {len(other.values)} points"
            )

    def __add__(self, other: 'LocalizedClass') -> 'LocalizedClass':
        self._check(other)
        return LocalizedClass(tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: 'LocalizedClass') -> 'LocalizedClass':
        self._check(other)
        return LocalizedClass(tuple(a - b for a, b in zip(self.values, other.values)))

    def __neg__(self) -> 'LocalizedClass':
        return LocalizedClass(tuple(-a for a in self.values))

    def __mul__(self, other: 'LocalizedClass') -> 'LocalizedClass':
        if isinstance(other, LocalizedClass):
            self._check(other)
            return LocalizedClass(tuple(a * b for a, b in zip(self.values, other.values)))
        return self.scale(other)

    def scale(self, factor) -> 'LocalizedClass':
        return LocalizedClass(tuple(a * factor for a in self.values))

    def map(self, fn) -> 'LocalizedClass':
        return LocalizedClass(tuple(fn(a) for a in self.values))


@dataclass(frozen=True)
class GlobalClass:
    """Σ_a coeffs[a]·u^a over the normal-form basis"""
    basis: Tuple[Exponent, ...]
    coeffs: Tuple[RationalFunction, ...]

    def __bool__(self) -> bool:
        return any(bool(c) for c in self.coeffs)

    def _check(self, other: 'GlobalClass'):
        if other.basis != self.basis:
            raise ArityMismatch("Global classes use different normal-form bases")

    def __add__(self, other: 'GlobalClass') -> 'GlobalClass':
        self._check(other)
        return GlobalClass(self.basis, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: 'GlobalClass') -> 'GlobalClass':
        self._check(other)
        return GlobalClass(self.basis, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> 'GlobalClass':
        return GlobalClass(self.basis, tuple(-a for a in self.coeffs))

    def scale(self, factor) -> 'GlobalClass':
        return GlobalClass(self.basis, tuple(a * factor for a in self.coeffs))

    def map(self, fn) -> 'GlobalClass':
        return GlobalClass(self.basis, tuple(fn(a) for a in self.coeffs))

    def terms(self) -> List[Tuple[Exponent, RationalFunction]]:
        return [(a, c) for a, c in zip(self.basis, self.coeffs) if c]


def monomial_name(exponent: Exponent) -> str:
    parts = []
    for i, power in enumerate(exponent, start=1):
        if power == 1:
            parts.append(f"u{i}")
        elif power > 1:
            parts.append(f"u{i}^{power}")
    return '*'.join(parts) if parts else '1'


def _monomials(m: int, degree: int) -> List[Exponent]:
    """Degree-t exponents: squarefree first in lex order, then the rest in descending lex"""
    squarefree = []
    for support in combinations(range(m), degree):
        exponent = [0] * m
        for i in support:
            exponent[i] = 1
        squarefree.append(tuple(exponent))

    def compositions(total: int, parts: int):
        if parts == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    others = [a for a in compositions(degree, m) if max(a, default=0) > 1]
    return squarefree + others


def _is_face(fan: Fan, support: Sequence[int]) -> bool:
    return any(all(i in cone for i in support) for cone in fan.cones)


def _ideal_rows(fan: Fan, degree: int, index: Dict[Exponent, int]) -> List[List[int]]:
    """Degree-t part of the Stanley-Reisner plus linear ideal, in monomial coordinates"""
    m = fan.m
    width = len(index)
    rows = []
    for exponent, col in index.items():
        support = [i for i, a in enumerate(exponent) if a]
        if not _is_face(fan, support):
            row = [0] * width
            row[col] = 1
            rows.append(row)
    if degree >= 1:
        for c in range(fan.dimension):
            for lower in _monomials(m, degree - 1):
                row = [0] * width
                for i in range(m):
                    coeff = fan.rays[i][c]
                    if coeff:
                        raised = tuple(a + (1 if j == i else 0) for j, a in enumerate(lower))
                        row[index[raised]] += coeff
                if any(row):
                    rows.append(row)
    return rows


def _rank(rows: List[List[int]]) -> int:
    return Matrix(rows).rank() if rows else 0


def basis_select(fan: Fan, points: Sequence[FixedPoint]) -> List[Exponent]:
    """
    Greedy monomial basis by total degree. A monomial joins when it is
    independent in ordinary cohomology QQ[u]/(SR + linear) of the chosen ones,
    so the result is a QQ[λ]-module basis of the equivariant cohomology.
    """
    target = len(points)
    chosen: List[Exponent] = []
    for degree in range(fan.dimension + 1):
        monomials = _monomials(fan.m, degree)
        index = {a: col for col, a in enumerate(monomials)}
        rows = _ideal_rows(fan, degree, index)
        rank = _rank(rows)
        for exponent in monomials:
            if len(chosen) == target:
                break
            unit = [0] * len(monomials)
            unit[index[exponent]] = 1
            new_rank = _rank(rows + [unit])
            if new_rank > rank:
                rows.append(unit)
                rank = new_rank
                chosen.append(exponent)
        if len(chosen) == target:
            break
    if len(chosen) != target:
        raise BasisIncomplete(
            f"Found {len(chosen)} basis monomials for {target} fixed points",
            {'basis': [monomial_name(a) for a in chosen]}
        )
    return chosen


class CohomologyModel:
    """Conversion between localized vectors and normal forms"""

    def __init__(self, fan: Fan, points: Sequence[FixedPoint], algebra: ExactAlgebra):
        self.fan = fan
        self.points = tuple(points)
        self.algebra = algebra
        self.basis: Tuple[Exponent, ...] = tuple(basis_select(fan, points))
        self._rows = [
            [self.monomial_at(point, a) for a in self.basis] for point in self.points
        ]
        self.restriction_matrix = mx.from_rows(self._rows, algebra.domain)
        if self.restriction_matrix.det() == algebra.zero:
            raise BasisIncomplete("Restriction matrix of the basis is singular")
        self.restriction_inverse = self.restriction_matrix.inv()
        self._inverse_rows = mx.rows(self.restriction_inverse)
        logger.debug(f"Cohomology basis: {[monomial_name(a) for a in self.basis]}")

    @property
    def size(self) -> int:
        return len(self.points)

    def monomial_at(self, point: FixedPoint, exponent: Sequence[int]) -> RationalFunction:
        value = self.algebra.one
        for j, power in enumerate(exponent):
            if power:
                value *= point.weights[j] ** power
        return value

    def monomial_values(self, exponent: Sequence[int]) -> LocalizedClass:
        return LocalizedClass(tuple(self.monomial_at(p, exponent) for p in self.points))

    def constant(self, value) -> LocalizedClass:
        value = self.algebra.convert(value)
        return LocalizedClass((value,) * self.size)

    def divisor(self, i: int) -> LocalizedClass:
        """Restriction of u_i for a 0-based ray index"""
        return LocalizedClass(tuple(p.weights[i] for p in self.points))

    def one_global(self) -> GlobalClass:
        return GlobalClass(self.basis, (self.algebra.one,) + (self.algebra.zero,) * (len(self.basis) - 1))

    def restrict(self, c: GlobalClass) -> LocalizedClass:
        """Substitute u_j ↦ u_j(x) at every fixed point"""
        if c.basis != self.basis:
            raise ArityMismatch("Global class uses a different normal-form basis")
        values = []
        for row in self._rows:
            total = self.algebra.zero
            for coeff, value in zip(c.coeffs, row):
                if coeff:
                    total += coeff * value
            values.append(total)
        return LocalizedClass(tuple(values))

    def interpolate(self, v: LocalizedClass) -> GlobalClass:
        """Solve P0·c = v and confirm the restriction reproduces v"""
        if len(v) != self.size:
            raise NotGlobal(
                f"Localized vector has {len(v)} entries for {self.size} fixed points"
            )
        coeffs = []
        for row in self._inverse_rows:
            total = self.algebra.zero
            for a, b in zip(row, v.values):
                if a and b:
                    total += a * b
            coeffs.append(total)
        result = GlobalClass(self.basis, tuple(coeffs))
        if self.restrict(result) != v:
            raise NotGlobal("Localized vector is not in the image of restriction")
        return result

    def polynomial(self, terms: Dict[Exponent, RationalFunction]) -> GlobalClass:
        """Normal form of Σ coeff·u^a for arbitrary exponents"""
        total = LocalizedClass((self.algebra.zero,) * self.size)
        for exponent, coeff in terms.items():
            total = total + self.monomial_values(exponent).scale(self.algebra.convert(coeff))
        return self.interpolate(total)

    def integrate(self, v: LocalizedClass) -> RationalFunction:
        """Σ_x v(x)/e(x)"""
        total = self.algebra.zero
        for value, point in zip(v.values, self.points):
            if value:
                total += value / point.euler_class
        return total

    def pairing(self, a, b) -> RationalFunction:
        """Equivariant Poincaré pairing of global or localized classes"""
        if isinstance(a, GlobalClass):
            a = self.restrict(a)
        if isinstance(b, GlobalClass):
            b = self.restrict(b)
        return self.integrate(a * b)

    def stanley_reisner_violations(self) -> List[Tuple[int, ...]]:
        """Minimal non-faces whose monomial fails to restrict to zero"""
        violations = []
        for size in range(1, self.fan.dimension + 2):
            for support in combinations(range(self.fan.m), size):
                if _is_face(self.fan, support):
                    continue
                if any(not _is_face(self.fan, sub) for sub in combinations(support, size - 1) if sub):
                    continue
                exponent = tuple(1 if i in support else 0 for i in range(self.fan.m))
                if self.monomial_values(exponent):
                    violations.append(tuple(i + 1 for i in support))
        return violations

    def linear_relation_violations(self) -> List[int]:
        """Characters χ = e_c for which Σ_i χ(b_i)(u_i − λ_i) fails to restrict to zero"""
        violations = []
        for c in range(self.fan.dimension):
            for point in self.points:
                total = self.algebra.zero
                for i in range(self.fan.m):
                    coeff = self.fan.rays[i][c]
                    if coeff:
                        total += coeff * (point.weights[i] - self.algebra.lam(i + 1))
                if total:
                    violations.append(c + 1)
                    break
        return violations

    def render(self, c: GlobalClass) -> Dict[str, str]:
        return {monomial_name(a): str(coeff) for a, coeff in c.terms()}
