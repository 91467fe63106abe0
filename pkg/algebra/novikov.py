"""
Truncated Novikov series graded by an ample vector ω.

Degrees are pairing vectors (u_1·d, ..., u_m·d) stored as integer tuples;
the fused monomial (Qy)^d is implicit in the key.
"""
from fractions import Fraction
from typing import Callable, Dict, Iterator, Mapping, Optional, Sequence, Tuple
from sympy.polys.matrices import DomainMatrix

from core.errors import ArityMismatch, GradingMismatch
from . import matrix as mx

Degree = Tuple[int, ...]


def is_zero_coefficient(c) -> bool:
    """Zero test for every coefficient type the series carry"""
    if c is None:
        return True
    if isinstance(c, DomainMatrix):
        return mx.is_zero(c)
    return not c


def degree_add(a: Sequence[int], b: Sequence[int]) -> Degree:
    return tuple(x + y for x, y in zip(a, b))


def degree_sub(a: Sequence[int], b: Sequence[int]) -> Degree:
    return tuple(x - y for x, y in zip(a, b))


class NovikovSeries:
    """
    Σ_d c_d (Qy)^d over degrees with ω·d ≤ cutoff.

    Instances are immutable. Coefficients may be rational functions,
    localized or global classes, or DomainMatrix objects; they only need
    +, * and unary minus.
    """

    __slots__ = ('omega', 'cutoff', '_coeffs')

    def __init__(self, omega: Sequence, cutoff, coeffs: Optional[Mapping[Sequence[int], object]] = None):
        self.omega = tuple(Fraction(w) for w in omega)
        self.cutoff = Fraction(cutoff)
        store: Dict[Degree, object] = {}
        for degree, c in (coeffs or {}).items():
            degree = tuple(int(v) for v in degree)
            if len(degree) != len(self.omega):
                raise ArityMismatch(
                    f"Degree {degree} has length {len(degree)}, grading has {len(self.omega)}"
                )
            value = self.weight(degree)
            if any(degree) and value <= 0:
                raise GradingMismatch(
                    f"Degree {degree} has non-positive grading {value}",
                    {'degree': list(degree)}
                )
            if value > self.cutoff or is_zero_coefficient(c):
                continue
            store[degree] = c
        self._coeffs = store

    @property
    def zero_degree(self) -> Degree:
        return (0,) * len(self.omega)

    def weight(self, degree: Sequence[int]) -> Fraction:
        return sum((w * d for w, d in zip(self.omega, degree)), Fraction(0))

    def sort_key(self, degree: Degree):
        return (self.weight(degree), degree)

    def degrees(self) -> Tuple[Degree, ...]:
        """Stored degrees in (ω-value, lex) order"""
        return tuple(sorted(self._coeffs, key=self.sort_key))

    def items(self) -> Iterator[Tuple[Degree, object]]:
        for degree in self.degrees():
            yield degree, self._coeffs[degree]

    def coefficient(self, degree: Sequence[int], default=None):
        return self._coeffs.get(tuple(degree), default)

    def __contains__(self, degree) -> bool:
        return tuple(degree) in self._coeffs

    def __len__(self) -> int:
        return len(self._coeffs)

    def __repr__(self) -> str:
        return f"NovikovSeries(cutoff={self.cutoff}, degrees={list(self.degrees())})"

    def is_zero(self) -> bool:
        return not self._coeffs

    def like(self, coeffs: Mapping[Degree, object], cutoff=None) -> 'NovikovSeries':
        """New series with the same grading"""
        return NovikovSeries(self.omega, self.cutoff if cutoff is None else cutoff, coeffs)

    # --- ring operations ---

    def __add__(self, other: 'NovikovSeries') -> 'NovikovSeries':
        return nov_combine(self, other, 'add')

    def __sub__(self, other: 'NovikovSeries') -> 'NovikovSeries':
        return nov_combine(self, -other, 'add')

    def __mul__(self, other: 'NovikovSeries') -> 'NovikovSeries':
        return nov_combine(self, other, 'mul')

    def __neg__(self) -> 'NovikovSeries':
        return self.map(lambda c: -c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, NovikovSeries):
            return NotImplemented
        return (self.omega == other.omega and self.cutoff == other.cutoff
                and (self - other).is_zero())

    __hash__ = None

    def truncate(self, cutoff) -> 'NovikovSeries':
        cutoff = min(Fraction(cutoff), self.cutoff)
        return NovikovSeries(self.omega, cutoff, self._coeffs)

    def map(self, fn: Callable[[object], object]) -> 'NovikovSeries':
        """Apply fn to every coefficient"""
        return self.like({d: fn(c) for d, c in self._coeffs.items()})

    def map_items(self, fn: Callable[[Degree, object], object]) -> 'NovikovSeries':
        """Apply fn(degree, coefficient) to every coefficient"""
        return self.like({d: fn(d, c) for d, c in self._coeffs.items()})

    def raise_degree(self, offset: Sequence[int]) -> 'NovikovSeries':
        """Multiply by (Qy)^offset and truncate"""
        offset = tuple(offset)
        return self.like({degree_add(d, offset): c for d, c in self._coeffs.items()})

    def degree_closure(self) -> Tuple[Degree, ...]:
        """All sums of stored degrees within the cutoff, in (ω, lex) order"""
        steps = [d for d in self._coeffs if any(d)]
        seen = {self.zero_degree}
        frontier = [self.zero_degree]
        while frontier:
            next_frontier = []
            for base in frontier:
                for step in steps:
                    candidate = degree_add(base, step)
                    if candidate in seen or self.weight(candidate) > self.cutoff:
                        continue
                    seen.add(candidate)
                    next_frontier.append(candidate)
            frontier = next_frontier
        return tuple(sorted(seen, key=self.sort_key))


def nov_combine(a: NovikovSeries, b: NovikovSeries, op: str) -> NovikovSeries:
    """Truncated add or Cauchy product; the result keeps the smaller cutoff"""
    if a.omega != b.omega:
        raise GradingMismatch(
            "Novikov series carry different gradings",
            {'left': [str(w) for w in a.omega], 'right': [str(w) for w in b.omega]}
        )
    cutoff = min(a.cutoff, b.cutoff)
    result: Dict[Degree, object] = {}

    if op == 'add':
        for source in (a, b):
            for degree, c in source._coeffs.items():
                if source.weight(degree) > cutoff:
                    continue
                result[degree] = result[degree] + c if degree in result else c
    elif op == 'mul':
        for d1, c1 in a._coeffs.items():
            w1 = a.weight(d1)
            if w1 > cutoff:
                continue
            for d2, c2 in b._coeffs.items():
                if w1 + b.weight(d2) > cutoff:
                    continue
                degree = degree_add(d1, d2)
                term = c1 * c2
                result[degree] = result[degree] + term if degree in result else term
    else:
        raise ValueError(f"Unsupported series operation: {op}")

    return NovikovSeries(a.omega, cutoff, result)

