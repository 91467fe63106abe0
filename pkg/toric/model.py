"""
Validated toric model: fan, certificate, fixed points and cohomology in one place
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from algebra import ExactAlgebra, NovikovSeries
from core.errors import ArityMismatch, InvalidCocharacter
from core.logger import logger
from . import Degree, Fan, FixedPoint, ProjectivityCertificate
from .cohomology import CohomologyModel
from .fan import validate_fan
from .fixed_points import fixed_points, minimal_weights


class ToricModel:
    """Everything downstream computations need about one fan"""

    def __init__(self, fan: Fan, omega: Optional[Sequence] = None):
        self.fan = fan
        self.certificate: ProjectivityCertificate = validate_fan(fan, omega)
        self.algebra = ExactAlgebra(fan.m)
        self.points: Tuple[FixedPoint, ...] = tuple(fixed_points(fan, self.algebra))
        self.cohomology = CohomologyModel(fan, self.points, self.algebra)
        self._section_cache = {}
        logger.info(
            f"Built toric model: {len(self.points)} fixed points, "
            f"{len(self.curve_classes)} wall classes"
        )

    @property
    def m(self) -> int:
        return self.fan.m

    @property
    def omega(self) -> Tuple[Fraction, ...]:
        return self.certificate.omega

    @property
    def curve_classes(self) -> Tuple[Degree, ...]:
        return self.certificate.curve_classes()

    def series(self, cutoff, coeffs=None) -> NovikovSeries:
        """Empty (or filled) series with this model's grading"""
        return NovikovSeries(self.omega, cutoff, coeffs or {})

    def unit_vector(self, i: int) -> Tuple[int, ...]:
        """e_i for a 0-based ray index"""
        return tuple(1 if j == i else 0 for j in range(self.m))

    def validate_cocharacter(self, k: Sequence[int]) -> Tuple[int, ...]:
        """k as a tuple of m non-negative integers"""
        if len(k) != self.m:
            raise ArityMismatch(
                f"Cocharacter {list(k)} has length {len(k)}, the fan has {self.m} rays",
                {'k': list(k)}
            )
        if any(v < 0 for v in k):
            raise InvalidCocharacter(
                f"Cocharacter {list(k)} must have non-negative entries", {'k': list(k)}
            )
        return tuple(int(v) for v in k)

    def minimal_weights(self, k: Sequence[int]) -> Degree:
        key = self.validate_cocharacter(k)
        if key not in self._section_cache:
            self._section_cache[key] = minimal_weights(self.points, key)
        return self._section_cache[key]

    def section_degree(self, x: FixedPoint, k: Sequence[int]) -> Degree:
        reference = self.minimal_weights(k)
        return tuple(a - b for a, b in zip(reference, x.pairing(k)))

    def section_degrees(self, k: Sequence[int]) -> List[Degree]:
        return [self.section_degree(x, k) for x in self.points]
