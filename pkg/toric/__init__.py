"""
Toric geometry data: fans, fixed points, wall curve classes and
projectivity certificates.
"""
import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.errors import ArityMismatch, FanParseError

Degree = Tuple[int, ...]


@dataclass(frozen=True)
class Fan:
    """Smooth fan given by primitive rays b_1..b_m and maximal cones (0-based)"""
    dimension: int
    rays: Tuple[Tuple[int, ...], ...]
    cones: Tuple[Tuple[int, ...], ...]
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.dimension < 1:
            raise FanParseError(f"Fan dimension must be positive, got {self.dimension}")
        rays = tuple(tuple(int(v) for v in ray) for ray in self.rays)
        cones = tuple(sorted(tuple(sorted(int(i) for i in cone)) for cone in self.cones))
        for idx, ray in enumerate(rays, start=1):
            if len(ray) != self.dimension:
                raise FanParseError(
                    f"Ray {idx} has {len(ray)} entries, expected {self.dimension}"
                )
        if not cones:
            raise FanParseError("Fan has no maximal cones")
        for cone in cones:
            if len(set(cone)) != len(cone):
                raise FanParseError(f"Cone {[i + 1 for i in cone]} repeats a ray")
            for i in cone:
                if not 0 <= i < len(rays):
                    raise FanParseError(f"Cone refers to unknown ray {i + 1}")
        if len(set(cones)) != len(cones):
            raise FanParseError("Fan lists the same maximal cone twice")
        if self.labels is not None and len(self.labels) != len(rays):
            raise FanParseError("Number of labels does not match number of rays")
        object.__setattr__(self, 'rays', rays)
        object.__setattr__(self, 'cones', cones)
        if self.labels is not None:
            object.__setattr__(self, 'labels', tuple(str(s) for s in self.labels))

    @property
    def m(self) -> int:
        return len(self.rays)

    def ray_label(self, i: int) -> str:
        """Display label of a 0-based ray index"""
        if self.labels:
            return self.labels[i]
        return f"u{i + 1}"

    def to_dict(self) -> Dict[str, Any]:
        """Fan-file representation with 1-based cone indices"""
        data = {
            'dimension': self.dimension,
            'rays': [list(ray) for ray in self.rays],
            'cones': [[i + 1 for i in cone] for cone in self.cones],
        }
        if self.labels:
            data['labels'] = list(self.labels)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Fan':
        """Create fan from fan-file data with 1-based cone indices"""
        try:
            cones = [[int(i) - 1 for i in cone] for cone in data['cones']]
            labels = data.get('labels')
            return cls(
                dimension=int(data['dimension']),
                rays=tuple(tuple(ray) for ray in data['rays']),
                cones=tuple(tuple(cone) for cone in cones),
                labels=tuple(labels) if labels else None
            )
        except KeyError as e:
            raise FanParseError(f"Fan file is missing field {e}")
        except (TypeError, ValueError) as e:
            raise FanParseError(f"Malformed fan data: {str(e)}")

    def fan_hash(self) -> str:
        """Stable digest of the geometric data"""
        payload = json.dumps(
            {'dimension': self.dimension, 'rays': self.rays, 'cones': self.cones},
            sort_keys=True, separators=(',', ':')
        )
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()


@dataclass(frozen=True)
class WallClass:
    """Curve class of an interior wall together with its two flanking cones"""
    degree: Degree
    wall: Tuple[int, ...]
    cones: Tuple[Tuple[int, ...], Tuple[int, ...]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            'degree': list(self.degree),
            'wall': [i + 1 for i in self.wall],
            'cones': [[i + 1 for i in cone] for cone in self.cones],
        }


@dataclass(frozen=True)
class ProjectivityCertificate:
    """Strictly convex support function and the grading vector it induces"""
    support: Tuple[Tuple[Fraction, ...], ...]
    omega: Tuple[Fraction, ...]
    wall_classes: Tuple[WallClass, ...]
    source: str = 'anticanonical'

    def curve_classes(self) -> Tuple[Degree, ...]:
        """
        Irreducible wall classes in first-seen order: classes that are sums of
        other wall classes are dropped, the spanned semigroup is unchanged.
        """
        seen: List[Degree] = []
        for wall in self.wall_classes:
            if wall.degree not in seen:
                seen.append(wall.degree)
        return tuple(
            d for d in seen
            if not self._decomposes(d, [g for g in seen if g != d], depth=0)
        )

    def _decomposes(self, target: Degree, generators: Sequence[Degree], depth: int) -> bool:
        """target = g + (element of the semigroup of generators), g a generator"""
        for g in generators:
            rest = tuple(a - b for a, b in zip(target, g))
            if not any(rest):
                return depth > 0
            if self.grading(rest) > 0 and self._decomposes(rest, generators, depth + 1):
                return True
        return False

    def grading(self, degree: Sequence[int]) -> Fraction:
        return sum((w * d for w, d in zip(self.omega, degree)), Fraction(0))


@dataclass(frozen=True)
class FixedPoint:
    """Torus fixed point of a maximal cone with restrictions u_j(x) = Σ_k R_jk λ_k"""
    index: int
    cone: Tuple[int, ...]
    restrictions: Tuple[Tuple[int, ...], ...]
    weights: Tuple[Any, ...] = field(compare=False)
    euler_class: Any = field(compare=False)

    @property
    def label(self) -> str:
        return 'x[' + ','.join(str(i + 1) for i in self.cone) + ']'

    @property
    def tangent_weights(self) -> frozenset:
        """Characters u_j(x), j in the cone, of the tangent space at x"""
        return frozenset(self.weights[j] for j in self.cone)

    def pairing(self, k: Sequence[int]) -> Degree:
        """(u_j(x)·k)_j for a cocharacter k"""
        if len(k) != len(self.restrictions):
            raise ArityMismatch(
                f"Cocharacter {list(k)} has length {len(k)}, expected {len(self.restrictions)}",
                {'k': list(k)}
            )
        return tuple(sum(r * kk for r, kk in zip(row, k)) for row in self.restrictions)

    def restriction_table(self) -> List[List[int]]:
        return [list(row) for row in self.restrictions]
