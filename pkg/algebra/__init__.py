"""
Exact arithmetic kernel: rational functions in λ and z, DomainMatrix helpers
and truncated Novikov series.
"""
from .rational import ExactAlgebra, RationalFunction, Poly
from .novikov import Degree, NovikovSeries, nov_combine, is_zero_coefficient
from . import matrix

__all__ = [
    'ExactAlgebra',
    'RationalFunction',
    'Poly',
    'Degree',
    'NovikovSeries',
    'nov_combine',
    'is_zero_coefficient',
    'matrix',
]
