"""
Error hierarchy with stable machine-readable codes
"""
from typing import Any, Dict, Optional


class ToricShiftError(Exception):
    """Base class for every error surfaced by the engine"""

    code = 'TORICSHIFT_ERROR'

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def to_dict(self) -> Dict[str, Any]:
        """Convert error to report dictionary, excluding empty details"""
        result = {'code': self.code, 'message': self.message}
        if self.details:
            result['details'] = self.details
        return result


# exact_algebra
class ArityMismatch(ToricShiftError):
    code = 'ARITY_MISMATCH'


class ZeroDivisionPolynomial(ToricShiftError):
    code = 'DIVISION_BY_ZERO'


class NotProper(ToricShiftError):
    code = 'NOT_PROPER'


class GradingMismatch(ToricShiftError):
    code = 'GRADING_MISMATCH'


# toric_geometry
class NotSimplicial(ToricShiftError):
    code = 'NOT_SIMPLICIAL'


class NotSmooth(ToricShiftError):
    code = 'NOT_SMOOTH'


class NonPrimitiveRay(ToricShiftError):
    code = 'NON_PRIMITIVE_RAY'


class BadWallIncidence(ToricShiftError):
    code = 'BAD_WALL_INCIDENCE'


class NotProjective(ToricShiftError):
    code = 'NOT_PROJECTIVE'


class NonConvexSupport(ToricShiftError):
    code = 'NON_CONVEX_SUPPORT'


class InvalidOmega(ToricShiftError):
    code = 'INVALID_OMEGA'


class NoIsolatedMinimum(ToricShiftError):
    code = 'NO_ISOLATED_MINIMUM'


class InvalidCocharacter(ToricShiftError):
    code = 'INVALID_COCHARACTER'


# cohomology_model
class BasisIncomplete(ToricShiftError):
    code = 'BASIS_INCOMPLETE'


class NotGlobal(ToricShiftError):
    code = 'NOT_GLOBAL'


# i_function / shift_operators
class ZeroDenominator(ToricShiftError):
    code = 'ZERO_DENOMINATOR'


class InconsistentComposition(ToricShiftError):
    code = 'INCONSISTENT_COMPOSITION'


# mirror_engine
class SingularFrame(ToricShiftError):
    code = 'SINGULAR_FRAME'


class NonPolynomialUpsilon(ToricShiftError):
    code = 'NON_POLYNOMIAL_UPSILON'


class ZDependentConnection(ToricShiftError):
    code = 'Z_DEPENDENT_CONNECTION'


class NotProjectiveSpace(ToricShiftError):
    code = 'NOT_PROJECTIVE_SPACE'


# cli_and_persistence
class FanParseError(ToricShiftError):
    code = 'PARSE_ERROR'

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        details = {}
        if line is not None:
            details['line'] = line
        if column is not None:
            details['column'] = column
        super().__init__(message, details)
        self.line = line
        self.column = column
