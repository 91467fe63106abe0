from fractions import Fraction
from typing import Any, Dict, Optional, Sequence
from modules import CommandHandlers


class IFunctionHandlers(CommandHandlers):
    """Handlers for the stripped I-function"""

    command = 'ifun'

    @classmethod
    def ifun(cls, fan_path, cutoff: Fraction, omega: Optional[Sequence[Fraction]] = None,
             use_cache: bool = True) -> Dict[str, Any]:
        return cls._execute(fan_path, lambda service: service.ifun(cutoff),
                            cutoff=cutoff, omega=omega, use_cache=use_cache)


class FlowHandlers(CommandHandlers):
    """Handlers for flow-identity residuals"""

    command = 'flowcheck'

    @classmethod
    def flowcheck(cls, fan_path, cutoff: Fraction, omega: Optional[Sequence[Fraction]] = None,
                  use_cache: bool = True) -> Dict[str, Any]:
        """Single and pairwise flow residuals plus the classical shift identity"""
        return cls._execute(fan_path, lambda service: service.flowcheck(cutoff),
                            cutoff=cutoff, omega=omega, use_cache=use_cache)


class ShiftHandlers(CommandHandlers):
    """Handlers for shift factors and the composition law"""

    command = 'shift'

    @classmethod
    def shift(cls, fan_path, k: Optional[Sequence[int]] = None, l: Optional[Sequence[int]] = None,
              omega: Optional[Sequence[Fraction]] = None, use_cache: bool = True) -> Dict[str, Any]:
        """
        Shift factors for k (default: every e_i) and d(k, l) for the given pair,
        or for every pair (e_i, e_j) when no pair is given.
        """
        ks = [k] if k else None
        if k and l:
            pairs = [(k, l)]
            ks = [k, l]
        else:
            pairs = None
        return cls._execute(fan_path, lambda service: service.shift(ks, pairs),
                            omega=omega, use_cache=use_cache)
