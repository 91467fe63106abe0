from fractions import Fraction
from typing import Any, Dict, Optional, Sequence
from modules import CommandHandlers


class MirrorHandlers(CommandHandlers):
    """Handlers for the Birkhoff factorization and its extracted data"""

    command = 'mirror'

    @classmethod
    def mirror(cls, fan_path, cutoff: Fraction, omega: Optional[Sequence[Fraction]] = None,
               use_cache: bool = True) -> Dict[str, Any]:
        return cls._execute(fan_path, lambda service: service.mirror(cutoff),
                            cutoff=cutoff, omega=omega, use_cache=use_cache)


class RelationHandlers(CommandHandlers):
    """Handlers for the projective-space quantum relation"""

    command = 'qcheck'

    @classmethod
    def qcheck(cls, fan_path, cutoff: Fraction, omega: Optional[Sequence[Fraction]] = None,
               use_cache: bool = True) -> Dict[str, Any]:
        return cls._execute(fan_path, lambda service: service.qcheck(cutoff),
                            cutoff=cutoff, omega=omega, use_cache=use_cache)
