from typing import Any, Dict, Optional, Sequence
from fractions import Fraction
from modules import CommandHandlers


class CheckHandlers(CommandHandlers):
    """Handlers for fan validation and fixed-point tables"""

    command = 'check'

    @classmethod
    def check_fan(
        cls,
        fan_path,
        omega: Optional[Sequence[Fraction]] = None,
        use_cache: bool = True
    ) -> Dict[str, Any]:
        """Validation verdicts, fixed-point restriction tables, wall classes and ω"""
        return cls._execute(fan_path, lambda service: service.check(),
                            omega=omega, use_cache=use_cache)
