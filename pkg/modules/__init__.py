"""
Command handlers shared plumbing: lazy engine services and the report envelope
"""
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from core.errors import ToricShiftError
from core.integration import EngineService, ServiceFactory
from core.logger import logger
from utils import format_rational
from utils.file import load_fan_file


def report_passed(report: Dict[str, Any]) -> bool:
    """True when the command succeeded and every verdict holds"""
    return report.get('status') == 'ok' and all(report.get('verdicts', {}).values())


class CommandHandlers:
    """Base for per-command handlers"""

    command: str = ''

    # Shared service instances keyed by (fan path, omega, cache flag)
    _services: Dict[Tuple, EngineService] = {}

    @classmethod
    def _get_service(cls, fan_path, omega: Optional[Sequence[Fraction]],
                     use_cache: bool) -> EngineService:
        """Get or initialize service lazily"""
        key = (str(Path(fan_path).resolve()), tuple(omega) if omega else None, use_cache)
        if key not in CommandHandlers._services:
            fan_file = load_fan_file(fan_path)
            CommandHandlers._services[key] = ServiceFactory.create_engine_service(
                fan_file, omega=omega, use_cache=use_cache
            )
        return CommandHandlers._services[key]

    @classmethod
    def _execute(cls, fan_path, body: Callable[[EngineService], Dict[str, Any]],
                 cutoff: Optional[Fraction] = None,
                 omega: Optional[Sequence[Fraction]] = None,
                 use_cache: bool = True) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            'command': cls.command,
            'cutoff': format_rational(cutoff) if cutoff is not None else None,
        }
        try:
            service = cls._get_service(fan_path, omega, use_cache)
            report['fan_hash'] = service.fan_hash
            body_data = body(service)
            report['omega'] = [format_rational(v) for v in service.model.omega]
            report['results'] = body_data['results']
            report['verdicts'] = body_data['verdicts']
            report['status'] = 'ok'
            failed = [name for name, ok in body_data['verdicts'].items() if not ok]
            if failed:
                logger.warning(f"{cls.command}: failed verdicts {failed}")
        except ToricShiftError as e:
            logger.error(f"Failed to run {cls.command}: {e.message}")
            report['status'] = 'error'
            report['error'] = e.to_dict()
            report['verdicts'] = {}
        return report
