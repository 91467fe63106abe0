from fractions import Fraction
from typing import Optional, Sequence
from core.cache import SeriesCache
from core.logger import logger
from toric import Fan
from utils.file import FanFile
from .engine_service import EngineService


class ServiceFactory:
    """Factory for creating and configuring engine services"""

    @classmethod
    def create_engine_service(
        cls,
        fan_file: FanFile,
        omega: Optional[Sequence[Fraction]] = None,
        use_cache: bool = True
    ) -> EngineService:
        """Create an engine service for a parsed fan file; CLI omega overrides the file's"""
        try:
            fan = Fan.from_dict(fan_file.fan_data())
            cache = SeriesCache.get_instance() if use_cache else None
            return EngineService(
                fan,
                omega=omega if omega is not None else fan_file.omega,
                cache=cache
            )
        except Exception as e:
            logger.error(f"Failed to create engine service: {str(e)}")
            raise
