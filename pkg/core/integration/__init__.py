from .engine_service import EngineService
from .service_factory import ServiceFactory

__all__ = ['EngineService', 'ServiceFactory']
