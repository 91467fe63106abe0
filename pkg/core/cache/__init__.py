from .models import CACHE_VERSION, CacheEntry
from .store import SeriesCache

__all__ = ['CACHE_VERSION', 'CacheEntry', 'SeriesCache']
