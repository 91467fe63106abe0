"""
Two-tier cache of computed reports: in-memory LRU in front of JSON files
"""
import json
from pathlib import Path
from typing import Any, Dict, Optional
from cachetools import LRUCache
from core.config import env_config
from core.logger import logger
from utils.file import atomic_write_text
from .models import CACHE_VERSION, CacheEntry


class SeriesCache:
    """Report cache keyed by (fan hash, cutoff, omega, command, version)"""

    # Singleton instance
    _instance = None

    @classmethod
    def get_instance(cls) -> 'SeriesCache':
        """Get or create singleton instance"""
        if cls._instance is None:
            try:
                cls._instance = cls()
            except Exception as e:
                logger.error(f"Failed to create series cache: {str(e)}")
                raise
        return cls._instance

    def __init__(
        self,
        cache_dir: Optional[Path] = None,
        memory_slots: Optional[int] = None,
        enabled: Optional[bool] = None
    ):
        config = env_config.cache_config
        self.cache_dir = Path(cache_dir or config['cache_dir'])
        self.enabled = config['enabled'] if enabled is None else enabled
        self._memory: LRUCache = LRUCache(maxsize=memory_slots or config['memory_slots'])
        logger.debug(f"Initialized series cache at {self.cache_dir} (enabled={self.enabled})")

    def _path(self, key: str) -> Path:
        return self.cache_dir / f"{key}.json"

    def get(self, key: str) -> Optional[Dict[str, Any]]:
        """Cached payload or None; unreadable files count as misses"""
        if not self.enabled:
            return None
        entry = self._memory.get(key)
        if entry is not None:
            logger.debug(f"Memory cache hit for {key[:12]}")
            return entry.payload

        path = self._path(key)
        if not path.exists():
            return None
        try:
            entry = CacheEntry.from_dict(json.loads(path.read_text(encoding='utf-8')))
        except (OSError, ValueError, KeyError, TypeError) as e:
            logger.warning(f"Ignoring corrupt cache file {path.name}: {str(e)}")
            return None
        if entry.version != CACHE_VERSION or entry.key != key:
            logger.warning(f"Ignoring stale cache file {path.name} (version {entry.version})")
            return None

        self._memory[key] = entry
        logger.debug(f"Disk cache hit for {key[:12]}")
        return entry.payload

    def put(self, key: str, command: str, payload: Dict[str, Any]):
        """Store payload in memory and atomically on disk"""
        if not self.enabled:
            return
        entry = CacheEntry(key=key, command=command, payload=payload)
        self._memory[key] = entry
        try:
            atomic_write_text(
                self._path(key),
                json.dumps(entry.to_dict(), sort_keys=True, indent=1)
            )
        except OSError as e:
            logger.warning(f"Failed to write cache file for {key[:12]}: {str(e)}")
