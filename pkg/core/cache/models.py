"""
Cache entry model with serialization support
"""
import hashlib
import json
from dataclasses import dataclass, asdict
from datetime import datetime
from typing import Any, Dict, Optional, Sequence

# Bump to invalidate every stored result
CACHE_VERSION = 2


def cache_key(fan_hash: str, cutoff: str, omega: Optional[Sequence[str]], command: str,
              extra: Optional[Dict[str, Any]] = None) -> str:
    """Digest of everything a cached report depends on"""
    material = json.dumps({
        'fan': fan_hash,
        'cutoff': cutoff,
        'omega': list(omega) if omega is not None else None,
        'command': command,
        'extra': extra or {},
        'version': CACHE_VERSION,
    }, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(material.encode('utf-8')).hexdigest()


@dataclass
class CacheEntry:
    """A computed report body stored under its key"""
    key: str
    command: str
    payload: Dict[str, Any]
    version: int = CACHE_VERSION
    created_time: Optional[str] = None

    def __post_init__(self):
        if self.created_time is None:
            self.created_time = datetime.now().isoformat()

    def to_dict(self) -> Dict:
        """Convert to dictionary, excluding None values"""
        return {k: v for k, v in asdict(self).items() if v is not None}

    @classmethod
    def from_dict(cls, data: Dict) -> 'CacheEntry':
        """Create entry from dictionary"""
        return cls(
            key=data['key'],
            command=data['command'],
            payload=data['payload'],
            version=int(data['version']),
            created_time=data.get('created_time')
        )
