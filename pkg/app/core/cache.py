"""Cache backends for enumeration results.

Provides two implementations with an identical interface:
- MemoryCache: in-process, thread-safe (default fallback)
- JsonFileCache: one JSON file per key under a directory

get_enumeration_cache() selects JsonFileCache when MONODROMY_ATLAS_CACHE is
set and writable, else MemoryCache.
"""

import json
import logging
import threading
from pathlib import Path
from typing import Any

logger = logging.getLogger(__name__)


class MemoryCache:
    """Thread-safe in-memory cache. Values are kept for the life of the process."""

    def __init__(self, max_size: int = 64):
        self._store: dict[str, Any] = {}
        self._lock = threading.Lock()
        self._max_size = max_size

    def get(self, key: str) -> Any | None:
        """Return cached value or None if missing."""
        with self._lock:
            return self._store.get(key)

    def set(self, key: str, value: Any) -> None:
        """Store value. Evicts the oldest insertion if at max_size."""
        with self._lock:
            if len(self._store) >= self._max_size and key not in self._store:
                oldest = next(iter(self._store))
                del self._store[oldest]
            self._store[key] = value

    def delete(self, key: str) -> None:
        """Remove a key from the cache."""
        with self._lock:
            self._store.pop(key, None)

    def clear(self) -> None:
        """Clear all entries."""
        with self._lock:
            self._store.clear()

    @property
    def size(self) -> int:
        with self._lock:
            return len(self._store)


class JsonFileCache:
    """
    Directory-backed cache with JSON serialization.

    Same interface as MemoryCache so callers work unchanged.
    """

    def __init__(self, directory: str | Path):
        self._dir = Path(directory)
        self._dir.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _path(self, key: str) -> Path:
        return self._dir / f"{key}.json"

    def get(self, key: str) -> Any | None:
        """Return cached value (deserialized from JSON) or None."""
        path = self._path(key)
        if not path.exists():
            return None
        try:
            return json.loads(path.read_text(encoding="utf-8"))
        except (json.JSONDecodeError, UnicodeDecodeError):
            logger.warning("Cache: corrupt file for key=%s, deleting", key)
            path.unlink(missing_ok=True)
            return None

    def set(self, key: str, value: Any) -> None:
        """Store value as JSON, replacing the file atomically."""
        path = self._path(key)
        tmp = path.with_suffix(".json.tmp")
        with self._lock:
            tmp.write_text(json.dumps(value, sort_keys=True), encoding="utf-8")
            tmp.replace(path)

    def delete(self, key: str) -> None:
        """Remove a key from the cache."""
        self._path(key).unlink(missing_ok=True)

    def clear(self) -> None:
        """Delete every cached file in the directory."""
        for path in self._dir.glob("*.json"):
            path.unlink(missing_ok=True)

    @property
    def size(self) -> int:
        return sum(1 for _ in self._dir.glob("*.json"))


def enumeration_key(et: int, modulo_reflection: bool) -> str:
    """Cache key for one enumeration run."""
    return f"et{et}-{'reflect' if modulo_reflection else 'orient'}"


_enumeration_cache = None


def get_enumeration_cache() -> MemoryCache | JsonFileCache:
    """Return the shared enumeration cache."""
    global _enumeration_cache
    if _enumeration_cache is not None:
        return _enumeration_cache

    from app.core.config import get_settings
    from app.core.cache_factory import create_cache

    settings = get_settings()
    _enumeration_cache = create_cache(
        directory=settings.MONODROMY_ATLAS_CACHE,
        name="EnumerationCache",
    )
    return _enumeration_cache


def reset_enumeration_cache() -> None:
    """Reset the singleton (useful for testing)."""
    global _enumeration_cache
    _enumeration_cache = None
