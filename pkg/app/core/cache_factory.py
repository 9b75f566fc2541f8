"""Shared factory for dual-backend (JSON files -> memory) cache singletons."""

import logging
from app.core.cache import JsonFileCache, MemoryCache

logger = logging.getLogger(__name__)


def create_cache(
    directory: str | None,
    max_size: int = 64,
    name: str = "Cache",
):
    """
    Create a cache backend: tries a JSON file directory first, falls back to memory.

    Args:
        directory:  cache directory, usually MONODROMY_ATLAS_CACHE; None disables files
        max_size:   max entries for the MemoryCache fallback
        name:       human-readable name for log messages

    Returns:
        JsonFileCache if the directory is usable, else MemoryCache
    """
    if directory:
        try:
            cache = JsonFileCache(directory)
            logger.info("%s: using JSON files in %s", name, directory)
            return cache
        except OSError:
            logger.warning("%s: cannot use %s, using in-memory cache", name, directory)
    else:
        logger.debug("%s: no cache directory configured, using in-memory cache", name)
    return MemoryCache(max_size=max_size)
