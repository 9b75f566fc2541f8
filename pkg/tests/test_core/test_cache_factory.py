"""Tests for app.core.cache_factory.create_cache()."""

from unittest.mock import patch

from app.core.cache import JsonFileCache, MemoryCache
from app.core.cache_factory import create_cache


def test_no_directory_gives_memory_cache():
    cache = create_cache(directory=None, max_size=5, name="TestCache")
    assert isinstance(cache, MemoryCache)
    assert cache._max_size == 5


def test_directory_gives_json_cache(tmp_path):
    cache = create_cache(directory=str(tmp_path / "cache"), name="TestCache")
    assert isinstance(cache, JsonFileCache)
    assert (tmp_path / "cache").is_dir()


def test_unusable_directory_falls_back_to_memory(tmp_path):
    with patch("app.core.cache_factory.JsonFileCache", side_effect=OSError("read-only")):
        cache = create_cache(directory=str(tmp_path), name="TestCache")
    assert isinstance(cache, MemoryCache)
