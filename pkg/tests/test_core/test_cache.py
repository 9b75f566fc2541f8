"""Tests for the enumeration cache backends."""

import pytest

from app.core.cache import (
    JsonFileCache,
    MemoryCache,
    enumeration_key,
    get_enumeration_cache,
    reset_enumeration_cache,
)


class TestMemoryCache:
    def test_set_get_delete(self):
        cache = MemoryCache()
        cache.set("et12-orient", [1, 2])
        assert cache.get("et12-orient") == [1, 2]
        cache.delete("et12-orient")
        assert cache.get("et12-orient") is None

    def test_evicts_oldest(self):
        cache = MemoryCache(max_size=2)
        cache.set("a", 1)
        cache.set("b", 2)
        cache.set("c", 3)
        assert cache.get("a") is None
        assert cache.size == 2

    def test_overwrite_does_not_evict(self):
        cache = MemoryCache(max_size=2)
        cache.set("a", 1)
        cache.set("b", 2)
        cache.set("a", 10)
        assert cache.get("a") == 10
        assert cache.get("b") == 2

    def test_clear(self):
        cache = MemoryCache()
        cache.set("a", 1)
        cache.clear()
        assert cache.size == 0


class TestJsonFileCache:
    def test_round_trip(self, tmp_path):
        cache = JsonFileCache(tmp_path)
        cache.set("et24-reflect", {"graphs": [[0, 1]]})
        assert (tmp_path / "et24-reflect.json").exists()
        assert JsonFileCache(tmp_path).get("et24-reflect") == {"graphs": [[0, 1]]}
        assert cache.size == 1

    def test_missing_key(self, tmp_path):
        assert JsonFileCache(tmp_path).get("nothing") is None

    def test_corrupt_file_is_deleted(self, tmp_path):
        (tmp_path / "bad.json").write_text("{not json", encoding="utf-8")
        cache = JsonFileCache(tmp_path)
        assert cache.get("bad") is None
        assert not (tmp_path / "bad.json").exists()

    def test_delete_and_clear(self, tmp_path):
        cache = JsonFileCache(tmp_path)
        cache.set("a", 1)
        cache.set("b", 2)
        cache.delete("a")
        assert cache.size == 1
        cache.clear()
        assert cache.size == 0


@pytest.mark.parametrize("reflect, key", [(True, "et36-reflect"), (False, "et36-orient")])
def test_enumeration_key(reflect, key):
    assert enumeration_key(36, reflect) == key


def test_shared_cache_follows_settings(tmp_path, monkeypatch):
    assert isinstance(get_enumeration_cache(), MemoryCache)
    assert get_enumeration_cache() is get_enumeration_cache()
    reset_enumeration_cache()
    from app.core.config import get_settings

    get_settings.cache_clear()
    monkeypatch.setenv("MONODROMY_ATLAS_CACHE", str(tmp_path))
    assert isinstance(get_enumeration_cache(), JsonFileCache)
