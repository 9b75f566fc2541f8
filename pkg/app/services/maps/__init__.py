"""Oriented combinatorial maps: rotation systems, genus, canonical codes."""

from app.services.maps.oriented_map import (
    MapIsoClass,
    OrientedMap,
    automorphisms,
    build_map,
    canonical_code,
    genus,
)

__all__ = ["MapIsoClass", "OrientedMap", "automorphisms", "build_map", "canonical_code", "genus"]
