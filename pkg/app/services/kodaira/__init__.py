"""Kodaira fiber types."""

from app.services.kodaira.fibers import (
    FiberKind,
    KodairaFiber,
    SurfaceStats,
    fiber_et,
    minimal_fiber_over_end,
    parse_fiber,
    star_twist,
    surface_stats,
)

__all__ = [
    "FiberKind",
    "KodairaFiber",
    "SurfaceStats",
    "fiber_et",
    "minimal_fiber_over_end",
    "parse_fiber",
    "star_twist",
    "surface_stats",
]
