"""Kodaira fiber types and Euler-number bookkeeping for elliptic fibrations."""

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from app.core.exceptions import AlreadyStar, NotMultipleOf12, ParseError
from app.services.dessin.marked_graph import Mark


class FiberKind(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    I_STAR = "I*"
    II_STAR = "II*"
    III_STAR = "III*"
    IV_STAR = "IV*"


_BASE_ET = {
    FiberKind.II: 4,
    FiberKind.III: 6,
    FiberKind.IV: 8,
    FiberKind.IV_STAR: 16,
    FiberKind.III_STAR: 18,
    FiberKind.II_STAR: 20,
}

_TWIST = {
    FiberKind.I: FiberKind.I_STAR,
    FiberKind.II: FiberKind.IV_STAR,
    FiberKind.III: FiberKind.III_STAR,
    FiberKind.IV: FiberKind.II_STAR,
}


@dataclass(frozen=True)
class KodairaFiber:
    """A fiber type; ``n`` is only used by ``I`` and ``I*``."""

    kind: FiberKind
    n: int = 0

    @property
    def is_star(self) -> bool:
        return self.kind.value.endswith("*")

    @property
    def name(self) -> str:
        if self.kind is FiberKind.I:
            return f"I{self.n}"
        if self.kind is FiberKind.I_STAR:
            return f"I{self.n}*"
        return self.kind.value

    def __str__(self) -> str:
        return self.name


_NAME = re.compile(r"^(?:I(\d+)(\*?)|(II|III|IV)(\*?))$")


def parse_fiber(name: str) -> KodairaFiber:
    """Parse ``"I5"``, ``"I0*"``, ``"II"``, ``"IV*"`` and so on."""
    match = _NAME.match(name.strip())
    if not match:
        raise ParseError(f"unknown fiber type {name!r}")
    if match.group(1) is not None:
        kind = FiberKind.I_STAR if match.group(2) else FiberKind.I
        return KodairaFiber(kind, int(match.group(1)))
    return KodairaFiber(FiberKind(match.group(3) + match.group(4)))


def fiber_et(f: KodairaFiber) -> int:
    """Euler number of the fiber."""
    if f.kind is FiberKind.I:
        return 2 * f.n
    if f.kind is FiberKind.I_STAR:
        return 2 * f.n + 12
    return _BASE_ET[f.kind]


def star_twist(f: KodairaFiber) -> KodairaFiber:
    """Quadratic twist of a non-star fiber; adds 12 to the Euler number."""
    if f.is_star:
        raise AlreadyStar(f"{f.name} is already a *-fiber", context={"fiber": f.name})
    return KodairaFiber(_TWIST[f.kind], f.n)


def minimal_fiber_over_end(mark: Mark | str, e: int, star: bool = False) -> KodairaFiber:
    """Fiber of least Euler number over a preimage of an end with ramification ``e``."""
    if e < 1:
        raise ValueError(f"ramification order must be positive, got {e}")
    if Mark(mark) is Mark.B2:
        fiber = KodairaFiber(FiberKind.I) if e % 2 == 0 else KodairaFiber(FiberKind.III)
    else:
        fiber = {0: KodairaFiber(FiberKind.I), 1: KodairaFiber(FiberKind.II), 2: KodairaFiber(FiberKind.IV)}[e % 3]
    return star_twist(fiber) if star else fiber


@dataclass(frozen=True)
class SurfaceStats:
    et: int
    chi: int
    s_squared: int
    r: int


def surface_stats(fibers: Iterable[KodairaFiber]) -> SurfaceStats:
    """Euler number, holomorphic Euler characteristic data and ``r = chi / 12``."""
    fibers = list(fibers)
    if not fibers:
        raise ValueError("at least one fiber is required")
    et = sum(fiber_et(f) for f in fibers)
    chi = et // 2
    if et % 2 or chi % 12:
        raise NotMultipleOf12(
            f"fiber Euler numbers sum to {et}, so chi = {et / 2} is not a multiple of 12",
            context={"et": et, "fibers": [f.name for f in fibers]},
        )
    return SurfaceStats(et=et, chi=chi, s_squared=-chi // 12, r=chi // 12)
