"""Oriented combinatorial maps given by rotation systems.

A map on ``n`` darts is a pair ``(sigma, alpha)``: ``sigma`` turns
counterclockwise around the vertex owning a dart, ``alpha`` jumps to the
other dart of the same edge. Faces are the cycles of ``x -> sigma(alpha(x))``.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping, Sequence

from app.core.exceptions import HasFixedPoint, NotConnected, NotInvolution, NotPermutation
from app.services.maps.permutations import (
    Perm,
    best_relabellings,
    is_permutation,
    perm_compose,
    perm_conjugate,
    perm_cycles,
    perm_invert,
    perms_are_transitive,
)

logger = logging.getLogger(__name__)

MARK_CODES: dict[str, int] = {"A2": 1, "B2": 2}


def _mark_name(mark) -> str:
    return getattr(mark, "value", mark)


@dataclass(frozen=True)
class OrientedMap:
    """A connected rotation system. Build through :func:`build_map`."""

    dart_count: int
    sigma: Perm
    alpha: Perm

    @cached_property
    def phi(self) -> Perm:
        """Face permutation: follow the edge, then turn at the vertex."""
        return perm_compose(self.alpha, self.sigma)

    @cached_property
    def vertices(self) -> list[list[int]]:
        return perm_cycles(self.sigma)

    @cached_property
    def edges(self) -> list[list[int]]:
        return perm_cycles(self.alpha)

    @cached_property
    def faces(self) -> list[list[int]]:
        return perm_cycles(self.phi)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        """Index into :attr:`vertices` for each dart."""
        owner = [0] * self.dart_count
        for i, cycle in enumerate(self.vertices):
            for d in cycle:
                owner[d] = i
        return tuple(owner)

    def valence(self, dart: int) -> int:
        return len(self.vertices[self.vertex_of[dart]])

    @property
    def euler_characteristic(self) -> int:
        if self.dart_count == 0:
            return 2
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def mirror(self) -> "OrientedMap":
        """The same map seen from the other side of the surface."""
        return OrientedMap(self.dart_count, perm_invert(self.sigma), self.alpha)

    def relabel(self, m: Sequence[int]) -> "OrientedMap":
        """Conjugate both permutations by the dart bijection ``m``."""
        return OrientedMap(self.dart_count, perm_conjugate(self.sigma, m), perm_conjugate(self.alpha, m))


@dataclass(frozen=True)
class MapIsoClass:
    canonical_code: bytes
    reflected_code: bytes

    @property
    def unoriented_code(self) -> bytes:
        """Key identifying a map up to isomorphism including reflections."""
        return min(self.canonical_code, self.reflected_code)


def build_map(dart_count: int, sigma: Sequence[int], alpha: Sequence[int]) -> OrientedMap:
    """Validate a rotation system and return it as an :class:`OrientedMap`."""
    if dart_count < 0:
        raise NotPermutation(f"dart count {dart_count} is negative", context={"dart_count": dart_count})
    for name, p in (("sigma", sigma), ("alpha", alpha)):
        if not is_permutation(p, dart_count):
            raise NotPermutation(f"{name} is not a permutation of {dart_count} darts", context={name: list(p)})
    if dart_count % 2:
        raise NotInvolution(
            f"alpha cannot pair up an odd number of darts ({dart_count})",
            context={"dart_count": dart_count},
        )
    for d in range(dart_count):
        if alpha[d] == d:
            raise HasFixedPoint(f"alpha fixes dart {d}", context={"dart": d})
        if alpha[alpha[d]] != d:
            raise NotInvolution(f"alpha is not an involution at dart {d}", context={"dart": d})
    if not perms_are_transitive([sigma, alpha], dart_count):
        raise NotConnected("sigma and alpha do not act transitively", context={"dart_count": dart_count})
    return OrientedMap(dart_count, tuple(sigma), tuple(alpha))


def genus(m: OrientedMap) -> int:
    """Genus of the surface carrying the map."""
    return (2 - m.euler_characteristic) // 2


def mark_vector(m: OrientedMap, marking: Mapping[int, str] | None) -> list[int] | None:
    """Per-dart mark codes; a vertex's mark sits on every dart of the vertex."""
    if not marking:
        return None
    data = [0] * m.dart_count
    for dart, mark in marking.items():
        code = MARK_CODES[_mark_name(mark)]
        for d in m.vertices[m.vertex_of[dart]]:
            data[d] = code
    return data


def _encode(code: Sequence[int]) -> bytes:
    return b"".join(int(v).to_bytes(2, "big") for v in code)


def _best_code(m: OrientedMap, marks: list[int] | None) -> tuple[bytes, list[list[int]]]:
    if m.dart_count == 0:
        return b"", [[]]
    code, relabellings = best_relabellings([m.sigma, m.alpha], marks)
    return _encode((m.dart_count, *code)), relabellings


def canonical_code(m: OrientedMap, marking: Mapping[int, str] | None = None) -> MapIsoClass:
    """Isomorphism invariant of a (marked) map.

    Equal ``canonical_code`` values mean an orientation-preserving
    isomorphism exists. ``reflected_code`` is the canonical code of the mirror.
    """
    marks = mark_vector(m, marking)
    code, _ = _best_code(m, marks)
    reflected, _ = _best_code(m.mirror(), marks)
    return MapIsoClass(canonical_code=code, reflected_code=reflected)


def automorphisms(m: OrientedMap, marking: Mapping[int, str] | None = None) -> list[Perm]:
    """Orientation-preserving automorphisms preserving ``marking``, identity first."""
    marks = mark_vector(m, marking)
    _, best = _best_code(m, marks)
    base = perm_invert(best[0])
    auts = sorted(perm_compose(r, base) for r in best)
    return auts
