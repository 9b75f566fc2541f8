"""Exhaustive generation of marked trivalent sphere graphs with a given ET.

Rotation systems are grown dart by dart in breadth-first standard form from
dart 0: the darts are scanned in label order and at each dart its image
under ``sigma`` and then under ``alpha`` is chosen among existing darts or a
fresh label. A complete system is kept when it has genus 0 and its own code
is the minimum over all root darts. All A2/B2 markings of the ends are then
deduplicated with marked canonical codes.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from app.core.cache import enumeration_key, get_enumeration_cache
from app.core.exceptions import InvalidEt
from app.services.dessin.marked_graph import GraphDatum, Mark, MarkedGraph, graph_datum, make_marked_graph
from app.services.maps.oriented_map import OrientedMap, canonical_code
from app.services.maps.permutations import best_relabellings

logger = logging.getLogger(__name__)

VALID_ET = (12, 24, 36, 48)


class _RotationBuilder:
    """Partial rotation system on ``3 * a6 + k`` darts."""

    def __init__(self, a6: int, k: int):
        self.n = 3 * a6 + k
        self.k = k
        self.sigma = [-1] * self.n
        self.sigma_inv = [-1] * self.n
        self.alpha = [-1] * self.n
        self.count = 1
        self.fixed = 0

    def _chain_back(self, x: int) -> int:
        length = 1
        y = self.sigma_inv[x]
        while y != -1:
            length += 1
            y = self.sigma_inv[y]
        return length

    def _chain_forward(self, y: int) -> tuple[int, int]:
        length = 1
        z = y
        while self.sigma[z] != -1:
            z = self.sigma[z]
            length += 1
        return length, z

    def sigma_choices(self, x: int) -> list[int]:
        choices = []
        if self.sigma_inv[x] == -1 and self.fixed < self.k:
            choices.append(x)
        back = self._chain_back(x)
        for y in range(self.count):
            if y == x or self.sigma_inv[y] != -1:
                continue
            fwd, tail = self._chain_forward(y)
            if tail == x:
                if fwd == 3:
                    choices.append(y)
            elif back + fwd <= 3:
                choices.append(y)
        if self.count < self.n and back + 1 <= 3:
            choices.append(self.count)
        return choices

    def alpha_choices(self, x: int) -> list[int]:
        choices = [y for y in range(self.count) if y != x and self.alpha[y] == -1]
        if self.count < self.n:
            choices.append(self.count)
        return choices


def _grow(b: _RotationBuilder, slot: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    while slot < 2 * b.count:
        x, which = divmod(slot, 2)
        if (b.sigma if which == 0 else b.alpha)[x] == -1:
            break
        slot += 1
    else:
        if b.count == b.n and b.fixed == b.k:
            yield tuple(b.sigma), tuple(b.alpha)
        return

    x, which = divmod(slot, 2)
    choices = b.sigma_choices(x) if which == 0 else b.alpha_choices(x)
    for y in choices:
        grew = y == b.count
        if grew:
            b.count += 1
        if which == 0:
            b.sigma[x] = y
            b.sigma_inv[y] = x
            b.fixed += y == x
        else:
            b.alpha[x] = y
            b.alpha[y] = x
        yield from _grow(b, slot + 1)
        if which == 0:
            b.sigma[x] = -1
            b.sigma_inv[y] = -1
            b.fixed -= y == x
        else:
            b.alpha[x] = -1
            b.alpha[y] = -1
        if grew:
            b.count -= 1


def planar_maps(a6: int, k: int) -> list[OrientedMap]:
    """Unmarked genus-0 maps with ``a6`` trivalent vertices and ``k`` ends, one per class."""
    found = []
    leaves = 0
    for sigma, alpha in _grow(_RotationBuilder(a6, k), 0):
        leaves += 1
        m = OrientedMap(len(sigma), sigma, alpha)
        if m.euler_characteristic != 2:
            continue
        best, _ = best_relabellings([sigma, alpha])
        if best != sigma + alpha:
            continue
        found.append(m)
    logger.debug("(a6=%d, k=%d): %d rooted systems, %d planar maps", a6, k, leaves, len(found))
    return found


def vertex_signatures(et: int) -> list[tuple[int, int]]:
    """Pairs ``(a6, k)`` with ``a6 + k = et / 6`` admitting a connected graph."""
    tau0 = et // 6
    return [
        (a6, tau0 - a6)
        for a6 in range(tau0, -1, -1)
        if GraphDatum(a6, tau0 - a6, 0).is_realizable()
    ]


def _marked_graphs_for(a6: int, k: int, modulo_reflection: bool) -> list[tuple[bytes, MarkedGraph]]:
    keyed: dict[bytes, MarkedGraph] = {}
    for m in planar_maps(a6, k):
        ends = sorted(v[0] for v in m.vertices if len(v) == 1)
        for marks in itertools.product((Mark.A2, Mark.B2), repeat=len(ends)):
            marking = dict(zip(ends, marks))
            iso = canonical_code(m, marking)
            key = iso.unoriented_code if modulo_reflection else iso.canonical_code
            if key not in keyed:
                keyed[key] = make_marked_graph(m, marking)
    return list(keyed.items())


def _sort_key(item: tuple[bytes, MarkedGraph]) -> tuple:
    key, g = item
    gd = graph_datum(g)
    return (-gd.a6, -gd.a2, key)


def enumerate_tgamma(et: int, modulo_reflection: bool = False, jobs: int = 1, use_cache: bool = True) -> list[MarkedGraph]:
    """All marked graphs with ``ET = et``, one per isomorphism class.

    Classes are taken up to orientation-preserving isomorphism, or up to all
    isomorphisms when ``modulo_reflection`` is set. The order is fixed:
    decreasing ``a6``, then decreasing ``a2``, then canonical code.
    """
    if et not in VALID_ET:
        raise InvalidEt(f"ET must be one of {VALID_ET}, got {et}", context={"et": et})

    from app.schemas.records import MapRecord

    cache = get_enumeration_cache() if use_cache else None
    cache_key = enumeration_key(et, modulo_reflection)
    if cache is not None:
        cached = cache.get(cache_key)
        if cached is not None:
            logger.debug("Enumeration cache hit: %s", cache_key)
            return [MapRecord.model_validate(r).to_graph() for r in cached]

    signatures = vertex_signatures(et)
    if jobs > 1 and len(signatures) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(
                pool.map(
                    _marked_graphs_for,
                    [a6 for a6, _ in signatures],
                    [k for _, k in signatures],
                    [modulo_reflection] * len(signatures),
                )
            )
    else:
        batches = [_marked_graphs_for(a6, k, modulo_reflection) for a6, k in signatures]
    items = sorted((item for batch in batches for item in batch), key=_sort_key)
    graphs = [g for _, g in items]
    logger.info(
        "Enumerated %d graphs with ET=%d (%s)",
        len(graphs),
        et,
        "modulo reflection" if modulo_reflection else "orientation-preserving",
    )
    if cache is not None:
        cache.set(cache_key, [MapRecord.from_graph(g).model_dump(mode="json") for g in graphs])
    return graphs
