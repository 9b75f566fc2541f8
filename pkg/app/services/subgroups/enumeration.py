"""Low-index enumeration of conjugacy classes of subgroups of the modular group.

Coset tables are grown in breadth-first standard form from point 0: the
points are scanned in label order and at each point the image under
``sigma3`` and then under ``sigma2`` is chosen among the existing points or
a fresh label. A completed table is kept only when its own code is the
minimum over all base points, so every conjugacy class appears once.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from app.core.exceptions import InvalidSubgroupError
from app.services.subgroups.bridge import SubgroupRep

logger = logging.getLogger(__name__)

MAX_INDEX = 24


class _CosetTable:
    """Partial coset table with undo-free copying done by the recursion."""

    def __init__(self, n: int):
        self.n = n
        self.s3 = [-1] * n
        self.s3inv = [-1] * n
        self.s2 = [-1] * n
        self.count = 1

    def chain_back(self, x: int) -> int:
        """Length of the sigma3 chain ending at ``x``."""
        length = 1
        y = self.s3inv[x]
        while y != -1 and y != x:
            length += 1
            y = self.s3inv[y]
        return length

    def chain_forward(self, y: int, stop: int) -> tuple[int, bool]:
        """Length of the sigma3 chain starting at ``y`` and whether it reaches ``stop``."""
        length = 1
        z = y
        while self.s3[z] != -1:
            z = self.s3[z]
            length += 1
        return length, z == stop

    def sigma3_choices(self, x: int) -> list[int]:
        choices = []
        if self.s3inv[x] == -1:
            choices.append(x)
        back = self.chain_back(x)
        for y in range(self.count):
            if y == x or self.s3inv[y] != -1:
                continue
            fwd, closes = self.chain_forward(y, x)
            if closes:
                if fwd == 3:
                    choices.append(y)
            elif back + fwd <= 3:
                choices.append(y)
        if self.count < self.n and back + 1 <= 3:
            choices.append(self.count)
        return choices

    def sigma2_choices(self, x: int) -> list[int]:
        choices = [x]
        choices.extend(y for y in range(self.count) if y != x and self.s2[y] == -1)
        if self.count < self.n:
            choices.append(self.count)
        return choices


def _grow(table: _CosetTable, slot: int) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Yield complete tables reachable from ``table`` starting at ``slot``.

    Slot ``2x`` is sigma3 at point ``x``, slot ``2x + 1`` is sigma2 at ``x``.
    """
    while slot < 2 * table.count:
        x, which = divmod(slot, 2)
        if which == 0 and table.s3[x] == -1:
            break
        if which == 1 and table.s2[x] == -1:
            break
        slot += 1
    else:
        if table.count == table.n:
            yield tuple(table.s3), tuple(table.s2)
        return

    x, which = divmod(slot, 2)
    choices = table.sigma3_choices(x) if which == 0 else table.sigma2_choices(x)
    for y in choices:
        grew = y == table.count
        if grew:
            table.count += 1
        if which == 0:
            table.s3[x] = y
            table.s3inv[y] = x
        else:
            table.s2[x] = y
            table.s2[y] = x
        yield from _grow(table, slot + 1)
        if which == 0:
            table.s3[x] = -1
            table.s3inv[y] = -1
        else:
            table.s2[x] = -1
            table.s2[y] = -1
        if grew:
            table.count -= 1


def classes_of_index(n: int, genus_filter: int | None = 0) -> list[SubgroupRep]:
    """One representative per conjugacy class of index ``n``, sorted by code."""
    found = []
    leaves = 0
    for s3, s2 in _grow(_CosetTable(n), 0):
        leaves += 1
        rep = SubgroupRep(n, s3, s2)
        if genus_filter is not None and rep.genus != genus_filter:
            continue
        own = bytes([n, *s3, *s2])
        if rep.code != own:
            continue
        found.append(rep)
    found.sort(key=lambda r: r.code)
    logger.debug("index %d: %d standard tables, %d classes kept", n, leaves, len(found))
    return found


def enumerate_subgroups(max_index: int, genus_filter: int | None = 0, jobs: int = 1) -> list[SubgroupRep]:
    """Conjugacy classes of subgroups of index at most ``max_index``.

    ``genus_filter=None`` keeps every genus. The output order is by index,
    then by class code, independently of ``jobs``.
    """
    if max_index > MAX_INDEX:
        raise InvalidSubgroupError(f"max_index {max_index} exceeds {MAX_INDEX}", context={"max_index": max_index})
    indices = list(range(1, max_index + 1))
    if jobs > 1 and len(indices) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(classes_of_index, indices, [genus_filter] * len(indices)))
    else:
        batches = [classes_of_index(n, genus_filter) for n in indices]
    result = [rep for batch in batches for rep in batch]
    logger.info("Enumerated %d subgroup classes up to index %d", len(result), max_index)
    return result
