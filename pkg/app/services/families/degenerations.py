"""Degenerations of ramification data.

An elementary move lets one simple branch point ``(2)`` collide with another
point: the ``(2)`` disappears and two parts of the other point's vector
merge. Degree and total branching are unchanged, and every move lowers the
number of ``(2)`` vectors, so the closure is a strict partial order. Vectors
over ends of one kind are compared as a multiset.
"""

import itertools
from functools import lru_cache

from app.services.families.ramification import RamDatum
from app.services.maps.permutations import Partition


def _merges(part: Partition) -> set[Partition]:
    out = set()
    for i, j in itertools.combinations(range(len(part)), 2):
        rest = [x for k, x in enumerate(part) if k not in (i, j)]
        out.add(tuple(sorted([*rest, part[i] + part[j]], reverse=True)))
    return out


def _reduced(part: Partition) -> Partition:
    return tuple(x for x in part if x != 1)


def elementary_moves(rd: RamDatum) -> set[RamDatum]:
    """Data one move below ``rd``, in canonical form."""
    if (2,) not in rd.unspecified:
        return set()
    rest = list(rd.unspecified)
    rest.remove((2,))
    d = rd.degree
    out = set()
    for i, part in enumerate(rd.over_a):
        for merged in _merges(part):
            over_a = rd.over_a[:i] + (merged,) + rd.over_a[i + 1 :]
            out.add(RamDatum(d, over_a, rd.over_b, tuple(rest)).canonical())
    for i, part in enumerate(rd.over_b):
        for merged in _merges(part):
            over_b = rd.over_b[:i] + (merged,) + rd.over_b[i + 1 :]
            out.add(RamDatum(d, rd.over_a, over_b, tuple(rest)).canonical())
    for i, vector in enumerate(rest):
        padded = vector + (1,) * (d - sum(vector))
        for merged in _merges(padded):
            unspecified = rest[:i] + [_reduced(merged)] + rest[i + 1 :]
            out.add(RamDatum(d, rd.over_a, rd.over_b, tuple(sorted(unspecified, reverse=True))).canonical())
    return out


@lru_cache(maxsize=4096)
def _closure(rd: RamDatum) -> frozenset[RamDatum]:
    seen: set[RamDatum] = set()
    frontier = [rd]
    while frontier:
        current = frontier.pop()
        for lower in elementary_moves(current):
            if lower not in seen:
                seen.add(lower)
                frontier.append(lower)
    return frozenset(seen)


def degenerations(rd: RamDatum) -> list[RamDatum]:
    """Every datum reachable from ``rd`` by at least one move, sorted."""
    return sorted(_closure(rd.canonical()))


def is_degeneration_of(lower: RamDatum, upper: RamDatum) -> bool:
    return lower.canonical() in _closure(upper.canonical())
