"""Riemann-Hurwitz bookkeeping and realizability of branch data by constellations.

A constellation is a tuple of permutations ``g_1, ..., g_k`` of ``0..d-1``
with prescribed cycle types, product ``g_1 g_2 ... g_k`` equal to the
identity (left to right, as in ``perm_compose``) and a transitive group.
"""

import itertools
import logging
import math
import random
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from app.core.config import get_settings
from app.core.exceptions import DegreeTooLarge, InvalidProfile, InvariantViolation, ParseError
from app.core.metrics import timed
from app.services.maps.permutations import (
    Partition,
    Perm,
    perm_compose,
    perm_cycle_type,
    perm_cycles,
    perm_from_cycles,
    perm_id,
    perm_invert,
    perms_are_transitive,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BranchProfile:
    """Degree and one partition of it per branch point."""

    degree: int
    profiles: tuple[Partition, ...]

    @property
    def defect(self) -> int:
        return sum(self.degree - len(p) for p in self.profiles)

    def render(self) -> str:
        return ";".join(",".join(map(str, p)) for p in self.profiles)


def make_branch_profile(degree: int, profiles: Sequence[Sequence[int]]) -> BranchProfile:
    """Validate and normalize; each partition is sorted in descending order."""
    if degree < 1:
        raise InvalidProfile(f"degree must be positive, got {degree}", context={"degree": degree})
    normalized = []
    for p in profiles:
        part = tuple(sorted((int(x) for x in p), reverse=True))
        if not part or part[-1] < 1 or sum(part) != degree:
            raise InvalidProfile(
                f"{part} is not a partition of {degree}",
                context={"degree": degree, "profile": list(part)},
            )
        normalized.append(part)
    return BranchProfile(degree, tuple(normalized))


def parse_profiles(degree: int, text: str) -> BranchProfile:
    """Parse ``"3,1;2,2;2,2"``; an empty string means no branch points."""
    text = text.strip()
    if not text:
        return make_branch_profile(degree, [])
    try:
        profiles = [[int(x) for x in chunk.split(",")] for chunk in text.split(";")]
    except ValueError as e:
        raise ParseError(f"malformed profile list {text!r}") from e
    return make_branch_profile(degree, profiles)


def rh_genus(bp: BranchProfile) -> int | None:
    """Genus from ``2 - 2g = 2d - total defect``; ``None`` when not a non-negative integer."""
    twice = 2 - 2 * bp.degree + bp.defect
    if twice % 2 or twice < 0:
        return None
    return twice // 2


@dataclass(frozen=True)
class Constellation:
    degree: int
    perms: tuple[Perm, ...]

    def cycle_types(self) -> tuple[Partition, ...]:
        return tuple(perm_cycle_type(g) for g in self.perms)

    def product(self) -> Perm:
        result = perm_id(self.degree)
        for g in self.perms:
            result = perm_compose(result, g)
        return result

    def verify(self, bp: BranchProfile) -> bool:
        """Cycle types match ``bp``, the product is trivial and the action is transitive."""
        if self.degree != bp.degree or self.cycle_types() != bp.profiles:
            return False
        if self.product() != perm_id(self.degree):
            return False
        return perms_are_transitive(self.perms, self.degree) if self.perms else self.degree == 1

    def as_dict(self) -> dict:
        return {"degree": self.degree, "perms": [list(g) for g in self.perms]}


def class_size(part: Partition) -> int:
    """Number of permutations with cycle type ``part``."""
    d = sum(part)
    denom = 1
    for k, m in Counter(part).items():
        denom *= k**m * math.factorial(m)
    return math.factorial(d) // denom


def canonical_representative(part: Partition) -> Perm:
    """Cycles on consecutive points in the order of ``part``."""
    cycles, start = [], 0
    for k in part:
        cycles.append(range(start, start + k))
        start += k
    return perm_from_cycles(cycles, sum(part))


def permutations_of_type(part: Partition) -> Iterator[Perm]:
    """Every permutation of cycle type ``part``, each exactly once."""
    d = sum(part)
    res = list(range(d))

    def fill(unused: list[int], lengths: Counter) -> Iterator[Perm]:
        if not unused:
            yield tuple(res)
            return
        head, rest = unused[0], unused[1:]
        for k in sorted(lengths):
            lengths[k] -= 1
            if not lengths[k]:
                del lengths[k]
            for tail in itertools.permutations(rest, k - 1):
                cycle = (head, *tail)
                for i, x in enumerate(cycle):
                    res[x] = cycle[(i + 1) % k]
                left = [x for x in rest if x not in tail]
                yield from fill(left, lengths)
            lengths[k] += 1
        for x in unused:
            res[x] = x

    yield from fill(list(range(d)), Counter(part))


def random_of_type(part: Partition, rng: random.Random) -> Perm:
    points = list(range(sum(part)))
    rng.shuffle(points)
    cycles, start = [], 0
    for k in part:
        cycles.append(points[start : start + k])
        start += k
    return perm_from_cycles(cycles, len(points))


class _Search:
    """One factor is fixed to a class representative (everything may be
    conjugated), the largest class is solved for, the rest are iterated."""

    def __init__(self, bp: BranchProfile):
        self.bp = bp
        k = len(bp.profiles)
        by_size = sorted(range(k), key=lambda i: class_size(bp.profiles[i]), reverse=True)
        self.solved = by_size[0]
        self.fixed = by_size[1]
        self.free = [i for i in range(k) if i not in (self.fixed, self.solved)]
        # product g_{s+1} ... g_k g_1 ... g_{s-1}, then g_s is its inverse
        self.order = [(self.solved + j) % k for j in range(1, k)]

    @property
    def exhaustive_size(self) -> int:
        return math.prod(class_size(self.bp.profiles[i]) for i in self.free)

    def complete(self, chosen: dict[int, Perm]) -> Constellation | None:
        d = self.bp.degree
        partial = perm_id(d)
        for i in self.order:
            partial = perm_compose(partial, chosen[i])
        last = perm_invert(partial)
        if perm_cycle_type(last) != self.bp.profiles[self.solved]:
            return None
        perms = tuple(last if i == self.solved else chosen[i] for i in range(len(self.bp.profiles)))
        if not perms_are_transitive(perms, d):
            return None
        return Constellation(d, perms)

    def random_trials(self, trials: int, rng: random.Random) -> Constellation | None:
        fixed = canonical_representative(self.bp.profiles[self.fixed])
        for _ in range(trials if self.free else 1):
            chosen = {self.fixed: fixed}
            for i in self.free:
                chosen[i] = random_of_type(self.bp.profiles[i], rng)
            found = self.complete(chosen)
            if found is not None:
                return found
        return None

    def exhaustive(self) -> Constellation | None:
        fixed = canonical_representative(self.bp.profiles[self.fixed])
        pools = [list(permutations_of_type(self.bp.profiles[i])) for i in self.free]
        for combo in itertools.product(*pools):
            chosen = {self.fixed: fixed, **dict(zip(self.free, combo))}
            found = self.complete(chosen)
            if found is not None:
                return found
        return None


def is_simple(part: Partition) -> bool:
    return part[0] == 2 and all(x == 1 for x in part[1:])


def _reductions(bp: BranchProfile) -> Iterator[tuple[BranchProfile, int, int, int, int]]:
    """Data with one simple branch point absorbed into another point.

    Yields ``(reduced, j, i, e1, e2)``: the simple profile ``j`` is dropped
    and parts ``e1, e2`` of profile ``i`` are merged. Realizing the reduced
    data realizes ``bp`` by splitting the merged cycle again.
    """
    j = next((idx for idx, p in enumerate(bp.profiles) if is_simple(p)), None)
    if j is None:
        return
    seen = set()
    for i, part in enumerate(bp.profiles):
        if i == j or part in seen or part[0] == 1 or len(part) < 2:
            continue
        seen.add(part)
        pairs = {tuple(sorted(pair, reverse=True)) for pair in itertools.combinations(part, 2)}
        for e1, e2 in sorted(pairs, reverse=True):
            rest = list(part)
            rest.remove(e1)
            rest.remove(e2)
            merged = tuple(sorted([*rest, e1 + e2], reverse=True))
            profiles = [merged if idx == i else p for idx, p in enumerate(bp.profiles) if idx != j]
            yield BranchProfile(bp.degree, tuple(profiles)), j, i, e1, e2


def _lift(found: Constellation, j: int, i: int, e1: int, e2: int) -> Constellation:
    """Undo a reduction: split the merged cycle and move the new transposition to slot ``j``."""
    at = i if i < j else i - 1
    g = found.perms[at]
    cycle = next(c for c in perm_cycles(g) if len(c) == e1 + e2)
    t = perm_from_cycles([(cycle[0], cycle[e1])], found.degree)
    h = perm_compose(g, t)
    perms = [*found.perms[:at], h, t, *found.perms[at + 1 :]]
    pos = at + 1
    while pos < j:
        x = perms[pos + 1]
        perms[pos], perms[pos + 1] = x, perm_compose(perm_compose(perm_invert(x), t), x)
        t = perms[pos + 1]
        pos += 1
    while pos > j:
        x = perms[pos - 1]
        perms[pos - 1], perms[pos] = perm_compose(perm_compose(x, t), perm_invert(x)), x
        t = perms[pos - 1]
        pos -= 1
    return Constellation(found.degree, tuple(perms))


def _small_case(bp: BranchProfile) -> Constellation | None:
    d = bp.degree
    if len(bp.profiles) == 0:
        return Constellation(d, ()) if d == 1 else None
    if len(bp.profiles) == 1:
        return Constellation(d, (perm_id(d),)) if d == 1 else None
    return None


def _search(
    bp: BranchProfile, trials: int, rng: random.Random, failed: set[tuple[int, tuple[Partition, ...]]]
) -> Constellation | None:
    key = (bp.degree, tuple(sorted(bp.profiles)))
    if key in failed:
        return None
    if len(bp.profiles) < 2:
        return _small_case(bp)
    search = _Search(bp)
    found = search.random_trials(trials, rng) if trials else None
    if found is not None:
        return found
    for reduced, j, i, e1, e2 in _reductions(bp):
        smaller = _search(reduced, trials, rng, failed)
        if smaller is not None:
            return _lift(smaller, j, i, e1, e2)
    logger.debug("Hurwitz: exhaustive search over %d candidates for %s", search.exhaustive_size, bp.render())
    found = search.exhaustive()
    if found is None:
        failed.add(key)
    return found


def realizable(bp: BranchProfile, random_trials: int | None = None, seed: int = 0) -> Constellation | None:
    """A constellation realizing ``bp``, or ``None`` when none exists.

    Seeded random attempts run first. Data with simple branch points is then
    reduced by absorbing one of them into another point; an exhaustive search
    over the remaining conjugacy classes decides what is left.
    """
    settings = get_settings()
    if bp.degree > settings.HURWITZ_MAX_DEGREE:
        raise DegreeTooLarge(
            f"degree {bp.degree} exceeds the search limit {settings.HURWITZ_MAX_DEGREE}",
            context={"degree": bp.degree},
        )
    if random_trials is None:
        random_trials = settings.HURWITZ_RANDOM_TRIALS

    with timed("hurwitz"):
        found = _search(bp, random_trials, random.Random(seed), set())

    if found is not None and not found.verify(bp):
        raise InvariantViolation(
            f"search returned an invalid constellation for {bp.render()}",
            context={"degree": bp.degree, "perms": [list(g) for g in found.perms]},
        )
    logger.debug("Hurwitz: degree %d profiles %s -> %s", bp.degree, bp.render(), "realizable" if found else "unrealizable")
    return found
