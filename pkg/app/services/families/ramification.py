"""Ramification data of ``j_E`` over the ends of ``T_Gamma`` and elsewhere."""

import re
from dataclasses import dataclass, field
from typing import Sequence

from app.core.exceptions import InvalidProfile, ParseError
from app.services.hurwitz.constellations import BranchProfile, make_branch_profile
from app.services.maps.permutations import Partition


def _vector(part: Sequence[int]) -> Partition:
    return tuple(sorted((int(x) for x in part), reverse=True))


def _render_vector(part: Partition) -> str:
    return "(" + ",".join(map(str, part)) + ")"


@dataclass(frozen=True, order=True)
class RamDatum:
    """Degree, one partition per A2 end, one per B2 end, and the reduced
    vectors (entries at least 2) over all other branch points."""

    degree: int
    over_a: tuple[Partition, ...] = ()
    over_b: tuple[Partition, ...] = ()
    unspecified: tuple[Partition, ...] = field(default=())

    @property
    def defect(self) -> int:
        ends = sum(self.degree - len(p) for p in (*self.over_a, *self.over_b))
        return ends + sum(sum(v) - len(v) for v in self.unspecified)

    @property
    def total_branching(self) -> int:
        return self.defect

    @property
    def simple_points(self) -> int:
        return sum(1 for v in self.unspecified if v == (2,))

    def closes_genus_zero(self) -> bool:
        return self.defect == 2 * self.degree - 2

    def padded(self) -> tuple[Partition, ...]:
        """Unspecified vectors filled up with 1s to partitions of the degree."""
        return tuple(v + (1,) * (self.degree - sum(v)) for v in self.unspecified)

    def branch_profile(self) -> BranchProfile:
        return make_branch_profile(self.degree, [*self.over_a, *self.over_b, *self.padded()])

    def canonical(self) -> "RamDatum":
        """Same datum with the vectors over ends of one kind sorted."""
        return RamDatum(
            self.degree,
            tuple(sorted(self.over_a, reverse=True)),
            tuple(sorted(self.over_b, reverse=True)),
            self.unspecified,
        )

    def render(self, ell: int = 0) -> str:
        parts = [_render_vector(v) + "_A" for v in self.over_a]
        parts += [_render_vector(v) + "_B" for v in self.over_b]
        parts += [_render_vector(v) for v in self.unspecified]
        text = "[" + ",".join(parts) + "]"
        if ell == 1:
            text += " + *"
        elif ell > 1:
            text += f" + {ell}*"
        return text

    def __str__(self) -> str:
        return self.render()


def make_ram_datum(
    degree: int,
    over_a: Sequence[Sequence[int]] = (),
    over_b: Sequence[Sequence[int]] = (),
    unspecified: Sequence[Sequence[int]] = (),
) -> RamDatum:
    """Validate and normalize; end vectors keep their order, unspecified ones are sorted."""
    if degree < 1:
        raise InvalidProfile(f"degree must be positive, got {degree}", context={"degree": degree})
    a = tuple(_vector(p) for p in over_a)
    b = tuple(_vector(p) for p in over_b)
    for p in (*a, *b):
        if not p or p[-1] < 1 or sum(p) != degree:
            raise InvalidProfile(f"{p} is not a partition of {degree}", context={"degree": degree})
    reduced = []
    for v in unspecified:
        v = tuple(x for x in _vector(v) if x != 1)
        if not v:
            continue
        if sum(v) > degree:
            raise InvalidProfile(f"{v} exceeds degree {degree}", context={"degree": degree})
        reduced.append(v)
    return RamDatum(degree, a, b, tuple(sorted(reduced, reverse=True)))


_VECTOR = re.compile(r"\(([\d,\s]+)\)(_A|_B)?")
_STARS = re.compile(r"\+\s*(\d*)\s*\*\s*$")


def split_stars(text: str) -> tuple[str, int]:
    """Strip a trailing ``+ *`` / ``+ 2*`` and return the star count."""
    text = text.strip()
    match = _STARS.search(text)
    if not match:
        return text, 0
    return text[: match.start()].strip(), int(match.group(1) or 1)


def parse_rd(text: str, degree: int | None = None) -> tuple[RamDatum, int]:
    """Parse ``"[(3,1)_A,(2,2)_B,(2)] + *"`` into a datum and its star count.

    The degree is read from the end vectors unless given.
    """
    body, ell = split_stars(text)
    body = body.removeprefix("[").removesuffix("]").strip()
    over_a, over_b, unspecified = [], [], []
    position = 0
    for match in _VECTOR.finditer(body):
        if body[position : match.start()].strip(" ,"):
            raise ParseError(f"unexpected text in ramification datum {text!r}")
        position = match.end()
        try:
            vector = [int(x) for x in match.group(1).split(",")]
        except ValueError as e:
            raise ParseError(f"bad vector {match.group(0)!r} in {text!r}") from e
        {"_A": over_a, "_B": over_b, None: unspecified}[match.group(2)].append(vector)
    if body[position:].strip(" ,"):
        raise ParseError(f"unexpected text in ramification datum {text!r}")
    if degree is None:
        sums = {sum(v) for v in (*over_a, *over_b)}
        if len(sums) != 1:
            raise ParseError(f"cannot read a single degree from {text!r}")
        degree = sums.pop()
    return make_ram_datum(degree, over_a, over_b, unspecified), ell
