"""Marked trivalent sphere graphs and their vertex census."""

import logging
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Mapping

from app.core.exceptions import InvalidGraphError, ParseError
from app.services.maps.oriented_map import OrientedMap, genus

logger = logging.getLogger(__name__)


class Mark(str, Enum):
    A2 = "A2"
    B2 = "B2"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, order=True)
class GraphDatum:
    """Vertex census ``[a6 A6 + a2 A2 + b2 B2]``."""

    a6: int
    a2: int
    b2: int

    @property
    def tau0(self) -> int:
        return self.a6 + self.a2 + self.b2

    @property
    def ends(self) -> int:
        return self.a2 + self.b2

    @property
    def et(self) -> int:
        return 6 * self.tau0

    @property
    def delta(self) -> int:
        return 6 * self.a6 + 2 * self.a2

    @property
    def index(self) -> int:
        return self.delta // 2

    @property
    def rk_h1(self) -> int:
        """First Betti number of any graph with this census."""
        return (self.a6 - self.ends) // 2 + 1

    def is_realizable(self) -> bool:
        """Whether some connected {1,3}-valent graph has this census."""
        k = self.ends
        if self.a6 == 0:
            return k == 2
        return k <= self.a6 + 2 and (self.a6 - k) % 2 == 0

    def render(self) -> str:
        parts = []
        for coeff, name in ((self.a6, "A6"), (self.a2, "A2"), (self.b2, "B2")):
            if coeff == 1:
                parts.append(name)
            elif coeff > 1:
                parts.append(f"{coeff}{name}")
        return "+".join(parts)

    def __str__(self) -> str:
        return f"[{self.render()}]"


_GD_TERM = re.compile(r"^(\d*)(A6|A2|B2)$")


def parse_gd(text: str) -> GraphDatum:
    """Parse ``"2A6+A2+B2"`` (brackets and spaces allowed)."""
    body = text.strip().removeprefix("[").removesuffix("]").replace(" ", "")
    if not body:
        raise ParseError(f"empty graph datum: {text!r}")
    counts = {"A6": 0, "A2": 0, "B2": 0}
    for term in body.split("+"):
        match = _GD_TERM.match(term)
        if not match:
            raise ParseError(f"bad graph datum term {term!r} in {text!r}")
        coeff = int(match.group(1)) if match.group(1) else 1
        counts[match.group(2)] += coeff
    return GraphDatum(counts["A6"], counts["A2"], counts["B2"])


@dataclass(frozen=True)
class JGammaRamification:
    """Cycle types over 0, 1 and infinity of the three-point cover."""

    v0: tuple[int, ...]
    v1: tuple[int, ...]
    v_inf: tuple[int, ...]

    def render(self) -> str:
        return "|".join("(" + ",".join(map(str, v)) + ")" for v in (self.v0, self.v1, self.v_inf))

    def __str__(self) -> str:
        return self.render()


@dataclass(frozen=True)
class MarkedGraph:
    """A genus-0 map with valences 1 and 3 whose ends carry A2 or B2.

    ``marks`` pairs the dart of each end with its mark, sorted by dart.
    """

    map: OrientedMap
    marks: tuple[tuple[int, Mark], ...]

    @cached_property
    def marking(self) -> dict[int, Mark]:
        return dict(self.marks)

    @property
    def end_darts(self) -> list[int]:
        return [d for d, _ in self.marks]


def make_marked_graph(m: OrientedMap, marking: Mapping[int, Mark | str]) -> MarkedGraph:
    """Validate valences, genus and marks, returning a :class:`MarkedGraph`."""
    ends = sorted(v[0] for v in m.vertices if len(v) == 1)
    bad = [v for v in m.vertices if len(v) not in (1, 3)]
    if bad:
        raise InvalidGraphError(
            f"vertices of valence {sorted({len(v) for v in bad})} are not allowed",
            context={"vertices": bad},
        )
    if genus(m) != 0:
        raise InvalidGraphError(f"graph has genus {genus(m)}", context={"genus": genus(m)})
    if sorted(marking) != ends:
        raise InvalidGraphError(
            "every end needs exactly one mark",
            context={"ends": ends, "marked": sorted(marking)},
        )
    marks = tuple((d, Mark(marking[d])) for d in ends)
    return MarkedGraph(map=m, marks=marks)


def graph_datum(g: MarkedGraph) -> GraphDatum:
    a2 = sum(1 for _, mark in g.marks if mark is Mark.A2)
    b2 = len(g.marks) - a2
    a6 = sum(1 for v in g.map.vertices if len(v) == 3)
    return GraphDatum(a6=a6, a2=a2, b2=b2)


def et_gamma(g: MarkedGraph) -> int:
    return graph_datum(g).et


def delta_gamma(g: MarkedGraph) -> int:
    return graph_datum(g).delta


def index(g: MarkedGraph) -> int:
    return graph_datum(g).index


_DOT_END_STYLE = {
    Mark.A2: 'shape=triangle, style=filled, fillcolor=white, label="A2"',
    Mark.B2: 'shape=square, style=filled, fillcolor=black, fontcolor=white, label="B2"',
}


def to_dot(g: MarkedGraph, name: str = "tgamma") -> str:
    """Graphviz source; ends are colored leaves, trivalent vertices points."""
    m = g.map
    lines = [f"graph {name} {{"]
    for i, cycle in enumerate(m.vertices):
        if len(cycle) == 1:
            lines.append(f"  v{i} [{_DOT_END_STYLE[g.marking[cycle[0]]]}];")
        else:
            lines.append(f"  v{i} [shape=point];")
    for d1, d2 in m.edges:
        lines.append(f"  v{m.vertex_of[d1]} -- v{m.vertex_of[d2]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
