"""Bipartite refinement of a marked graph and the ramification of its three-point cover."""

from dataclasses import dataclass

from app.core.exceptions import DegenerateGraph
from app.services.dessin.marked_graph import JGammaRamification, Mark, MarkedGraph
from app.services.maps.oriented_map import OrientedMap, build_map


@dataclass(frozen=True)
class BipartiteMap:
    """An oriented map whose vertices are colored ``"A"`` or ``"B"``.

    ``colors[d]`` is the color of the vertex owning dart ``d``. Every edge
    joins an A-vertex to a B-vertex.
    """

    map: OrientedMap
    colors: tuple[str, ...]

    @property
    def edge_count(self) -> int:
        return self.map.dart_count // 2

    def vertex_valences(self, color: str) -> list[int]:
        return sorted(
            (len(v) for v in self.map.vertices if self.colors[v[0]] == color),
            reverse=True,
        )


def dart_colors(g: MarkedGraph) -> list[str]:
    """Color of each dart's vertex in the unrefined graph: B only at B2 ends."""
    colors = ["A"] * g.map.dart_count
    for d, mark in g.marks:
        if mark is Mark.B2:
            colors[d] = "B"
    return colors


def bipartite_refinement(g: MarkedGraph) -> BipartiteMap:
    """Put a new B-vertex in the middle of every edge joining two A-vertices.

    Original darts keep their labels; each subdivision adds two darts at the
    end of the range, one pair per subdivided edge.
    """
    m = g.map
    colors = dart_colors(g)
    n = m.dart_count
    sigma = list(m.sigma)
    alpha = list(m.alpha)
    new_colors = list(colors)
    for d in range(n):
        e = m.alpha[d]
        if d > e:
            continue
        if colors[d] == "B" and colors[e] == "B":
            raise DegenerateGraph("an edge joining two B2 ends has no refinement", context={"darts": [d, e]})
        if colors[d] == "A" and colors[e] == "A":
            b1, b2 = len(sigma), len(sigma) + 1
            sigma.extend([b2, b1])
            alpha.extend([d, e])
            alpha[d], alpha[e] = b1, b2
            new_colors.extend(["B", "B"])
    return BipartiteMap(map=build_map(len(sigma), sigma, alpha), colors=tuple(new_colors))


def rd_jgamma(g: MarkedGraph) -> JGammaRamification:
    """Ramification over 0, 1 and infinity read off the refinement.

    A-vertex valences give the profile over 0, B-vertex valences the profile
    over 1, half the face degrees the profile over infinity.
    """
    refined = bipartite_refinement(g)
    v_inf = tuple(sorted((len(f) // 2 for f in refined.map.faces), reverse=True))
    return JGammaRamification(
        v0=tuple(refined.vertex_valences("A")),
        v1=tuple(refined.vertex_valences("B")),
        v_inf=v_inf,
    )
