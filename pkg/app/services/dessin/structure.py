"""Structural classification of marked graphs: trees, saturated graphs, loops."""

from dataclasses import dataclass
from enum import Enum

from app.services.dessin.marked_graph import MarkedGraph, graph_datum


class StructureClass(str, Enum):
    TREE = "tree"
    SATURATED = "saturated"
    TREE_WITH_END_LOOPS = "tree-with-end-loops"
    LOOP_PLUS_TREES = "loop-plus-trees"
    MIXED = "mixed"


@dataclass(frozen=True)
class StructureInfo:
    structure: StructureClass
    rk_h1: int
    loop_edges: int
    cycle_length: int | None
    one_sided: bool | None


def loop_edge_count(g: MarkedGraph) -> int:
    m = g.map
    return sum(1 for e in m.edges if m.vertex_of[e[0]] == m.vertex_of[e[1]])


def rk_h1(g: MarkedGraph) -> int:
    """First Betti number ``E - V + 1`` of the underlying graph, loops counted once each."""
    m = g.map
    return len(m.edges) - len(m.vertices) + 1


def core_vertices(g: MarkedGraph) -> set[int]:
    """Vertices of the 2-core: repeatedly strip vertices of degree one."""
    m = g.map
    degree = [len(v) for v in m.vertices]
    alive = [True] * len(m.vertices)
    stack = [i for i, deg in enumerate(degree) if deg == 1]
    while stack:
        i = stack.pop()
        if not alive[i] or degree[i] > 1:
            continue
        alive[i] = False
        for d in m.vertices[i]:
            j = m.vertex_of[m.alpha[d]]
            if alive[j]:
                degree[j] -= 1
                if degree[j] == 1:
                    stack.append(j)
    return {i for i, ok in enumerate(alive) if ok}


def _cycle_sides(g: MarkedGraph, core: set[int]) -> tuple[int, bool]:
    """Walk the unique cycle of a rank-one graph without loop edges.

    Returns the cycle length and whether every pendant tree leaves the cycle
    on the same side.
    """
    m = g.map
    on_core = [m.vertex_of[d] in core and m.vertex_of[m.alpha[d]] in core for d in range(m.dart_count)]
    start = min(core)
    out = next(d for d in m.vertices[start] if on_core[d])
    first_out = out
    sides = []
    length = 0
    while True:
        incoming = m.alpha[out]
        v = m.vertex_of[incoming]
        nxt = next(d for d in m.vertices[v] if on_core[d] and d != incoming)
        pendant = next(d for d in m.vertices[v] if d not in (incoming, nxt))
        sides.append(m.sigma[incoming] == pendant)
        length += 1
        out = nxt
        if out == first_out:
            break
    return length, len(set(sides)) == 1


def structure_class(g: MarkedGraph) -> StructureInfo:
    gd = graph_datum(g)
    rank = rk_h1(g)
    loops = loop_edge_count(g)
    cycle_length = None
    one_sided = None
    if rank == 0:
        structure = StructureClass.TREE
    elif gd.ends == 0:
        structure = StructureClass.SATURATED
    elif rank == 1:
        structure = StructureClass.LOOP_PLUS_TREES
        if loops == 1:
            cycle_length = 1
        else:
            cycle_length, one_sided = _cycle_sides(g, core_vertices(g))
    elif loops == rank:
        structure = StructureClass.TREE_WITH_END_LOOPS
    else:
        structure = StructureClass.MIXED
    return StructureInfo(
        structure=structure,
        rk_h1=rank,
        loop_edges=loops,
        cycle_length=cycle_length,
        one_sided=one_sided,
    )


def saturated_delta_conventions(g: MarkedGraph) -> dict[str, bool]:
    """Test ``delta == 12 * rank`` under both readings of the rank.

    ``"rk"`` uses the first Betti number, ``"rk-1"`` the Betti number minus one.
    """
    delta = graph_datum(g).delta
    rank = rk_h1(g)
    return {"rk": delta == 12 * rank, "rk-1": delta == 12 * (rank - 1)}
