"""Marked trivalent sphere graphs and their invariants."""

from app.services.dessin.marked_graph import (
    GraphDatum,
    JGammaRamification,
    Mark,
    MarkedGraph,
    delta_gamma,
    et_gamma,
    graph_datum,
    index,
    make_marked_graph,
    parse_gd,
    to_dot,
)
from app.services.dessin.refinement import bipartite_refinement, rd_jgamma
from app.services.dessin.structure import StructureClass, structure_class

__all__ = [
    "GraphDatum",
    "JGammaRamification",
    "Mark",
    "MarkedGraph",
    "StructureClass",
    "bipartite_refinement",
    "delta_gamma",
    "et_gamma",
    "graph_datum",
    "index",
    "make_marked_graph",
    "parse_gd",
    "rd_jgamma",
    "structure_class",
    "to_dot",
]
