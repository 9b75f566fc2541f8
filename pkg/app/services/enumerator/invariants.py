"""Invariant suite run over every enumerated graph."""

import logging

from app.schemas.reports import InvariantReport
from app.services.dessin.marked_graph import MarkedGraph, graph_datum
from app.services.dessin.refinement import rd_jgamma
from app.services.dessin.structure import StructureClass, saturated_delta_conventions, structure_class
from app.services.enumerator.generation import enumerate_tgamma
from app.services.maps.oriented_map import automorphisms, canonical_code, genus
from app.services.maps.permutations import perm_id
from app.services.subgroups.bridge import from_permutation_pair, to_permutation_pair

logger = logging.getLogger(__name__)


def half_delta_shape_holds(g: MarkedGraph) -> bool:
    """Shape forced by ``delta == ET / 2``.

    Either one cycle with trees attached and only B2 ends, or a tree with
    exactly three A2 ends (``3 a6 = a2 + 3 b2`` with ``a2 = 3``).
    """
    gd = graph_datum(g)
    info = structure_class(g)
    if info.rk_h1 == 1 and gd.a2 == 0 and gd.ends > 0:
        return True
    return is_three_a2_tree(g)


def is_three_a2_tree(g: MarkedGraph) -> bool:
    """Tree with three A2 ends and ``delta == ET / 2``, such as ``[A6+3A2]``."""
    gd = graph_datum(g)
    return 2 * gd.delta == gd.et and structure_class(g).structure is StructureClass.TREE and gd.a2 == 3


def check_graph(g: MarkedGraph) -> list[str]:
    """Every invariant violated by ``g``, as messages; empty when all hold."""
    gd = graph_datum(g)
    label = str(gd)
    problems = []
    if genus(g.map) != 0:
        problems.append(f"{label}: genus {genus(g.map)}")
    if gd.et % 12:
        problems.append(f"{label}: ET {gd.et} not divisible by 12")
    info = structure_class(g)
    if gd.delta < gd.et // 2 + 6 * (info.rk_h1 - 1):
        problems.append(f"{label}: delta {gd.delta} below ET/2 + 6(rk - 1)")
    if 2 * gd.delta == gd.et and not half_delta_shape_holds(g):
        problems.append(f"{label}: delta = ET/2 but shape is {info.structure.value}")
    if info.structure is StructureClass.SATURATED and not saturated_delta_conventions(g)["rk-1"]:
        problems.append(f"{label}: saturated graph with delta {gd.delta}, rank {info.rk_h1}")

    identity = perm_id(g.map.dart_count)
    for aut in automorphisms(g.map, g.marking):
        if aut != identity and any(aut[d] == d for d in g.end_darts):
            problems.append(f"{label}: automorphism fixes an end")
            break

    if gd.index == 0:
        return problems
    rep = to_permutation_pair(g)
    if rep.n != gd.index or 2 * rep.n != gd.delta:
        problems.append(f"{label}: index {rep.n} but delta {gd.delta}")
    rd = rd_jgamma(g)
    if rd != rep.cycle_types:
        problems.append(f"{label}: RD {rd} differs from cycle types {rep.cycle_types}")
    n = rep.n
    if not sum(rd.v0) == sum(rd.v1) == sum(rd.v_inf) == n:
        problems.append(f"{label}: RD {rd} does not sum to {n}")
    defect = sum(n - len(v) for v in (rd.v0, rd.v1, rd.v_inf))
    if defect != 2 * n - 2:
        problems.append(f"{label}: RD {rd} does not close at genus 0")
    back = from_permutation_pair(rep)
    if canonical_code(back.map, back.marking).canonical_code != canonical_code(g.map, g.marking).canonical_code:
        problems.append(f"{label}: graph -> permutation pair -> graph is not the identity class")
    return problems


def run_invariant_suite(et: int, jobs: int = 1) -> InvariantReport:
    graphs = enumerate_tgamma(et, modulo_reflection=False, jobs=jobs)
    report = InvariantReport(et=et, graphs_checked=len(graphs))
    for g in graphs:
        report.violations.extend(check_graph(g))
    saturated = [g for g in graphs if structure_class(g).structure is StructureClass.SATURATED]
    if saturated:
        by_rank = sum(saturated_delta_conventions(g)["rk"] for g in saturated)
        by_rank_minus_one = sum(saturated_delta_conventions(g)["rk-1"] for g in saturated)
        report.notes.append(
            f"saturated graphs: delta = 12 * rk on {by_rank}/{len(saturated)}, "
            f"delta = 12 * (rk - 1) on {by_rank_minus_one}/{len(saturated)}"
        )
    wide = sorted({str(graph_datum(g)) for g in graphs if is_three_a2_tree(g)})
    if wide:
        report.notes.append(
            f"delta = ET/2 on trees with three A2 ends ({', '.join(wide)}): "
            "accepted although the shape is not one cycle with B2 ends"
        )
    logger.info("Invariant suite ET=%d: %d graphs, %d violations", et, len(graphs), len(report.violations))
    return report
