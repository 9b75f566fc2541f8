"""Cross-check of graph enumeration against coset-action enumeration."""

import logging
from collections import Counter
from typing import Iterable

from app.schemas.reports import DualOracleReport
from app.services.dessin.marked_graph import graph_datum
from app.services.dessin.refinement import rd_jgamma
from app.services.enumerator.generation import enumerate_tgamma
from app.services.subgroups.enumeration import enumerate_subgroups

logger = logging.getLogger(__name__)

Signature = tuple[int, str, str]


def graph_signatures(et_values: Iterable[int], max_index: int, jobs: int = 1) -> Counter[Signature]:
    """``(index, GD, RD)`` over enumerated graphs, orientation-preserving classes."""
    counts: Counter[Signature] = Counter()
    for et in et_values:
        for g in enumerate_tgamma(et, modulo_reflection=False, jobs=jobs):
            gd = graph_datum(g)
            if not 1 <= gd.index <= max_index:
                continue
            counts[(gd.index, gd.render(), rd_jgamma(g).render())] += 1
    return counts


def subgroup_signatures(et_values: Iterable[int], max_index: int, jobs: int = 1) -> Counter[Signature]:
    """``(index, GD, RD)`` over genus-0 conjugacy classes whose graph has ET in ``et_values``."""
    wanted = set(et_values)
    counts: Counter[Signature] = Counter()
    for rep in enumerate_subgroups(max_index, genus_filter=0, jobs=jobs):
        gd = rep.graph_datum
        if gd.et not in wanted:
            continue
        counts[(rep.n, gd.render(), rep.cycle_types.render())] += 1
    return counts


def dual_oracle_report(et_values: Iterable[int] = (12, 24, 36), max_index: int = 12, jobs: int = 1) -> DualOracleReport:
    """Compare both enumerations as multisets; ``agree`` is exact equality."""
    et_values = tuple(et_values)
    graphs = graph_signatures(et_values, max_index, jobs)
    subgroups = subgroup_signatures(et_values, max_index, jobs)
    only_graphs = graphs - subgroups
    only_subgroups = subgroups - graphs
    report = DualOracleReport(
        et_values=list(et_values),
        max_index=max_index,
        classes=sum(graphs.values()),
        agree=not only_graphs and not only_subgroups,
        only_graphs=[f"{n} {gd} {rd} x{c}" for (n, gd, rd), c in sorted(only_graphs.items())],
        only_subgroups=[f"{n} {gd} {rd} x{c}" for (n, gd, rd), c in sorted(only_subgroups.items())],
    )
    if report.agree:
        logger.info("Dual oracle agrees on %d classes (ET %s, index <= %d)", report.classes, et_values, max_index)
    else:
        logger.warning("Dual oracle disagreement: %s / %s", report.only_graphs, report.only_subgroups)
    return report
