"""Rational surfaces with ``deg(j_E) = 1`` coming from unstable Weierstrass data.

Here ``j_Gamma`` has a point over 0 with ramification ``(3,1)`` or ``(3)``,
so the index is 4 or 3, and only two more branch points are allowed, the
one over 1 with ramification at most 2. Riemann-Hurwitz leaves five
candidate triples; the Hurwitz search and the graph enumeration decide
which occur.
"""

import logging
from collections import Counter

from app.schemas.families import UnstableRow
from app.services.dessin.marked_graph import JGammaRamification, graph_datum
from app.services.dessin.refinement import rd_jgamma
from app.services.enumerator.generation import enumerate_tgamma
from app.services.families.classifier import integer_partitions
from app.services.hurwitz.constellations import make_branch_profile, realizable

logger = logging.getLogger(__name__)

_OVER_ZERO = {4: (3, 1), 3: (3,)}


def unstable_candidates() -> list[JGammaRamification]:
    """Triples closing Riemann-Hurwitz at genus 0 under the constraints above."""
    out = []
    for n, v0 in _OVER_ZERO.items():
        parts = integer_partitions(n)
        for v1 in parts:
            if max(v1) > 2:
                continue
            for v_inf in parts:
                defect = sum(n - len(v) for v in (v0, v1, v_inf))
                if defect == 2 * n - 2:
                    out.append(JGammaRamification(v0, v1, v_inf))
    return out


def unstable_rational_table(jobs: int = 1) -> list[UnstableRow]:
    """Graph data and ``RD(j_Gamma)`` of the degree-one families, one row per datum."""
    survivors = []
    for rd in unstable_candidates():
        profile = make_branch_profile(sum(rd.v0), [rd.v0, rd.v1, rd.v_inf])
        if realizable(profile) is None:
            logger.info("Unstable table: %s is not realizable, dropped", rd)
            continue
        survivors.append(rd)

    found: Counter = Counter()
    for et in (12, 24):
        for g in enumerate_tgamma(et, modulo_reflection=True, jobs=jobs):
            gd = graph_datum(g)
            if not 3 <= gd.index <= 4:
                continue
            rd = rd_jgamma(g)
            if rd in survivors:
                found[(gd, rd)] += 1

    missing = [rd for rd in survivors if not any(key[1] == rd for key in found)]
    if missing:
        logger.warning("Unstable table: no graph realizes %s", ", ".join(map(str, missing)))
    rows = [UnstableRow(gd=str(gd), rd=rd.render(), graphs=count) for (gd, rd), count in found.items()]
    return sorted(rows, key=lambda row: (row.rd, row.gd), reverse=True)
