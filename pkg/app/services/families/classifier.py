"""Families of Jacobian elliptic surfaces over P^1 with given monodromy.

A family is fixed by the graph datum of its monodromy group, the
ramification of ``j_E`` over ``M_Gamma`` and the number ``ell`` of extra
*-fibers. A surface with ``chi = 12 r`` has ``ET(E) = 24 r``; ``r = 1`` are
rational surfaces, ``r = 2`` K3 surfaces.
"""

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from sympy.utilities.iterables import partitions

from app.core.config import get_settings
from app.core.exceptions import InvariantViolation
from app.core.metrics import timed
from app.services.dessin.marked_graph import GraphDatum, MarkedGraph, graph_datum
from app.services.enumerator.generation import VALID_ET, enumerate_tgamma, vertex_signatures
from app.services.families.degenerations import degenerations, is_degeneration_of
from app.services.families.formula import is_group_covering, is_special, record_et
from app.services.families.ramification import RamDatum
from app.services.hurwitz.constellations import Constellation, realizable
from app.services.maps.permutations import Partition

logger = logging.getLogger(__name__)

SURFACES = {1: "rational", 2: "k3"}


@dataclass(frozen=True)
class FamilyRecord:
    gd: GraphDatum
    rd: RamDatum
    ell: int
    et_surface: int
    special: bool
    generic: bool = True
    dimension: int = 0
    graph: MarkedGraph | None = field(default=None, compare=False)
    constellation: Constellation | None = field(default=None, compare=False)
    notes: tuple[str, ...] = field(default=(), compare=False)

    @property
    def degree(self) -> int:
        return self.rd.degree

    def render(self) -> str:
        return f"{self.gd} | {self.degree} | {self.rd.render(self.ell)}"


def integer_partitions(n: int) -> list[Partition]:
    """Partitions of ``n`` as descending tuples, largest first."""
    out = [tuple(sorted((k for k, m in p.items() for _ in range(m)), reverse=True)) for p in partitions(n)]
    return sorted(out, reverse=True)


def component_dimension(rd: RamDatum, ell: int) -> int:
    """Free branch points plus free *-fiber positions."""
    return len(rd.unspecified) + ell


def candidate_graph_data(max_et: int) -> list[GraphDatum]:
    """Graph data of proper finite-index subgroups with ``ET <= max_et``."""
    out = []
    for et in VALID_ET:
        if et > max_et:
            continue
        for a6, k in vertex_signatures(et):
            for a2 in range(k + 1):
                gd = GraphDatum(a6, a2, k - a2)
                if gd.is_realizable() and gd.index >= 2:
                    out.append(gd)
    return sorted(out, key=lambda gd: (gd.et, gd))


def _check_r(r: int) -> None:
    if r not in SURFACES:
        raise ValueError(f"r must be 1 (rational) or 2 (K3), got {r}")


def _candidates(gd: GraphDatum, r: int, max_ell: int):
    """``(rd, ell)`` with ``ET(E) = 24 r`` and generic simple branching elsewhere."""
    target = 24 * r
    for d in range(2, target // gd.delta + 1):
        parts = integer_partitions(d)
        for over_a in itertools.combinations_with_replacement(parts, gd.a2):
            for over_b in itertools.combinations_with_replacement(parts, gd.b2):
                end_defect = sum(d - len(p) for p in (*over_a, *over_b))
                simple = 2 * d - 2 - end_defect
                if simple < 0:
                    continue
                rd = RamDatum(d, tuple(over_a), tuple(over_b), ((2,),) * simple)
                rest = target - record_et(gd, rd)
                if rest < 0 or rest % 12 or rest // 12 > max_ell:
                    continue
                yield rd, rest // 12


def _collisions(rd: RamDatum) -> list[RamDatum]:
    """Degenerations of ``rd`` in which only branch points away from the ends collide."""
    base = rd.canonical()
    return [low for low in degenerations(base) if low.over_a == base.over_a and low.over_b == base.over_b]


def representative_graph(gd: GraphDatum) -> MarkedGraph | None:
    """First enumerated graph, up to reflection, whose datum is ``gd``."""
    return next((g for g in enumerate_tgamma(gd.et, modulo_reflection=True) if graph_datum(g) == gd), None)


def _classify_datum(gd: GraphDatum, r: int, max_ell: int, collisions: bool = False) -> list[FamilyRecord]:
    candidates = dict(_candidates(gd, r, max_ell))
    if collisions:
        # end vectors are unchanged, so ET(E) and ell carry over
        for rd, ell in list(candidates.items()):
            for low in _collisions(rd):
                candidates.setdefault(low, ell)
    records = []
    for rd, ell in candidates.items():
        if not is_special(gd, rd) or is_group_covering(gd, rd):
            continue
        et = record_et(gd, rd, ell)
        if et < gd.et:
            raise InvariantViolation(
                f"{gd} {rd.render(ell)} gives ET(E) = {et} below ET(Gamma) = {gd.et}",
                context={"gd": gd.render(), "rd": rd.render(ell)},
            )
        found = realizable(rd.branch_profile())
        if found is None:
            logger.debug("Classifier: %s %s is not realizable", gd, rd.render(ell))
            continue
        records.append(
            FamilyRecord(
                gd=gd,
                rd=rd,
                ell=ell,
                et_surface=et,
                special=True,
                dimension=component_dimension(rd, ell),
                constellation=found,
            )
        )

    graph = representative_graph(gd) if records else None
    marked = []
    for rec in records:
        lower = any(
            other.degree == rec.degree and other.ell == rec.ell and is_degeneration_of(rec.rd, other.rd)
            for other in records
        )
        marked.append(replace(rec, generic=not lower, graph=graph))
    return marked


def _sort_key(rec: FamilyRecord):
    return (rec.gd.et, rec.gd, -rec.degree, rec.ell, not rec.generic, rec.rd)


def classify_special(
    r: int,
    gd: GraphDatum | None = None,
    include_degenerations: bool = False,
    jobs: int = 1,
) -> list[FamilyRecord]:
    """Special families with ``ET(E) = 24 r``, over one graph datum or all.

    Kept records are special, not group coverings and realizable by a branched
    cover of P^1. By default only generic records are returned, those that are
    not degenerations of another record with the same degree and ``ell``.
    With ``include_degenerations`` the non-generic records are kept as well,
    including collisions of the simple branch points among themselves, such
    as two ``(2)`` merging into a ``(3)`` or a ``(2,2)``.
    """
    _check_r(r)
    settings = get_settings()
    scope = [gd] if gd is not None else candidate_graph_data(24 * r)
    scope = [g for g in scope if g.is_realizable() and g.index >= 2]
    with timed("classify"):
        if jobs > 1 and len(scope) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                n = len(scope)
                chunks = list(
                    pool.map(_classify_datum, scope, [r] * n, [settings.CLASSIFY_MAX_ELL] * n, [include_degenerations] * n)
                )
        else:
            chunks = [_classify_datum(g, r, settings.CLASSIFY_MAX_ELL, include_degenerations) for g in scope]
    records = [rec for chunk in chunks for rec in chunk if include_degenerations or rec.generic]
    records.sort(key=_sort_key)
    logger.info(
        "Classified %s special families: %d records over %d graph data",
        SURFACES[r],
        len(records),
        len(scope),
    )
    return records


def general_family(g: MarkedGraph, r: int, ell: int) -> FamilyRecord | None:
    """The general family: unramified over every end, simple branching elsewhere."""
    _check_r(r)
    if not 0 <= ell <= 3:
        return None
    gd = graph_datum(g)
    rest = 24 * r - 12 * ell
    if rest <= 0 or rest % gd.et:
        return None
    d = rest // gd.et
    rd = RamDatum(d, ((1,) * d,) * gd.a2, ((1,) * d,) * gd.b2, ((2,),) * (2 * d - 2))
    return FamilyRecord(
        gd=gd,
        rd=rd,
        ell=ell,
        et_surface=record_et(gd, rd, ell),
        special=False,
        dimension=component_dimension(rd, ell),
        graph=g,
    )
