"""Coset actions of the modular group and their marked graphs.

A finite-index subgroup of ``Z/3 * Z/2`` is recorded, up to conjugacy, by
the transitive action of the two generators on its cosets: ``sigma3`` of
order dividing 3 and ``sigma2`` of order dividing 2. The face permutation is
``sigma3 * sigma2`` applied left to right (``sigma3`` first).
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from app.core.exceptions import GenusNotZero, InvalidSubgroupError
from app.services.dessin.marked_graph import (
    GraphDatum,
    JGammaRamification,
    Mark,
    MarkedGraph,
    make_marked_graph,
)
from app.services.dessin.refinement import dart_colors
from app.services.maps.oriented_map import build_map
from app.services.maps.permutations import (
    Perm,
    best_relabellings,
    is_permutation,
    perm_compose,
    perm_conjugate,
    perm_cycle_type,
    perm_num_cycles,
    perm_order_divides,
    perms_are_transitive,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgroupRep:
    n: int
    sigma3: Perm
    sigma2: Perm

    @cached_property
    def face(self) -> Perm:
        return perm_compose(self.sigma3, self.sigma2)

    @property
    def euler_characteristic(self) -> int:
        """``2 - 2g`` of the quotient curve."""
        return perm_num_cycles(self.sigma3) + perm_num_cycles(self.sigma2) + perm_num_cycles(self.face) - self.n

    @property
    def genus(self) -> int:
        return (2 - self.euler_characteristic) // 2

    @property
    def cycle_types(self) -> JGammaRamification:
        return JGammaRamification(
            v0=perm_cycle_type(self.sigma3),
            v1=perm_cycle_type(self.sigma2),
            v_inf=perm_cycle_type(self.face),
        )

    @property
    def graph_datum(self) -> GraphDatum:
        """Census of the associated graph: 3-cycles and the fixed points of both generators."""
        fixed3 = sum(1 for i, x in enumerate(self.sigma3) if i == x)
        fixed2 = sum(1 for i, x in enumerate(self.sigma2) if i == x)
        return GraphDatum(a6=(self.n - fixed3) // 3, a2=fixed3, b2=fixed2)

    @cached_property
    def code(self) -> bytes:
        """Conjugacy-class key: minimal BFS-relabelled ``(sigma3, sigma2)``."""
        best, _ = best_relabellings([self.sigma3, self.sigma2])
        return b"".join(v.to_bytes(1, "big") for v in (self.n, *best))

    def conjugate(self, m: Sequence[int]) -> "SubgroupRep":
        return SubgroupRep(self.n, perm_conjugate(self.sigma3, m), perm_conjugate(self.sigma2, m))


def make_subgroup_rep(n: int, sigma3: Sequence[int], sigma2: Sequence[int]) -> SubgroupRep:
    """Validate orders and transitivity."""
    for name, p in (("sigma3", sigma3), ("sigma2", sigma2)):
        if not is_permutation(p, n):
            raise InvalidSubgroupError(f"{name} is not a permutation of {n} points", context={name: list(p)})
    if n < 1:
        raise InvalidSubgroupError("index must be positive", context={"n": n})
    if not perm_order_divides(sigma3, 3):
        raise InvalidSubgroupError("sigma3 does not have order dividing 3", context={"sigma3": list(sigma3)})
    if not perm_order_divides(sigma2, 2):
        raise InvalidSubgroupError("sigma2 does not have order dividing 2", context={"sigma2": list(sigma2)})
    if not perms_are_transitive([sigma3, sigma2], n):
        raise InvalidSubgroupError("the action is not transitive", context={"n": n})
    return SubgroupRep(n, tuple(sigma3), tuple(sigma2))


def to_permutation_pair(g: MarkedGraph) -> SubgroupRep:
    """Coset action of the subgroup whose graph is ``g``.

    Points are the darts at A-vertices, i.e. the edges of the bipartite
    refinement. ``sigma3`` is the rotation there; ``sigma2`` swaps the two
    halves of an A-A edge and fixes a dart leading to a B2 end.
    """
    m = g.map
    colors = dart_colors(g)
    points = [d for d in range(m.dart_count) if colors[d] == "A"]
    label = {d: i for i, d in enumerate(points)}
    sigma3 = [label[m.sigma[d]] for d in points]
    sigma2 = [label[m.alpha[d]] if colors[m.alpha[d]] == "A" else label[d] for d in points]
    return make_subgroup_rep(len(points), sigma3, sigma2)


def from_permutation_pair(rep: SubgroupRep) -> MarkedGraph:
    """Marked graph of a genus-0 coset action.

    Fixed points of ``sigma3`` become A2 ends; each fixed point of ``sigma2``
    gets a new dart carrying a B2 end.
    """
    if rep.genus != 0:
        raise GenusNotZero(f"permutation pair has genus {rep.genus}", context={"n": rep.n, "genus": rep.genus})
    sigma = list(rep.sigma3)
    alpha = list(rep.sigma2)
    marks: dict[int, Mark] = {}
    for p in range(rep.n):
        if rep.sigma3[p] == p:
            marks[p] = Mark.A2
        if rep.sigma2[p] == p:
            b = len(sigma)
            sigma.append(b)
            alpha.append(p)
            alpha[p] = b
            marks[b] = Mark.B2
    m = build_map(len(sigma), sigma, alpha)
    return make_marked_graph(m, marks)
