"""Pydantic schemas for map and subgroup records at the JSON boundary."""

from pydantic import BaseModel, Field, field_validator

from app.services.dessin.marked_graph import Mark, MarkedGraph, make_marked_graph
from app.services.maps.oriented_map import build_map
from app.services.subgroups.bridge import SubgroupRep, make_subgroup_rep


class MapRecord(BaseModel):
    """A marked map: ``{"darts", "sigma", "alpha", "marks"}``.

    ``marks`` is keyed by the smallest dart of each marked vertex, as a string.
    """

    darts: int = Field(..., ge=0)
    sigma: list[int]
    alpha: list[int]
    marks: dict[str, Mark] = Field(default_factory=dict)

    @field_validator("marks")
    @classmethod
    def validate_mark_keys(cls, v: dict[str, Mark]) -> dict[str, Mark]:
        """Mark keys must be dart indices."""
        for key in v:
            if not key.isdigit():
                raise ValueError(f"mark key {key!r} is not a dart index")
        return v

    @classmethod
    def from_graph(cls, g: MarkedGraph) -> "MapRecord":
        return cls(
            darts=g.map.dart_count,
            sigma=list(g.map.sigma),
            alpha=list(g.map.alpha),
            marks={str(d): mark for d, mark in g.marks},
        )

    def to_graph(self) -> MarkedGraph:
        """Rebuild and revalidate the marked graph."""
        m = build_map(self.darts, self.sigma, self.alpha)
        return make_marked_graph(m, {int(k): v for k, v in self.marks.items()})


class SubgroupRecord(BaseModel):
    """A coset action: ``{"n", "sigma3", "sigma2"}``."""

    n: int = Field(..., ge=1)
    sigma3: list[int]
    sigma2: list[int]

    @classmethod
    def from_rep(cls, rep: SubgroupRep) -> "SubgroupRecord":
        return cls(n=rep.n, sigma3=list(rep.sigma3), sigma2=list(rep.sigma2))

    def to_rep(self) -> SubgroupRep:
        return make_subgroup_rep(self.n, self.sigma3, self.sigma2)


class GraphSummary(BaseModel):
    """Invariants reported by ``invariants`` and ``enumerate --format table``."""

    gd: str
    et: int
    delta: int
    index: int
    rd: str
    structure: str
    rk_h1: int
    automorphisms: int
