"""Pydantic schemas for family classification output."""

from typing import TYPE_CHECKING

from pydantic import BaseModel, Field

from app.schemas.records import MapRecord

if TYPE_CHECKING:
    from app.services.families.classifier import FamilyRecord


class FamilyRecordModel(BaseModel):
    """One family: ``gd | deg | RD (+ *)`` plus its flags."""

    gd: str
    degree: int = Field(..., ge=1)
    rd: str
    ell: int = Field(..., ge=0)
    et_surface: int
    special: bool
    generic: bool
    dimension: int = Field(..., ge=0)
    graph: MapRecord | None = None
    constellation: list[list[int]] | None = None
    notes: list[str] = Field(default_factory=list)

    @classmethod
    def from_record(cls, rec: "FamilyRecord") -> "FamilyRecordModel":
        return cls(
            gd=str(rec.gd),
            degree=rec.degree,
            rd=rec.rd.render(rec.ell),
            ell=rec.ell,
            et_surface=rec.et_surface,
            special=rec.special,
            generic=rec.generic,
            dimension=rec.dimension,
            graph=MapRecord.from_graph(rec.graph) if rec.graph is not None else None,
            constellation=[list(g) for g in rec.constellation.perms] if rec.constellation else None,
            notes=list(rec.notes),
        )


class ParametricFamily(BaseModel):
    """A family of rows described by constraints rather than listed."""

    gd: str
    surface: str
    degree_min: int
    degree_max: int
    constraints: list[str] = Field(default_factory=list)
    simple_points: str
    records: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)


class PublishedRowResult(BaseModel):
    """A quoted table row after normalization and lookup."""

    label: str
    gd: str
    degree: int
    published: str
    normalized: str | None = None
    status: str
    notes: list[str] = Field(default_factory=list)


class PublishedComparison(BaseModel):
    surface: str
    rows: list[PublishedRowResult] = Field(default_factory=list)
    extras: list[str] = Field(default_factory=list)
    parametric: list[ParametricFamily] = Field(default_factory=list)

    @property
    def status_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for row in self.rows:
            counts[row.status] = counts.get(row.status, 0) + 1
        return counts


class UnstableRow(BaseModel):
    """Graph datum and ramification of ``j_Gamma`` for a degree-one family."""

    gd: str
    rd: str
    graphs: int = Field(..., ge=1)
