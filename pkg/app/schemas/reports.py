"""Pydantic schemas for check and comparison reports."""

from pydantic import BaseModel, Field


class BreakdownComparisonRow(BaseModel):
    """One quoted structural count against both equivalence settings."""

    label: str
    category: str
    published: int = Field(..., ge=0)
    orientation_count: int = Field(..., ge=0)
    reflection_count: int = Field(..., ge=0)
    matches: list[str] = Field(default_factory=list)

    @property
    def discrepancy(self) -> bool:
        return not self.matches


class DualOracleReport(BaseModel):
    """Graph enumeration against coset-action enumeration."""

    et_values: list[int]
    max_index: int
    classes: int = 0
    agree: bool
    only_graphs: list[str] = Field(default_factory=list)
    only_subgroups: list[str] = Field(default_factory=list)


class InvariantReport(BaseModel):
    """Outcome of the per-graph invariant suite over one enumeration."""

    et: int
    graphs_checked: int = 0
    violations: list[str] = Field(default_factory=list)
    notes: list[str] = Field(default_factory=list)

    @property
    def status(self) -> str:
        return "PASS" if not self.violations else "FAIL"
