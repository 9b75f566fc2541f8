"""Pydantic schema for explicit map witnesses."""

from pydantic import BaseModel, Field


class WitnessReport(BaseModel):
    """An explicit rational map with its checked ramification.

    Coefficients are strings in ascending degree so that elements of
    quadratic fields survive the JSON round trip.
    """

    case: str
    field: str = "QQ"
    parameters: dict[str, str] = Field(default_factory=dict)
    degree: int = Field(..., ge=1)
    numerator: list[str]
    denominator: list[str]
    profiles: dict[str, list[int]]
    remaining: list[int] = Field(default_factory=list)
    expected: dict[str, list[int]] = Field(default_factory=dict)
    rh_total: int
    verified: bool = False
    notes: list[str] = Field(default_factory=list)
