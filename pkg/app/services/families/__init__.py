"""Classification of special and general families of elliptic surfaces."""

from app.services.families.classifier import (
    FamilyRecord,
    candidate_graph_data,
    classify_special,
    component_dimension,
    general_family,
    integer_partitions,
)
from app.services.families.degenerations import degenerations, elementary_moves, is_degeneration_of
from app.services.families.formula import alphas_betas, is_group_covering, is_special, record_et, surface_et
from app.services.families.published import (
    PUBLISHED_ROWS,
    compare_with_published,
    normalize_published,
    parametric_description,
)
from app.services.families.ramification import RamDatum, make_ram_datum, parse_rd, split_stars
from app.services.families.unstable import unstable_candidates, unstable_rational_table

__all__ = [
    "FamilyRecord",
    "PUBLISHED_ROWS",
    "RamDatum",
    "alphas_betas",
    "candidate_graph_data",
    "classify_special",
    "compare_with_published",
    "component_dimension",
    "degenerations",
    "elementary_moves",
    "general_family",
    "integer_partitions",
    "is_degeneration_of",
    "is_group_covering",
    "is_special",
    "make_ram_datum",
    "normalize_published",
    "parametric_description",
    "parse_rd",
    "record_et",
    "split_stars",
    "surface_et",
    "unstable_candidates",
    "unstable_rational_table",
]
