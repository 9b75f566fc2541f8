"""Branch data and permutation constellations."""

from app.services.hurwitz.constellations import (
    BranchProfile,
    Constellation,
    class_size,
    is_simple,
    make_branch_profile,
    parse_profiles,
    permutations_of_type,
    realizable,
    rh_genus,
)

__all__ = [
    "BranchProfile",
    "Constellation",
    "class_size",
    "is_simple",
    "make_branch_profile",
    "parse_profiles",
    "permutations_of_type",
    "realizable",
    "rh_genus",
]
