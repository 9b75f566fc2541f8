"""Coset actions of the modular group and the graph correspondence."""

from app.services.subgroups.bridge import (
    SubgroupRep,
    from_permutation_pair,
    make_subgroup_rep,
    to_permutation_pair,
)
from app.services.subgroups.enumeration import enumerate_subgroups

__all__ = [
    "SubgroupRep",
    "enumerate_subgroups",
    "from_permutation_pair",
    "make_subgroup_rep",
    "to_permutation_pair",
]
