"""Enumeration of marked trivalent sphere graphs and its cross-checks."""

from app.services.enumerator.breakdown import (
    breakdown_category,
    breakdown_counts,
    compare_breakdown_with_published,
    tree_shape_count,
)
from app.services.enumerator.generation import VALID_ET, enumerate_tgamma, planar_maps
from app.services.enumerator.invariants import check_graph, run_invariant_suite
from app.services.enumerator.oracle import dual_oracle_report

__all__ = [
    "VALID_ET",
    "breakdown_category",
    "breakdown_counts",
    "check_graph",
    "compare_breakdown_with_published",
    "dual_oracle_report",
    "enumerate_tgamma",
    "planar_maps",
    "run_invariant_suite",
    "tree_shape_count",
]
