"""Explicit rational-map witnesses with exact ramification checks."""

from app.services.witness.constructions import (
    CASES,
    build_witness,
    construct_cube_sq,
    construct_deg3_loop,
    construct_deg4_a,
    construct_deg4_b,
    construct_deg5_thG,
    construct_sq_cube,
    construct_sq_even,
    parse_params,
    random_witnesses,
    witness_report,
)
from app.services.witness.polynomials import (
    MapWitness,
    make_witness,
    precompose_mobius,
    ram_profile,
    remaining_critical_points,
    rh_total,
)

__all__ = [
    "CASES",
    "MapWitness",
    "build_witness",
    "construct_cube_sq",
    "construct_deg3_loop",
    "construct_deg4_a",
    "construct_deg4_b",
    "construct_deg5_thG",
    "construct_sq_cube",
    "construct_sq_even",
    "make_witness",
    "parse_params",
    "precompose_mobius",
    "ram_profile",
    "random_witnesses",
    "remaining_critical_points",
    "rh_total",
    "witness_report",
]
