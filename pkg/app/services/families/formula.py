"""Euler number of an elliptic surface from its j-map over ``M_Gamma``."""

from app.core.exceptions import ShapeMismatch
from app.services.dessin.marked_graph import GraphDatum
from app.services.families.ramification import RamDatum


def check_shape(gd: GraphDatum, rd: RamDatum) -> None:
    if len(rd.over_a) != gd.a2 or len(rd.over_b) != gd.b2:
        raise ShapeMismatch(
            f"{rd} has {len(rd.over_a)} A- and {len(rd.over_b)} B-vectors, {gd} has {gd.a2} and {gd.b2} ends",
            context={"gd": gd.render(), "rd": rd.render()},
        )


def alphas_betas(gd: GraphDatum, rd: RamDatum) -> tuple[int, int, int]:
    """``(alpha1, alpha2, beta1)``: entries over A2 ends that are 1 and 2 mod 3,
    and odd entries over B2 ends. Unramified preimages count."""
    check_shape(gd, rd)
    over_a = [e for p in rd.over_a for e in p]
    alpha1 = sum(1 for e in over_a if e % 3 == 1)
    alpha2 = sum(1 for e in over_a if e % 3 == 2)
    beta1 = sum(1 for p in rd.over_b for e in p if e % 2 == 1)
    return alpha1, alpha2, beta1


def surface_et(d: int, delta: int, alpha1: int, alpha2: int, beta1: int, ell: int) -> int:
    return d * delta + 8 * alpha2 + 4 * alpha1 + 6 * beta1 + 12 * ell


def record_et(gd: GraphDatum, rd: RamDatum, ell: int = 0) -> int:
    alpha1, alpha2, beta1 = alphas_betas(gd, rd)
    return surface_et(rd.degree, gd.delta, alpha1, alpha2, beta1, ell)


def is_special(gd: GraphDatum, rd: RamDatum) -> bool:
    """Whether ``ET(E) - 12 ell < deg(j_E) ET(Gamma)``.

    For entries up to 3 over A2 ends and up to 2 over B2 ends this is the
    same as having an entry divisible by 3 over an A2 end or an even entry
    over a B2 end.
    """
    return record_et(gd, rd) < rd.degree * gd.et


def is_group_covering(gd: GraphDatum, rd: RamDatum) -> bool:
    """Whether ``j_E`` itself covers modular curves, so the monodromy is a
    proper subgroup of ``Gamma``."""
    check_shape(gd, rd)
    if rd.unspecified:
        return False
    return all(e in (1, 3) for p in rd.over_a for e in p) and all(e in (1, 2) for p in rd.over_b for e in p)
