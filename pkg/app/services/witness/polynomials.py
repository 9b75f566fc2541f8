"""Exact rational maps P^1 -> P^1 and their ramification.

Polynomials are sympy ``Poly`` objects over ``QQ`` or a quadratic field
``QQ(sqrt(D))``. Multiplicities come from repeated gcds with the derivative,
and the point at infinity is read off degree deficits.
"""

from dataclasses import dataclass
from functools import lru_cache

from sympy import Poly, QQ, Symbol, sqrt
from sympy.polys.domains import Domain

from app.core.exceptions import DegenerateParameters, NotCoprime

x = Symbol("x")

TARGETS = ("0", "1", "inf")


@lru_cache(maxsize=None)
def field_domain(radicand: int | None = None) -> Domain:
    """``QQ`` or ``QQ(sqrt(radicand))``."""
    if radicand is None:
        return QQ
    return QQ.algebraic_field(sqrt(radicand))


def field_label(radicand: int | None) -> str:
    return "QQ" if radicand is None else f"QQ(sqrt({radicand}))"


def poly(expr, radicand: int | None = None) -> Poly:
    return Poly(expr, x, domain=field_domain(radicand))


@dataclass(frozen=True)
class MapWitness:
    """``f = numerator / denominator`` with coprime polynomials."""

    numerator: Poly
    denominator: Poly
    field: str = "QQ"

    @property
    def degree(self) -> int:
        return max(self.numerator.degree(), self.denominator.degree())

    def fiber_polynomial(self, target: str) -> Poly:
        if target == "0":
            return self.numerator
        if target == "1":
            return self.numerator - self.denominator
        if target == "inf":
            return self.denominator
        raise ValueError(f"unknown target {target!r}")

    def coefficients(self) -> dict[str, list[str]]:
        """Coefficient arrays in ascending degree."""
        return {
            "numerator": [str(c) for c in reversed(self.numerator.all_coeffs())],
            "denominator": [str(c) for c in reversed(self.denominator.all_coeffs())],
        }


def make_witness(numerator: Poly, denominator: Poly, field: str = "QQ") -> MapWitness:
    if denominator.is_zero:
        raise DegenerateParameters("denominator vanishes identically")
    common = numerator.gcd(denominator)
    if common.degree() > 0:
        raise NotCoprime(
            f"numerator and denominator share the factor {common.as_expr()}",
            context={"gcd": str(common.as_expr())},
        )
    w = MapWitness(numerator, denominator, field)
    if w.degree < 1:
        raise DegenerateParameters("map is constant", context={"degree": w.degree})
    return w


def squarefree_factors(p: Poly) -> list[tuple[Poly, int]]:
    """``[(z_i, i)]`` with ``p = c * prod z_i^i`` and each ``z_i`` squarefree."""
    if p.degree() <= 0:
        return []
    g = p.gcd(p.diff())
    w = p.exquo(g)
    out = []
    i = 1
    while w.degree() > 0:
        y = w.gcd(g)
        z = w.exquo(y)
        if z.degree() > 0:
            out.append((z, i))
        w = y
        g = g.exquo(y)
        i += 1
    return out


def ram_profile(w: MapWitness, target: str) -> tuple[int, ...]:
    """Ramification orders over ``target``, including the point at infinity."""
    p = w.fiber_polynomial(target)
    entries = [i for z, i in squarefree_factors(p) for _ in range(z.degree())]
    deficit = w.degree - max(p.degree(), 0)
    if deficit > 0:
        entries.append(deficit)
    return tuple(sorted(entries, reverse=True))


def _infinity_is_special(w: MapWitness) -> bool:
    d = w.degree
    return any(w.fiber_polynomial(t).degree() < d for t in TARGETS)


def remaining_critical_points(w: MapWitness) -> tuple[int, ...]:
    """Ramification orders at critical points outside the fibers over 0, 1, infinity."""
    n, dd = w.numerator, w.denominator
    wronskian = n.diff() * dd - n * dd.diff()
    rest = wronskian
    for target in TARGETS:
        for z, i in squarefree_factors(w.fiber_polynomial(target)):
            if i > 1:
                rest = rest.exquo(z ** (i - 1))
    entries = [i + 1 for z, i in squarefree_factors(rest) for _ in range(z.degree())]
    if not _infinity_is_special(w):
        at_infinity = 2 * w.degree - 2 - wronskian.degree()
        if at_infinity > 0:
            entries.append(at_infinity + 1)
    return tuple(sorted(entries, reverse=True))


def rh_total(w: MapWitness) -> int:
    """Total ramification; Riemann-Hurwitz for P^1 -> P^1 requires ``2 deg - 2``."""
    d = w.degree
    special = sum(d - len(ram_profile(w, t)) for t in TARGETS)
    return special + sum(e - 1 for e in remaining_critical_points(w))


def precompose_mobius(w: MapWitness, a, b, c, e) -> MapWitness:
    """``f((a x + b) / (c x + e))`` as a quotient of forms of degree ``deg f``."""
    domain = w.numerator.domain
    d = w.degree
    top = Poly(a * x + b, x, domain=domain)
    bottom = Poly(c * x + e, x, domain=domain)

    def homogenize(p: Poly) -> Poly:
        total = Poly(0, x, domain=domain)
        for i, coeff in enumerate(reversed(p.all_coeffs())):
            total += top**i * bottom ** (d - i) * coeff
        return total

    return make_witness(homogenize(w.numerator), homogenize(w.denominator), w.field)
