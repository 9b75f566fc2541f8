"""Explicit rational maps realizing special ramification data.

Each ``construct_*`` returns a verified ``MapWitness`` or raises: identity
failures are ``VerificationFailed``, parameter choices that collapse the
ramification are ``DegenerateParameters``.
"""

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from sympy import Rational, expand, solve, sqrt, symbols

from app.core.exceptions import (
    DegenerateParameters,
    NoRationalPoint,
    NotCoprime,
    VerificationFailed,
)
from app.core.metrics import timed
from app.schemas.witness import WitnessReport
from app.services.maps.permutations import Partition
from app.services.witness.polynomials import (
    TARGETS,
    MapWitness,
    field_label,
    make_witness,
    poly,
    ram_profile,
    remaining_critical_points,
    rh_total,
    x,
)

logger = logging.getLogger(__name__)

Coefficients = Sequence[Rational]

# Primitive cube root of unity in QQ(sqrt(-3)).
ZETA = (-1 + sqrt(-3)) / 2
ZETA_SQUARED = (-1 - sqrt(-3)) / 2
INV_ZETA_MINUS_ONE = (-3 - sqrt(-3)) / 6


def q(value) -> Rational:
    """Exact rational from an int, ``Fraction`` or ``"a/b"`` string."""
    return Rational(str(value))


def _expr(coeffs: Coefficients):
    return sum((q(c) * x**i for i, c in enumerate(coeffs)), q(0))


def profiles(w: MapWitness) -> dict[str, Partition]:
    return {t: ram_profile(w, t) for t in TARGETS}


def _check_rh(w: MapWitness) -> None:
    total = rh_total(w)
    if total != 2 * w.degree - 2:
        raise VerificationFailed(
            f"total ramification {total} differs from 2*{w.degree}-2",
            context={"degree": w.degree, "rh_total": total},
        )


def _require(w: MapWitness, expected: dict[str, Partition], remaining: Partition | None = None) -> MapWitness:
    _check_rh(w)
    got = profiles(w)
    rest = remaining_critical_points(w)
    if got != expected or (remaining is not None and rest != remaining):
        raise DegenerateParameters(
            "parameters change the ramification datum",
            context={"profiles": got, "remaining": rest, "expected": expected},
        )
    return w


def _coprime(numerator, denominator, label: str) -> MapWitness:
    try:
        return make_witness(numerator, denominator, label)
    except NotCoprime as exc:
        raise DegenerateParameters(exc.message, context=exc.context) from exc


# Squares and cubes splitting a difference


def _split(power: int, g11: Coefficients, g11p: Coefficients, g12: Coefficients, g12p: Coefficients) -> MapWitness:
    a = poly(_expr(g11)) ** power * poly(_expr(g11p))
    b = poly(_expr(g12)) ** power * poly(_expr(g12p))
    f0 = (a + b).exquo_ground(2)
    f_inf = (b - a).exquo_ground(2)
    w = make_witness(f0**2, f_inf**2)
    if w.numerator - w.denominator != a * b:
        raise VerificationFailed("f0^2 - f_inf^2 does not split as required")
    _check_rh(w)
    for target in ("0", "inf"):
        if any(e % 2 for e in ram_profile(w, target)):
            raise VerificationFailed(f"odd ramification over {target}", context={"profile": ram_profile(w, target)})
    return w


def construct_sq_even(g11: Coefficients, g11p: Coefficients, g12: Coefficients, g12p: Coefficients) -> MapWitness:
    """``f0^2 - f_inf^2 = g1^2 g1'`` with ``f0 -+ f_inf = g1j^2 g1j'``; ``f = f0^2 / f_inf^2``."""
    return _split(2, g11, g11p, g12, g12p)


def construct_sq_cube(g11: Coefficients, g11p: Coefficients, g12: Coefficients, g12p: Coefficients) -> MapWitness:
    """``f0^2 - f_inf^2 = g1^3 g1'`` with ``f0 -+ f_inf = g1j^3 g1j'``."""
    return _split(3, g11, g11p, g12, g12p)


def conic_point(p: Coefficients, q_: Coefficients, s: Coefficients):
    """Polynomial point on ``-zeta u^2 - zeta^2 v^2 = w^2`` along the line from
    ``(1, 1, 1)`` in direction ``(p, q, s)``."""
    P, Q, S = _expr(p), _expr(q_), _expr(s)
    norm = -ZETA * P**2 - ZETA_SQUARED * Q**2 - S**2
    pairing = -ZETA * P - ZETA_SQUARED * Q - S
    return tuple(expand(norm - 2 * pairing * d) for d in (P, Q, S))


def construct_cube_sq(p: Coefficients, s: Coefficients, q_: Coefficients = (0,)) -> MapWitness:
    """``f0^3 - f_inf^3 = (g1 g2 g3)^2`` over ``QQ(sqrt(-3))``; ``f = f0^3 / f_inf^3``.

    ``f0 - zeta^k f_inf = g_{k+1}^2`` with ``(g1, g2, g3)`` on a conic.
    """
    label = field_label(-3)
    g1, g2, g3 = (poly(e, -3) for e in conic_point(p, q_, s))
    if all(g.is_zero for g in (g1, g2, g3)) or g1 == g2 == g3:
        raise NoRationalPoint("direction is tangent to the conic at the base point")
    if poly(-ZETA, -3) * g1**2 + poly(-ZETA_SQUARED, -3) * g2**2 != g3**2:
        raise VerificationFailed("conic point does not satisfy the conic")
    f_inf = (g1**2 - g2**2) * poly(INV_ZETA_MINUS_ONE, -3)
    f0 = g1**2 + f_inf
    w = make_witness(f0**3, f_inf**3, label)
    if w.numerator - w.denominator != (g1 * g2 * g3) ** 2:
        raise VerificationFailed("f0^3 - f_inf^3 is not the square of g1 g2 g3")
    _check_rh(w)
    for target in ("0", "inf"):
        if any(e % 3 for e in ram_profile(w, target)):
            raise VerificationFailed(f"ramification over {target} not divisible by 3")
    if any(e % 2 for e in ram_profile(w, "1")):
        raise VerificationFailed("odd ramification over 1")
    return w


# Degree five, three (2,2,1) points


def deg5_pair(s, sign: int = 1, t=1):
    """``F1 = (x^2+X1 x+Y1)^2 (x+1)``, ``F2 = (x^2+X2 x+Y2)^2 (x+s^2)`` with
    ``F1 - F2`` divisible by ``x^2`` and of degree at most 3."""
    s, t = q(s), q(t)
    if sign not in (1, -1):
        raise ValueError("sign must be 1 or -1")
    if s in (0, 1, -1):
        raise DegenerateParameters("s must avoid 0 and +-1", context={"s": str(s)})
    x2 = t
    y2 = 2 * s * t / (s + sign) - sign * s
    if y2 == 0:
        raise DegenerateParameters("quadratic factor vanishes at 0", context={"s": str(s), "t": str(t)})
    x1 = t + (s**2 - 1) / 2
    y1 = sign * s * y2
    f1 = poly((x**2 + x1 * x + y1) ** 2 * (x + 1))
    f2 = poly((x**2 + x2 * x + y2) ** 2 * (x + s**2))
    return f1, f2


def deg5_identity_coefficients(s, sign: int = 1, t=1) -> tuple[Rational, Rational, Rational]:
    """Coefficients of ``x^4``, ``x`` and ``1`` in ``F1 - F2``; all zero."""
    f1, f2 = deg5_pair(s, sign, t)
    coeffs = list(reversed((f1 - f2).all_coeffs())) + [0] * 6
    return q(coeffs[4]), q(coeffs[1]), q(coeffs[0])


def construct_deg5_thG(s, sign: int = 1, t=1) -> MapWitness:
    """Degree 5 with ``(2,2,1)`` over 0, 1 and infinity and two simple points."""
    f1, f2 = deg5_pair(s, sign, t)
    if any(c != 0 for c in deg5_identity_coefficients(s, sign, t)) or (f1 - f2).degree() > 3:
        raise VerificationFailed("F1 - F2 is not c1 x^2 (x + c2)")
    w = _coprime(f1, f2, "QQ")
    return _require(w, {"0": (2, 2, 1), "1": (2, 2, 1), "inf": (2, 2, 1)}, (2, 2))


def deg5_sign_branches(s, t=1) -> list[int]:
    """Signs for which the degree 5 construction at ``(s, t)`` goes through."""
    out = []
    for sign in (1, -1):
        try:
            construct_deg5_thG(s, sign, t)
        except DegenerateParameters:
            continue
        out.append(sign)
    return out


# Degree four, (2,2) over 0 at x = +-1


def _deg4(c1, c2, c3, over_one: Partition, remaining: Partition) -> MapWitness:
    f1 = poly((x**2 - 1) ** 2)
    f2 = poly((x + c1) * (x + c2) * (x + c3) ** 2)
    if (f1 - f2).degree() > 4 - over_one[0]:
        raise VerificationFailed("f1 - f2 has too large a degree", context={"degree": (f1 - f2).degree()})
    w = _coprime(f1, f2, "QQ")
    return _require(w, {"0": (2, 2), "1": over_one, "inf": (2, 1, 1)}, remaining)


def construct_deg4_a(c1, c2) -> MapWitness:
    """``(x^2-1)^2 / ((x+c1)(x+c2)(x+c3)^2)`` with ``c1 + c2 + 2 c3 = 0``.

    Infinity lies over 1 with multiplicity 2.
    """
    c1, c2 = q(c1), q(c2)
    return _deg4(c1, c2, -(c1 + c2) / 2, (2, 1, 1), (2, 2))


def deg4_b_parameters(m) -> tuple[Rational, Rational, Rational]:
    """Points of ``c1 + c2 + 2 c3 = 0``, ``e2(c1, c2, c3, c3) = -2``.

    The second condition is the conic ``(c1 + c3)^2 + 2 c3^2 = 2``, swept by
    lines of slope ``m`` through ``(0, 1)``.
    """
    m = q(m)
    c3 = (m**2 - 2) / (m**2 + 2)
    u = 4 * m / (m**2 + 2)
    return u - c3, -u - c3, c3


def construct_deg4_b(m=4) -> MapWitness:
    """Same shape with ``f1 - f2`` linear, so infinity lies over 1 with multiplicity 3."""
    c1, c2, c3 = deg4_b_parameters(m)
    return _deg4(c1, c2, c3, (3, 1), (2,))


# Degree three, (2,1) over 0, 1 and infinity


def deg3_loop_parameters(r) -> dict[str, Rational]:
    """Solve ``k x^2 (x - 1) - (x - p) = k (x - r)^2 (x - s)`` for ``k, s, p``."""
    r = q(r)
    k, s, p = symbols("k s p")
    lhs = k * x**2 * (x - 1) - (x - p)
    rhs = k * (x - r) ** 2 * (x - s)
    diff = expand(lhs - rhs)
    equations = [diff.coeff(x, i) for i in range(3)]
    solutions = solve(equations, [k, s, p], dict=True)
    solutions = [sol for sol in solutions if sol.get(k, 0) != 0]
    if not solutions:
        raise DegenerateParameters("no cubic with these double points", context={"r": str(r)})
    sol = solutions[0]
    return {"k": q(sol[k]), "s": q(sol[s]), "p": q(sol[p])}


def construct_deg3_loop(r=2) -> MapWitness:
    """``k x^2 (x - 1) / (x - p)``: double points at 0, ``r`` and infinity."""
    par = deg3_loop_parameters(r)
    k, s, p = par["k"], par["s"], par["p"]
    numerator = poly(k * x**2 * (x - 1))
    denominator = poly(x - p)
    if numerator - denominator != poly(k * (x - q(r)) ** 2 * (x - s)):
        raise VerificationFailed("elimination did not produce the double point over 1")
    w = _coprime(numerator, denominator, "QQ")
    return _require(w, {"0": (2, 1), "1": (2, 1), "inf": (2, 1)}, (2,))


# Registry and reports


def coefficients(text: str) -> tuple[Rational, ...]:
    """``"0:1:1/2"`` -> ``(0, 1, 1/2)``, ascending degree."""
    return tuple(q(c) for c in text.split(":"))


def _sign(text: str) -> int:
    value = int(text)
    if value not in (1, -1):
        raise ValueError("sign must be 1 or -1")
    return value


@dataclass(frozen=True)
class WitnessCase:
    builder: Callable[..., MapWitness]
    params: dict[str, Callable[[str], object]]
    defaults: dict[str, str]
    randomize: Callable[[random.Random], dict[str, str]]
    notes: tuple[str, ...] = ()


def _small(rng: random.Random, bound: int = 6) -> str:
    return str(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))


def _small_poly(rng: random.Random, degree: int) -> str:
    coeffs = [_small(rng) for _ in range(degree)] + [str(rng.choice([1, 2, 3]))]
    return ":".join(coeffs)


def _random_split(rng: random.Random) -> dict[str, str]:
    return {
        "g11": _small_poly(rng, rng.randint(1, 2)),
        "g11p": _small_poly(rng, rng.randint(0, 1)),
        "g12": _small_poly(rng, rng.randint(1, 2)),
        "g12p": _small_poly(rng, rng.randint(0, 1)),
    }


_SPLIT_PARAMS = {"g11": coefficients, "g11p": coefficients, "g12": coefficients, "g12p": coefficients}

CASES: dict[str, WitnessCase] = {
    "sq-even": WitnessCase(
        construct_sq_even,
        _SPLIT_PARAMS,
        {"g11": "0:1", "g11p": "1", "g12": "1:1", "g12p": "1"},
        _random_split,
    ),
    "sq-cube": WitnessCase(
        construct_sq_cube,
        _SPLIT_PARAMS,
        {"g11": "0:1", "g11p": "1", "g12": "1:1", "g12p": "1"},
        _random_split,
    ),
    "cube-sq": WitnessCase(
        construct_cube_sq,
        {"p": coefficients, "s": coefficients, "q_": coefficients},
        {"p": "0:1", "s": "1", "q_": "0"},
        lambda rng: {"p": _small_poly(rng, 1), "s": _small(rng), "q_": _small(rng)},
    ),
    "deg5-thG": WitnessCase(
        construct_deg5_thG,
        {"s": q, "sign": _sign, "t": q},
        {"s": "2", "sign": "1", "t": "1"},
        lambda rng: {"s": _small(rng, 9), "sign": str(rng.choice([1, -1])), "t": _small(rng)},
    ),
    "deg4-a": WitnessCase(
        construct_deg4_a,
        {"c1": q, "c2": q},
        {"c1": "2", "c2": "4"},
        lambda rng: {"c1": _small(rng), "c2": _small(rng)},
    ),
    "deg4-b": WitnessCase(
        construct_deg4_b,
        {"m": q},
        {"m": "4"},
        lambda rng: {"m": _small(rng, 9)},
        notes=("f1 - f2 linear needs e2 = -2, a conic with rational points",),
    ),
    "deg3-loop": WitnessCase(
        construct_deg3_loop,
        {"r": q},
        {"r": "2"},
        lambda rng: {"r": _small(rng, 9)},
    ),
}


def _case(name: str) -> WitnessCase:
    try:
        return CASES[name]
    except KeyError:
        raise ValueError(f"unknown witness case {name!r}; expected one of {', '.join(CASES)}") from None


def parse_params(text: str | None) -> dict[str, str]:
    """``"c1=2,c2=4"`` -> ``{"c1": "2", "c2": "4"}``."""
    if not text:
        return {}
    out = {}
    for item in text.split(","):
        key, sep, value = item.partition("=")
        if not sep or not key.strip():
            raise ValueError(f"malformed parameter {item!r}, expected name=value")
        out[key.strip()] = value.strip()
    return out


def build_witness(case: str, params: dict[str, str] | None = None) -> tuple[MapWitness, dict[str, str]]:
    spec = _case(case)
    raw = {**spec.defaults, **(params or {})}
    unknown = set(raw) - set(spec.params)
    if unknown:
        raise ValueError(f"unknown parameters for {case}: {', '.join(sorted(unknown))}")
    kwargs = {name: spec.params[name](value) for name, value in raw.items()}
    with timed("witness"):
        w = spec.builder(**kwargs)
    logger.debug("Witness %s %s: degree %d", case, raw, w.degree)
    return w, raw


def witness_report(case: str, params: dict[str, str] | None = None) -> WitnessReport:
    """Construct, verify and describe one witness."""
    spec = _case(case)
    w, raw = build_witness(case, params)
    notes = list(spec.notes)
    if case == "deg5-thG":
        branches = deg5_sign_branches(raw["s"], raw["t"])
        notes.append(f"sign branches with solutions: {branches}")
    coeffs = w.coefficients()
    return WitnessReport(
        case=case,
        field=w.field,
        parameters=raw,
        degree=w.degree,
        numerator=coeffs["numerator"],
        denominator=coeffs["denominator"],
        profiles={t: list(p) for t, p in profiles(w).items()},
        remaining=list(remaining_critical_points(w)),
        rh_total=rh_total(w),
        verified=True,
        notes=notes,
    )


def random_witnesses(case: str, count: int, seed: int = 0) -> list[WitnessReport]:
    """``count`` witnesses at seeded random parameters, skipping degenerate draws.

    ``VerificationFailed`` is never skipped.
    """
    spec = _case(case)
    rng = random.Random(seed)
    reports: list[WitnessReport] = []
    skipped = 0
    for _ in range(count * 20):
        if len(reports) == count:
            break
        params = spec.randomize(rng)
        try:
            reports.append(witness_report(case, params))
        except (DegenerateParameters, NotCoprime, NoRationalPoint):
            skipped += 1
    logger.info("Random %s witnesses: %d built, %d degenerate draws skipped", case, len(reports), skipped)
    return reports
