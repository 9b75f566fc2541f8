#!/usr/bin/env python3
"""Command line for monodromy-atlas.

Usage:
    python -m app.cli enumerate --et 24 [--reflection] [--format json|dot]
    python -m app.cli invariants --et 36
    python -m app.cli subgroups --max-index 6
    python -m app.cli classify --surface k3 --gd "A6+3B2"
    python -m app.cli classify --surface rational --compare
    python -m app.cli hurwitz --degree 4 --profiles "3,1;2,2;2,2"
    python -m app.cli witness --case deg4-a --params c1=2,c2=4
    python -m app.cli counts --et 36 --breakdown
    python -m app.cli selftest

Exit codes: 0 success, 1 usage or input error, 2 internal invariant
violation, 3 unrealizable branch data, 4 witness verification failure.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Sequence

from pydantic import BaseModel

from app.core.config import get_settings
from app.core.exceptions import AtlasError, InvariantViolation, UsageError, VerificationFailed
from app.core.logging import setup_logging
from app.core.metrics import get_stage_summary
from app.schemas.families import FamilyRecordModel
from app.schemas.records import GraphSummary, MapRecord, SubgroupRecord
from app.services.dessin import graph_datum, parse_gd, rd_jgamma, structure_class, to_dot
from app.services.enumerator import (
    VALID_ET,
    breakdown_counts,
    compare_breakdown_with_published,
    dual_oracle_report,
    enumerate_tgamma,
    run_invariant_suite,
    tree_shape_count,
)
from app.services.families import (
    classify_special,
    compare_with_published,
    unstable_rational_table,
)
from app.services.families.classifier import SURFACES
from app.services.hurwitz import parse_profiles, realizable, rh_genus
from app.services.maps.oriented_map import automorphisms
from app.services.subgroups import enumerate_subgroups
from app.services.witness import CASES, parse_params, random_witnesses, witness_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INVARIANT = 2
EXIT_UNREALIZABLE = 3
EXIT_VERIFICATION = 4

_SURFACE_CODES = {name: r for r, name in SURFACES.items()}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _dump(data: Any) -> Any:
    if isinstance(data, BaseModel):
        return data.model_dump()
    if isinstance(data, list):
        return [_dump(item) for item in data]
    if isinstance(data, dict):
        return {key: _dump(value) for key, value in data.items()}
    return data


def _emit(args: argparse.Namespace, data: Any, table: Callable[[], list[str]]) -> None:
    if args.format == "table":
        text = "\n".join(table()) + "\n"
    else:
        text = json.dumps(_dump(data), indent=2) + "\n"
    if args.out:
        Path(args.out).parent.mkdir(parents=True, exist_ok=True)
        Path(args.out).write_text(text, encoding="utf-8")
        logger.info("Wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _check_et(et: int) -> int:
    if et not in VALID_ET:
        raise UsageError(f"--et must be one of {', '.join(map(str, VALID_ET))}")
    return et


def _summary(g) -> GraphSummary:
    gd = graph_datum(g)
    info = structure_class(g)
    return GraphSummary(
        gd=str(gd),
        et=gd.et,
        delta=gd.delta,
        index=gd.index,
        rd=rd_jgamma(g).render() if gd.index else "-",
        structure=info.structure.value,
        rk_h1=info.rk_h1,
        automorphisms=len(automorphisms(g.map, g.marking)),
    )


def _summary_table(summaries: list[GraphSummary]) -> list[str]:
    lines = [f"{'#':>4}  {'GD':<16} {'index':>5}  {'RD(j_Gamma)':<28} {'structure':<20} {'|Aut|':>5}"]
    for i, s in enumerate(summaries):
        lines.append(f"{i:>4}  {s.gd:<16} {s.index:>5}  {s.rd:<28} {s.structure:<20} {s.automorphisms:>5}")
    return lines


# Commands


def cmd_enumerate(args: argparse.Namespace) -> int:
    graphs = enumerate_tgamma(_check_et(args.et), modulo_reflection=args.reflection, jobs=args.jobs)
    if args.format == "dot":
        if args.out:
            directory = Path(args.out)
            directory.mkdir(parents=True, exist_ok=True)
            for i, g in enumerate(graphs):
                (directory / f"et{args.et}-{i:04d}.dot").write_text(to_dot(g, f"g{i}"), encoding="utf-8")
            logger.info("Wrote %d DOT files to %s", len(graphs), directory)
        else:
            sys.stdout.write("".join(to_dot(g, f"g{i}") for i, g in enumerate(graphs)))
        return EXIT_OK
    records = [MapRecord.from_graph(g) for g in graphs]
    _emit(args, records, lambda: _summary_table([_summary(g) for g in graphs]))
    return EXIT_OK


def cmd_invariants(args: argparse.Namespace) -> int:
    report = run_invariant_suite(_check_et(args.et), jobs=args.jobs)
    graphs = enumerate_tgamma(args.et, modulo_reflection=False, jobs=args.jobs)
    summaries = [_summary(g) for g in graphs]

    def table() -> list[str]:
        lines = _summary_table(summaries)
        lines.append(f"status: {report.status} ({report.graphs_checked} graphs)")
        lines.extend(f"violation: {v}" for v in report.violations)
        lines.extend(f"note: {n}" for n in report.notes)
        return lines

    _emit(args, {"report": report, "graphs": summaries}, table)
    return EXIT_OK if not report.violations else EXIT_INVARIANT


def cmd_subgroups(args: argparse.Namespace) -> int:
    genus_filter = None if args.all_genera else 0
    reps = enumerate_subgroups(args.max_index, genus_filter=genus_filter, jobs=args.jobs)
    records = [SubgroupRecord.from_rep(rep) for rep in reps]

    def table() -> list[str]:
        lines = [f"{'n':>3}  {'genus':>5}  {'GD':<16} RD(j_Gamma)"]
        for rep in reps:
            lines.append(f"{rep.n:>3}  {rep.genus:>5}  {str(rep.graph_datum):<16} {rep.cycle_types.render()}")
        return lines

    _emit(args, records, table)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    r = _SURFACE_CODES[args.surface]
    if args.unstable:
        if r != 1:
            raise UsageError("--unstable applies to --surface rational only")
        rows = unstable_rational_table(jobs=args.jobs)
        _emit(args, rows, lambda: [f"{row.gd:<16} | {row.rd}" for row in rows])
        return EXIT_OK
    if args.compare:
        report = compare_with_published(r, jobs=args.jobs)

        def table() -> list[str]:
            lines = [f"{row.label:<12} {row.gd:<14} {row.degree:>3}  {row.published:<48} {row.status}" for row in report.rows]
            lines.extend(f"extra        {line}" for line in report.extras)
            for fam in report.parametric:
                lines.append(f"parametric   {fam.gd} d={fam.degree_min}..{fam.degree_max} simple points: {fam.simple_points}")
            return lines

        _emit(args, report, table)
        return EXIT_OK

    gd = parse_gd(args.gd) if args.gd else None
    records = classify_special(r, gd, include_degenerations=args.include_degenerations, jobs=args.jobs)
    models = [FamilyRecordModel.from_record(rec) for rec in records]

    def table() -> list[str]:
        lines = [f"{'GD':<16} | {'deg':>3} | RD(j_E)"]
        for rec in records:
            flag = "" if rec.generic else "  (degeneration)"
            lines.append(f"{str(rec.gd):<16} | {rec.degree:>3} | {rec.rd.render(rec.ell)}{flag}")
        return lines

    _emit(args, models, table)
    return EXIT_OK


def cmd_hurwitz(args: argparse.Namespace) -> int:
    bp = parse_profiles(args.degree, args.profiles)
    genus = rh_genus(bp)
    found = realizable(bp, seed=args.seed) if genus is not None else None
    data = {
        "degree": bp.degree,
        "profiles": bp.render(),
        "genus": genus,
        "realizable": found is not None,
        "constellation": found.as_dict() if found else None,
    }

    def table() -> list[str]:
        lines = [f"degree {bp.degree}, profiles {bp.render()}, genus {genus}"]
        if found is None:
            lines.append("unrealizable")
        else:
            lines.extend(f"  g{i} = {list(g)}" for i, g in enumerate(found.perms))
        return lines

    _emit(args, data, table)
    return EXIT_OK if found is not None else EXIT_UNREALIZABLE


def cmd_witness(args: argparse.Namespace) -> int:
    params = parse_params(args.params)
    if args.seed is not None:
        if params:
            raise UsageError("--seed and --params are exclusive")
        reports = random_witnesses(args.case, args.count, seed=args.seed)
        data: Any = reports
    else:
        reports = [witness_report(args.case, params)]
        data = reports[0]

    def table() -> list[str]:
        lines = []
        for rep in reports:
            lines.append(f"{rep.case} over {rep.field}, degree {rep.degree}, parameters {rep.parameters}")
            lines.append(f"  numerator   {rep.numerator}")
            lines.append(f"  denominator {rep.denominator}")
            profiles = " | ".join(f"{t}: {tuple(p)}" for t, p in rep.profiles.items())
            lines.append(f"  {profiles} | rest: {tuple(rep.remaining)} | rh_total {rep.rh_total}")
        return lines

    _emit(args, data, table)
    return EXIT_OK


def cmd_counts(args: argparse.Namespace) -> int:
    et = _check_et(args.et)
    graphs = enumerate_tgamma(et, modulo_reflection=args.reflection, jobs=args.jobs)
    data: dict[str, Any] = {
        "et": et,
        "modulo_reflection": args.reflection,
        "total": len(graphs),
        "tree_shapes": tree_shape_count(et),
    }
    if args.breakdown:
        data["breakdown"] = breakdown_counts(et, modulo_reflection=args.reflection, jobs=args.jobs)
    if args.compare:
        data["published"] = compare_breakdown_with_published(jobs=args.jobs)

    def table() -> list[str]:
        lines = [f"total: {data['total']}", f"tree-shapes: {data['tree_shapes']}"]
        lines.extend(f"{category}: {count}" for category, count in data.get("breakdown", {}).items())
        for row in data.get("published", []):
            verdict = ", ".join(row.matches) if row.matches else "DISCREPANCY"
            lines.append(
                f"quoted {row.label}: {row.published} "
                f"(orientation {row.orientation_count}, reflection {row.reflection_count}) {verdict}"
            )
        return lines

    _emit(args, data, table)
    return EXIT_OK


def cmd_selftest(args: argparse.Namespace) -> int:
    reports = [run_invariant_suite(et, jobs=args.jobs) for et in VALID_ET]
    oracle = dual_oracle_report((12, 24, 36), max_index=12, jobs=args.jobs)
    unstable = unstable_rational_table(jobs=args.jobs)
    failures = [v for rep in reports for v in rep.violations]
    if not oracle.agree:
        failures.append("dual oracle disagreement")
    if len(unstable) != 4:
        failures.append(f"unstable rational table has {len(unstable)} rows, expected 4")
    data = {
        "invariants": reports,
        "dual_oracle": oracle,
        "unstable_rows": len(unstable),
        "failures": failures,
        "timings": get_stage_summary(),
    }

    def table() -> list[str]:
        lines = [f"invariants ET={rep.et}: {rep.status} ({rep.graphs_checked} graphs)" for rep in reports]
        lines.append(f"dual oracle: {'agree' if oracle.agree else 'DISAGREE'} ({oracle.classes} classes)")
        lines.append(f"unstable rational rows: {len(unstable)}")
        lines.extend(f"FAIL {f}" for f in failures)
        lines.extend(f"timing {stage}: {vals['total_s']}s" for stage, vals in data["timings"].items())
        return lines

    _emit(args, data, table)
    return EXIT_OK if not failures else EXIT_INVARIANT


# Parser


def _add_common(p: argparse.ArgumentParser, formats: Sequence[str] = ("json", "table"), default: str = "json") -> None:
    p.add_argument("--format", choices=list(formats), default=default)
    p.add_argument("--out", help="write output to this path instead of stdout")
    p.add_argument("--jobs", type=int, default=get_settings().JOBS, help="worker processes")
    p.add_argument("--verbose", action="store_true", help="debug logging")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="monodromy-atlas", description="Monodromy graphs and elliptic surface families.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list marked graphs with a given ET")
    p.add_argument("--et", type=int, required=True)
    p.add_argument("--reflection", action="store_true", help="identify mirror images")
    _add_common(p, formats=("json", "table", "dot"))
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("invariants", help="run the invariant suite for one ET")
    p.add_argument("--et", type=int, required=True)
    _add_common(p)
    p.set_defaults(handler=cmd_invariants)

    p = sub.add_parser("subgroups", help="coset actions of the modular group")
    p.add_argument("--max-index", type=int, required=True)
    p.add_argument("--all-genera", action="store_true")
    _add_common(p)
    p.set_defaults(handler=cmd_subgroups)

    p = sub.add_parser("classify", help="special families of elliptic surfaces")
    p.add_argument("--surface", choices=sorted(_SURFACE_CODES), required=True)
    scope = p.add_mutually_exclusive_group()
    scope.add_argument("--gd", help='graph datum such as "A6+3B2"')
    scope.add_argument("--all", action="store_true", help="every graph datum (default)")
    p.add_argument("--include-degenerations", action="store_true")
    p.add_argument("--compare", action="store_true", help="compare with the quoted tables")
    p.add_argument("--unstable", action="store_true", help="degree-one rational families")
    _add_common(p)
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("hurwitz", help="realize branch data by permutations")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--profiles", required=True, help='e.g. "3,1;2,2;2,2"')
    p.add_argument("--seed", type=int, default=0)
    _add_common(p)
    p.set_defaults(handler=cmd_hurwitz)

    p = sub.add_parser("witness", help="explicit rational maps")
    p.add_argument("--case", choices=list(CASES), required=True)
    p.add_argument("--params", help="name=value,... ; polynomials as ascending a0:a1:...")
    p.add_argument("--seed", type=int, help="random batch with this seed")
    p.add_argument("--count", type=int, default=1)
    _add_common(p)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("counts", help="structural counts of marked graphs")
    p.add_argument("--et", type=int, required=True)
    p.add_argument("--breakdown", action="store_true")
    p.add_argument("--compare", action="store_true", help="quoted ET=36 counts under both settings")
    p.add_argument("--orientation", dest="reflection", action="store_false", help="count mirror images apart")
    _add_common(p, default="table")
    p.set_defaults(handler=cmd_counts, reflection=True)

    p = sub.add_parser("selftest", help="invariant suite, dual oracle, unstable table")
    _add_common(p)
    p.set_defaults(handler=cmd_selftest)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, run the command and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc.message}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)

    setup_logging("DEBUG" if args.verbose else None)
    if getattr(args, "jobs", 1) < 1:
        sys.stderr.write("usage error: --jobs must be positive\n")
        return EXIT_USAGE
    try:
        return args.handler(args)
    except InvariantViolation as exc:
        logger.error("Invariant violation: %s %s", exc.message, exc.context)
        return EXIT_INVARIANT
    except VerificationFailed as exc:
        logger.error("Witness verification failed: %s %s", exc.message, exc.context)
        return EXIT_VERIFICATION
    except (AtlasError, ValueError) as exc:
        message = exc.user_message if isinstance(exc, AtlasError) else str(exc)
        sys.stderr.write(f"error: {message}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
