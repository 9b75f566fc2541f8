"""Tests for ramification data, the Euler formula and family classification."""

from dataclasses import fields

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.core.exceptions import InvalidProfile, ParseError, ShapeMismatch
from app.services.dessin import GraphDatum, graph_datum, parse_gd
from app.services.families import (
    PUBLISHED_ROWS,
    alphas_betas,
    candidate_graph_data,
    classify_special,
    compare_with_published,
    component_dimension,
    degenerations,
    elementary_moves,
    general_family,
    integer_partitions,
    is_degeneration_of,
    is_group_covering,
    is_special,
    make_ram_datum,
    normalize_published,
    parametric_description,
    parse_rd,
    record_et,
    split_stars,
    surface_et,
    unstable_candidates,
    unstable_rational_table,
)
from app.schemas.families import FamilyRecordModel
from app.services.families.classifier import FamilyRecord
from app.services.families.published import _row_status

TWO_A2 = GraphDatum(0, 2, 0)
A6_B2 = GraphDatum(1, 0, 1)
A6_3B2 = GraphDatum(1, 0, 3)


def _rd(text):
    return parse_rd(text)[0]


class TestRamDatum:
    """Normalization, text syntax and Riemann-Hurwitz bookkeeping."""

    def test_parse_and_render(self):
        rd, ell = parse_rd("[(1,3)_A, (2,2)_B, (2)] + *")
        assert rd.degree == 4
        assert rd.over_a == ((3, 1),)
        assert rd.over_b == ((2, 2),)
        assert rd.unspecified == ((2,),)
        assert ell == 1
        assert rd.render(ell) == "[(3,1)_A,(2,2)_B,(2)] + *"

    def test_star_counts(self):
        assert split_stars("[(3)_A] + 2*") == ("[(3)_A]", 2)
        assert split_stars("[(3)_A]") == ("[(3)_A]", 0)
        assert _rd("[(2)_B,(1,1)_B,(2)] + 2*").render(2).endswith(" + 2*")

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            parse_rd("[(3,1)_A, nonsense]")
        with pytest.raises(ParseError):
            parse_rd("[(3)_A,(2,2)_B]")
        with pytest.raises(ParseError):
            parse_rd("[(2)]")

    def test_explicit_degree(self):
        rd, _ = parse_rd("[(2),(2)]", degree=2)
        assert rd.unspecified == ((2,), (2,))

    def test_unspecified_ones_are_dropped(self):
        rd = make_ram_datum(4, over_a=[(3, 1)], unspecified=[(1, 1, 1, 1), (2, 1, 1)])
        assert rd.unspecified == ((2,),)
        assert rd.padded() == ((2, 1, 1),)

    def test_invalid_vectors(self):
        with pytest.raises(InvalidProfile):
            make_ram_datum(4, over_a=[(3, 2)])
        with pytest.raises(InvalidProfile):
            make_ram_datum(3, unspecified=[(2, 2)])
        with pytest.raises(InvalidProfile):
            make_ram_datum(0)

    def test_genus_zero_closure(self):
        rd = _rd("[(3,3)_A,(3,3)_A,(2),(2)]")
        assert rd.defect == 10
        assert rd.closes_genus_zero()
        assert rd.simple_points == 2
        assert rd.branch_profile().profiles[-1] == (2, 1, 1, 1, 1)

    def test_canonical_sorts_end_vectors(self):
        rd = make_ram_datum(4, over_b=[(2, 1, 1), (2, 2)])
        assert rd.over_b == ((2, 1, 1), (2, 2))
        assert rd.canonical().over_b == ((2, 2), (2, 1, 1))


class TestEulerFormula:
    """ET(E) from the ramification of j_E over the ends."""

    def test_surface_et(self):
        assert surface_et(2, 6, 0, 0, 0, 1) == 24
        assert surface_et(3, 4, 3, 0, 0, 0) == 24

    def test_alphas_betas(self):
        rd = _rd("[(3)_A,(1,1,1)_A,(2),(2)]")
        assert alphas_betas(TWO_A2, rd) == (3, 0, 0)
        rd = make_ram_datum(5, over_b=[(2, 2, 1), (2, 2, 1), (2, 2, 1)], unspecified=[(2,), (2,)])
        assert alphas_betas(A6_3B2, rd) == (0, 0, 3)

    def test_rational_record(self):
        rd = _rd("[(3,3)_A,(3,3)_A,(2),(2)]")
        assert record_et(TWO_A2, rd) == 24
        assert is_special(TWO_A2, rd)
        assert not is_group_covering(TWO_A2, rd)

    def test_unramified_ends_are_not_special(self):
        rd = _rd("[(1,1)_B,(2),(2)]")
        assert record_et(A6_B2, rd) == 2 * A6_B2.et
        assert not is_special(A6_B2, rd)

    def test_group_covering(self):
        rd = _rd("[(3)_A,(3)_A]")
        assert is_group_covering(TWO_A2, rd)
        assert record_et(TWO_A2, rd, ell=1) == 24

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            record_et(A6_3B2, _rd("[(2,1)_B,(2,1)_B,(2)]"))


class TestDegenerations:
    """Collisions of a simple branch point with another point."""

    def test_elementary_moves(self):
        rd = _rd("[(3,1)_A,(3,1)_A,(2),(2)]")
        moves = {m.render() for m in elementary_moves(rd)}
        assert moves == {
            "[(4)_A,(3,1)_A,(2)]",
            "[(3,1)_A,(3,1)_A,(3)]",
            "[(3,1)_A,(3,1)_A,(2,2)]",
        }

    def test_no_simple_point_no_move(self):
        assert elementary_moves(_rd("[(4)_A,(4)_A]")) == set()

    def test_closure(self):
        upper = _rd("[(3,1)_A,(3,1)_A,(2),(2)]")
        assert is_degeneration_of(_rd("[(4)_A,(4)_A]"), upper)
        assert is_degeneration_of(_rd("[(3,1)_A,(4)_A,(2)]"), upper)
        assert not is_degeneration_of(upper, upper)

    @given(
        st.sampled_from(
            [
                "[(3,3)_A,(3,3)_A,(2),(2)]",
                "[(3)_A,(1,1,1)_A,(2),(2)]",
                "[(2,2)_B,(2),(2),(2),(2)]",
                "[(2,2,1)_B,(2,2,1)_B,(2,2,1)_B,(2),(2)]",
                "[(2,1)_B,(2,1)_B,(1,1,1)_B,(2),(2)]",
            ]
        )
    )
    def test_moves_keep_degree_and_branching(self, text):
        rd = _rd(text)
        for lower in degenerations(rd):
            assert lower.degree == rd.degree
            assert lower.defect == rd.defect
            assert lower.simple_points < rd.simple_points
            assert not is_degeneration_of(rd, lower)


class TestClassifier:
    """Special families with ET(E) = 24 r."""

    def test_integer_partitions(self):
        assert integer_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_candidate_graph_data(self):
        assert candidate_graph_data(12) == [GraphDatum(0, 2, 0), GraphDatum(1, 0, 1), GraphDatum(1, 1, 0), GraphDatum(2, 0, 0)]

    def test_two_a2(self):
        records = classify_special(1, TWO_A2)
        assert [rec.render() for rec in records] == [
            "[2A2] | 6 | [(3,3)_A,(3,3)_A,(2),(2)]",
            "[2A2] | 4 | [(3,1)_A,(3,1)_A,(2),(2)]",
            "[2A2] | 3 | [(3)_A,(1,1,1)_A,(2),(2)]",
        ]
        for rec in records:
            assert rec.special and rec.generic
            assert rec.et_surface == 24
            assert rec.constellation.verify(rec.rd.branch_profile())

    def test_records_carry_a_representative_graph(self, loop_b):
        records = classify_special(1, A6_B2)
        assert records
        assert all(graph_datum(rec.graph) == A6_B2 for rec in records)
        model = FamilyRecordModel.from_record(records[0])
        assert graph_datum(model.graph.to_graph()) == A6_B2
        assert general_family(loop_b, 1, 0).graph is loop_b

    def test_two_a2_with_degenerations(self):
        records = classify_special(1, TWO_A2, include_degenerations=True)
        lower = {rec.rd.render(rec.ell) for rec in records if not rec.generic}
        assert lower == {
            "[(6)_A,(3,3)_A,(2)]",
            "[(6)_A,(6)_A]",
            "[(4)_A,(3,1)_A,(2)]",
            "[(4)_A,(4)_A]",
            "[(3)_A,(2,1)_A,(2)]",
            "[(3,3)_A,(3,3)_A,(2,2)]",
            "[(3,1)_A,(3,1)_A,(3)]",
            "[(3,1)_A,(3,1)_A,(2,2)]",
            "[(3)_A,(1,1,1)_A,(3)]",
        }
        assert {rec.render() for rec in records if rec.generic} == {rec.render() for rec in classify_special(1, TWO_A2)}

    def test_simple_points_collide_into_a_triple_point(self):
        records = classify_special(1, TWO_A2, include_degenerations=True)
        triple = next(rec for rec in records if rec.rd.render() == "[(3)_A,(1,1,1)_A,(3)]")
        assert not triple.generic
        assert triple.et_surface == 24
        assert triple.dimension == 1
        assert triple.constellation.verify(triple.rd.branch_profile())
        assert is_degeneration_of(triple.rd, _rd("[(3)_A,(1,1,1)_A,(2),(2)]"))

    def test_colliding_into_an_impossible_point_is_dropped(self):
        records = classify_special(1, TWO_A2, include_degenerations=True)
        assert "[(3,3)_A,(3,3)_A,(3)]" not in {rec.rd.render() for rec in records}

    def test_every_record_field_reaches_the_model(self):
        assert {f.name for f in fields(FamilyRecord)} <= set(FamilyRecordModel.model_fields)

    def test_rational_surfaces(self):
        records = classify_special(1)
        assert {rec.render() for rec in records} == {
            "[2A2] | 6 | [(3,3)_A,(3,3)_A,(2),(2)]",
            "[2A2] | 4 | [(3,1)_A,(3,1)_A,(2),(2)]",
            "[2A2] | 3 | [(3)_A,(1,1,1)_A,(2),(2)]",
            "[A6+A2] | 3 | [(3)_A,(2),(2)]",
            "[A6+B2] | 4 | [(2,2)_B,(2),(2),(2),(2)]",
            "[A6+B2] | 3 | [(2,1)_B,(2),(2),(2)]",
            "[A6+B2] | 2 | [(2)_B,(2)] + *",
        }

    def test_invalid_surface(self):
        with pytest.raises(ValueError):
            classify_special(3)

    @pytest.mark.slow
    def test_a6_3b2_k3(self):
        records = classify_special(2, A6_3B2)
        assert {rec.render() for rec in records} == {
            "[A6+3B2] | 8 | [(2,2,2,2)_B,(2,2,2,2)_B,(2,2,2,2)_B,(2),(2)]",
            "[A6+3B2] | 6 | [(2,2,2)_B,(2,2,2)_B,(2,2,1,1)_B,(2),(2)]",
            "[A6+3B2] | 5 | [(2,2,1)_B,(2,2,1)_B,(2,2,1)_B,(2),(2)]",
            "[A6+3B2] | 4 | [(2,2)_B,(2,1,1)_B,(2,1,1)_B,(2),(2)]",
            "[A6+3B2] | 4 | [(2,2)_B,(2,2)_B,(1,1,1,1)_B,(2),(2)]",
            "[A6+3B2] | 4 | [(2,2)_B,(2,2)_B,(2,1,1)_B,(2)] + *",
            "[A6+3B2] | 3 | [(2,1)_B,(2,1)_B,(1,1,1)_B,(2),(2)]",
            "[A6+3B2] | 3 | [(2,1)_B,(2,1)_B,(2,1)_B,(2)] + *",
            "[A6+3B2] | 2 | [(2)_B,(1,1)_B,(1,1)_B,(2)] + *",
        }

    def test_general_family(self, loop_b, theta, star_b):
        rec = general_family(loop_b, 1, 0)
        assert rec.render() == "[A6+B2] | 2 | [(1,1)_B,(2),(2)]"
        assert not rec.special
        assert rec.et_surface == 24
        assert rec.dimension == 2
        assert general_family(theta, 2, 0).degree == 4
        assert general_family(star_b, 1, 1) is None

    def test_component_dimension(self):
        assert component_dimension(_rd("[(2)_B,(1,1)_B,(1,1)_B,(2)]"), 1) == 2


class TestPublished:
    """Quoted tables against computed records."""

    def test_normalization_fills_simple_points(self):
        rd = _rd("[(2,1)_B,(2),(2)]")
        assert normalize_published(A6_B2, rd).render() == "[(2,1)_B,(2),(2),(2)]"

    def test_normalization_trims_surplus_vectors(self):
        rd = _rd("[(3,1)_A,(2,2)_B,(2,2)_B]")
        assert normalize_published(GraphDatum(1, 1, 1), rd).render() == "[(3,1)_A,(2,2)_B,(2),(2)]"

    def test_normalization_fails_on_missing_ends(self):
        assert normalize_published(A6_3B2, _rd("[(2,1)_B,(2)]")) is None

    def test_rows_have_unique_labels(self):
        labels = [row.label for row in PUBLISHED_ROWS]
        assert len(labels) == len(set(labels))

    def test_group_covering_row(self):
        row = next(row for row in PUBLISHED_ROWS if row.label == "k3-tree-02")
        assert _row_status(row, set()).status == "group-covering"

    @pytest.mark.slow
    def test_unrealizable_row(self):
        row = next(row for row in PUBLISHED_ROWS if row.label == "k3-tree-09")
        assert _row_status(row, set()).status == "unrealizable"

    def test_rational_comparison(self):
        report = compare_with_published(1)
        assert report.surface == "rational"
        assert report.status_counts == {"matched": 5, "matched-after-normalization": 1}
        assert report.extras == ["[A6+B2] | 2 | [(2)_B,(2)] + *"]
        assert report.parametric == []

    def test_parametric_description(self):
        fam = parametric_description(A6_B2, 1)
        assert fam.surface == "rational"
        assert (fam.degree_min, fam.degree_max) == (2, 4)
        assert fam.simple_points == "d + #parts over ends - 2"
        assert len(fam.records) == 3
        assert fam.notes


class TestUnstable:
    """Degree-one rational families from unstable Weierstrass data."""

    def test_candidates(self):
        assert {c.render() for c in unstable_candidates()} == {
            "(3,1)|(2,2)|(3,1)",
            "(3,1)|(2,2)|(2,2)",
            "(3,1)|(2,1,1)|(4)",
            "(3)|(2,1)|(2,1)",
            "(3)|(1,1,1)|(3)",
        }

    def test_table(self):
        rows = unstable_rational_table()
        assert [(row.gd, row.rd) for row in rows] == [
            ("[A6+A2]", "(3,1)|(2,2)|(3,1)"),
            ("[A6+A2+2B2]", "(3,1)|(2,1,1)|(4)"),
            ("[A6+B2]", "(3)|(2,1)|(2,1)"),
            ("[A6+3B2]", "(3)|(1,1,1)|(3)"),
        ]
        assert all(row.graphs >= 1 for row in rows)

    def test_graph_datum_text(self):
        assert parse_gd("A6+A2+2B2") == GraphDatum(1, 1, 2)


@pytest.fixture(scope="class")
def k3_comparison():
    return compare_with_published(2)


@pytest.mark.slow
class TestK3:
    """Special K3 families (ET(E) = 48) against the quoted rows."""

    def test_row_statuses(self, k3_comparison):
        assert k3_comparison.surface == "k3"
        assert k3_comparison.status_counts == {
            "matched": 13,
            "matched-after-normalization": 4,
            "group-covering": 1,
            "unrealizable": 1,
        }
        status = {row.label: row.status for row in k3_comparison.rows}
        assert all(status[f"k3-cycle-{i}"].startswith("matched") for i in range(1, 6))
        assert status["k3-tree-02"] == "group-covering"
        assert status["k3-tree-09"] == "unrealizable"
        assert "missing" not in status.values()

    def test_surplus_a_vector_is_trimmed(self, k3_comparison):
        row = next(row for row in k3_comparison.rows if row.label == "k3-cycle-4")
        assert row.status == "matched-after-normalization"
        assert row.normalized.startswith("[(3,3)_A,(2)")
        assert row.normalized.count("_A") == 1

    def test_extras(self, k3_comparison):
        extras = k3_comparison.extras
        assert len(extras) == 9
        assert "[A6+3B2] | 4 | [(2,2)_B,(2,2)_B,(1,1,1,1)_B,(2),(2)]" in extras
        assert "[A6+3B2] | 2 | [(2)_B,(1,1)_B,(1,1)_B,(2)] + *" in extras
        assert sum(" | 2 | " in e and e.endswith(" + *") for e in extras) == 6
        assert not any(e.startswith(("[2A2] ", "[A6+B2] ")) for e in extras)

    def test_parametric_ranges(self, k3_comparison):
        ranges = {fam.gd: (fam.degree_min, fam.degree_max) for fam in k3_comparison.parametric}
        assert ranges == {"[2A2]": (3, 12), "[A6+B2]": (2, 8)}
        notes = {fam.gd: fam.notes for fam in k3_comparison.parametric}
        assert notes["[2A2]"] == []
        assert "Riemann-Hurwitz" in notes["[A6+B2]"][0]

    def test_graph_euler_number_stays_below_half(self):
        records = classify_special(2)
        assert records
        assert max(rec.gd.et for rec in records) <= 24
        assert all(rec.et_surface == 48 for rec in records)


class TestQuotedRowsEulerNumber:
    """Every quoted row, once fitted to its graph datum, sums to ET(E) = 24 r."""

    @pytest.mark.parametrize("row", PUBLISHED_ROWS, ids=lambda row: row.label)
    def test_row_closes_to_surface_euler_number(self, row):
        gd = parse_gd(row.gd)
        rd, ell = parse_rd(row.rd)
        normalized = normalize_published(gd, rd)
        assert normalized is not None
        assert record_et(gd, normalized, ell) == 24 * row.r
