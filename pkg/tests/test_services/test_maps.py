"""Tests for permutations and oriented maps."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.core.exceptions import HasFixedPoint, NotConnected, NotInvolution, NotPermutation
from app.services.dessin import Mark
from app.services.maps import automorphisms, build_map, canonical_code, genus
from app.services.maps.oriented_map import mark_vector
from app.services.maps.permutations import (
    is_permutation,
    partition_defect,
    perm_compose,
    perm_cycle_string,
    perm_cycle_type,
    perm_from_cycles,
    perm_id,
    perm_invert,
    perm_order_divides,
    perms_are_transitive,
)

THETA_SIGMA = perm_from_cycles([(0, 1, 2), (3, 4, 5)], 6)
THETA_ALPHA = perm_from_cycles([(0, 3), (1, 5), (2, 4)], 6)


class TestPermutations:
    """Right-action conventions and cycle bookkeeping."""

    def test_compose_applies_left_factor_first(self):
        p1 = (1, 2, 0)
        p2 = (0, 2, 1)
        assert perm_compose(p1, p2) == (2, 1, 0)

    def test_invert(self):
        p = (2, 0, 3, 1)
        assert perm_compose(p, perm_invert(p)) == perm_id(4)

    def test_cycles_and_types(self):
        p = perm_from_cycles([(0, 3), (1, 2, 4)], 6)
        assert perm_cycle_type(p) == (3, 2, 1)
        assert perm_cycle_string(p) == "(0,3)(1,2,4)"
        assert perm_cycle_string(perm_id(3)) == "()"

    def test_is_permutation(self):
        assert is_permutation((1, 0, 2))
        assert not is_permutation((1, 1, 2))
        assert not is_permutation((0, 3, 1))
        assert not is_permutation((0, 1), 3)

    def test_order_divides(self):
        assert perm_order_divides(perm_from_cycles([(0, 1, 2)], 4), 3)
        assert not perm_order_divides(perm_from_cycles([(0, 1)], 4), 3)
        assert perm_order_divides(perm_id(4), 2)

    def test_transitivity(self):
        assert perms_are_transitive([(1, 2, 0)], 3)
        assert not perms_are_transitive([(1, 0, 2)], 3)

    def test_partition_defect(self):
        assert partition_defect((3, 1)) == 2
        assert partition_defect((1, 1, 1)) == 0


class TestBuildMap:
    """Validation of rotation systems."""

    def test_theta_is_planar(self):
        m = build_map(6, THETA_SIGMA, THETA_ALPHA)
        assert len(m.vertices) == 2
        assert len(m.edges) == 3
        assert len(m.faces) == 3
        assert genus(m) == 0

    def test_torus_embedding(self):
        alpha = perm_from_cycles([(0, 3), (1, 4), (2, 5)], 6)
        m = build_map(6, THETA_SIGMA, alpha)
        assert len(m.faces) == 1
        assert genus(m) == 1

    def test_face_permutation_follows_edge_then_turns(self):
        m = build_map(6, THETA_SIGMA, THETA_ALPHA)
        assert m.phi == perm_compose(m.alpha, m.sigma)

    def test_rejects_non_permutation(self):
        with pytest.raises(NotPermutation):
            build_map(2, (0, 0), (1, 0))

    def test_rejects_fixed_point_of_alpha(self):
        with pytest.raises(HasFixedPoint):
            build_map(2, (0, 1), (0, 1))

    def test_rejects_odd_dart_count(self):
        with pytest.raises(NotInvolution, match="odd number of darts"):
            build_map(3, (0, 1, 2), (1, 0, 2))

    def test_rejects_negative_dart_count(self):
        with pytest.raises(NotPermutation):
            build_map(-2, (), ())

    def test_rejects_non_involution(self):
        with pytest.raises(NotInvolution):
            build_map(4, perm_id(4), (1, 2, 3, 0))

    def test_rejects_disconnected(self):
        with pytest.raises(NotConnected):
            build_map(4, perm_id(4), (1, 0, 3, 2))

    def test_empty_map_is_a_sphere(self):
        m = build_map(0, (), ())
        assert m.euler_characteristic == 2


class TestCanonicalCode:
    """Isomorphism invariants and automorphism groups."""

    @given(st.permutations(range(6)))
    def test_relabelling_keeps_the_code(self, relabel):
        m = build_map(6, THETA_SIGMA, THETA_ALPHA)
        other = m.relabel(relabel)
        assert canonical_code(other).canonical_code == canonical_code(m).canonical_code

    @given(st.permutations(range(6)))
    def test_relabelling_keeps_the_marked_code(self, relabel):
        sigma = perm_from_cycles([(0, 1, 2)], 6)
        alpha = perm_from_cycles([(0, 3), (1, 4), (2, 5)], 6)
        m = build_map(6, sigma, alpha)
        marks = {3: "A2", 4: "A2", 5: "B2"}
        moved = {relabel[d]: mark for d, mark in marks.items()}
        assert canonical_code(m.relabel(relabel), moved) == canonical_code(m, marks)

    def test_marks_distinguish_classes(self):
        sigma = perm_from_cycles([(0, 1, 2)], 6)
        alpha = perm_from_cycles([(0, 3), (1, 4), (2, 5)], 6)
        m = build_map(6, sigma, alpha)
        one_b = canonical_code(m, {3: "A2", 4: "A2", 5: "B2"})
        two_b = canonical_code(m, {3: "A2", 4: "B2", 5: "B2"})
        assert one_b.canonical_code != two_b.canonical_code

    def test_reflected_code_is_code_of_mirror(self):
        m = build_map(6, THETA_SIGMA, THETA_ALPHA)
        iso = canonical_code(m)
        assert iso.reflected_code == canonical_code(m.mirror()).canonical_code
        assert iso.unoriented_code == min(iso.canonical_code, iso.reflected_code)

    def test_theta_is_orientably_regular(self):
        m = build_map(6, THETA_SIGMA, THETA_ALPHA)
        auts = automorphisms(m)
        assert len(auts) == 6
        assert auts[0] == perm_id(6)

    def test_automorphisms_commute_with_the_map(self):
        m = build_map(6, THETA_SIGMA, THETA_ALPHA)
        for a in automorphisms(m):
            assert perm_compose(m.sigma, a) == perm_compose(a, m.sigma)
            assert perm_compose(m.alpha, a) == perm_compose(a, m.alpha)

    def test_marking_breaks_the_edge_swap(self):
        m = build_map(2, (0, 1), (1, 0))
        assert len(automorphisms(m)) == 2
        assert automorphisms(m, {0: "A2", 1: "B2"}) == [(0, 1)]

    def test_mark_vector_accepts_mark_members(self):
        sigma = perm_from_cycles([(0, 1, 2)], 6)
        alpha = perm_from_cycles([(0, 3), (1, 4), (2, 5)], 6)
        m = build_map(6, sigma, alpha)
        assert mark_vector(m, {3: Mark.A2, 4: Mark.B2, 5: Mark.A2}) == [0, 0, 0, 1, 2, 1]
        assert mark_vector(m, {3: "A2", 4: "B2", 5: "A2"}) == [0, 0, 0, 1, 2, 1]
        assert mark_vector(m, {}) is None

    def test_enum_and_text_marks_give_one_code(self):
        sigma = perm_from_cycles([(0, 1, 2)], 6)
        alpha = perm_from_cycles([(0, 3), (1, 4), (2, 5)], 6)
        m = build_map(6, sigma, alpha)
        assert canonical_code(m, {3: Mark.A2, 4: Mark.A2, 5: Mark.B2}) == canonical_code(m, {3: "A2", 4: "A2", 5: "B2"})
        assert str(Mark.B2) == "B2"
