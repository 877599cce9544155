"""Grading validation, object unitality, strength, induced idempotents."""

import numpy as np
import pytest

from ringbench import corpus
from ringbench import finring as fr
from ringbench import graded as gr
from ringbench import idempotents as idem
from ringbench import smallcat as sc
from ringbench.errors import (
    CategoryNotHomSetStrong,
    GradingViolation,
    NotDirectSum,
    NotObjectUnital,
    ShapeMismatch,
)


@pytest.fixture(scope="module")
def matrix_grading():
    return corpus._matrix_grading_m2(2)


@pytest.fixture(scope="module")
def arrow_grading():
    """Upper triangular matrices graded by the single-arrow category.

    Morphism order of the thin category is (0,0), (0,1), (1,1).  The arrow
    0 -> 1 carries span{E12}; the identity components carry the diagonal
    matrix units whose unit laws match the arrow's endpoints (E11 acts on
    E12 from the left, E22 from the right)."""
    ring = corpus.upper_triangular_ring(2, 2)
    arrow = corpus.thin_category_from_relation(2, [(0, 1)])
    comps = [
        ring.span([np.array([0, 0, 1])]),  # identity of object 0: E22
        ring.span([np.array([0, 1, 0])]),  # the arrow: E12
        ring.span([np.array([1, 0, 0])]),  # identity of object 1: E11
    ]
    return gr.attach_grading(ring, arrow, comps)


class TestAttachGrading:
    def test_matrix_grading_valid(self, matrix_grading):
        assert matrix_grading.ring.order == 16
        assert all(c.order == 2 for c in matrix_grading.components)

    def test_trivial_category_grading(self, trivial_category, m2f2):
        g = gr.attach_grading(m2f2, trivial_category, [m2f2.full_subgroup()])
        assert g.hom_component(0, 0).order == m2f2.order

    def test_misplaced_component_rejected(self, matrix_grading):
        comps = list(matrix_grading.components)
        comps[1], comps[2] = comps[2], comps[1]
        with pytest.raises(GradingViolation) as exc:
            gr.attach_grading(matrix_grading.ring, matrix_grading.category, comps)
        assert exc.value.witness is not None

    def test_incomplete_components_rejected(self, matrix_grading):
        comps = list(matrix_grading.components)
        comps[1] = matrix_grading.ring.zero_subgroup()
        with pytest.raises(NotDirectSum):
            gr.attach_grading(matrix_grading.ring, matrix_grading.category, comps)

    def test_missing_component_key_rejected(self, matrix_grading):
        with pytest.raises(ShapeMismatch):
            gr.attach_grading(
                matrix_grading.ring,
                matrix_grading.category,
                {0: matrix_grading.components[0]},
            )

    def test_zero_components_allowed(self, pair_groupoid):
        ring = fr.direct_product([corpus.cyclic_ring(2), corpus.cyclic_ring(2)])
        comps = [
            ring.span([np.array([1, 0])]),
            ring.zero_subgroup(),
            ring.zero_subgroup(),
            ring.span([np.array([0, 1])]),
        ]
        g = gr.attach_grading(ring, pair_groupoid, comps)
        assert g.components[1].is_zero()


class TestObjectUnital:
    def test_matrix_grading_units(self, matrix_grading):
        result = gr.object_unital_check(matrix_grading)
        assert result.object_unital
        assert {u.coords for u in result.units} == {(1, 0, 0, 0), (0, 0, 0, 1)}

    def test_zero_multiplication_ring_fails(self, trivial_category, zero_ring_2):
        g = gr.attach_grading(zero_ring_2, trivial_category, [zero_ring_2.full_subgroup()])
        result = gr.object_unital_check(g)
        assert not result.object_unital
        assert result.witness is not None

    def test_unital_ring_trivial_grading(self, trivial_category, m2f2):
        g = gr.attach_grading(m2f2, trivial_category, [m2f2.full_subgroup()])
        result = gr.object_unital_check(g)
        assert result.object_unital
        assert result.units[0] == fr.find_identity(m2f2)


class TestStronglyGraded:
    def test_matrix_grading_is_strong(self, matrix_grading):
        assert gr.strongly_graded_check(matrix_grading)

    def test_arrow_grading_is_strong(self, arrow_grading):
        # all composable products surject; the failure mode of this grading is
        # hom-set strength of the category, not strong gradedness
        assert gr.strongly_graded_check(arrow_grading)

    def test_zero_component_on_invertible_morphism_fails(self, pair_groupoid):
        ring = fr.direct_product([corpus.cyclic_ring(2), corpus.cyclic_ring(2)])
        comps = [
            ring.span([np.array([1, 0])]),
            ring.zero_subgroup(),
            ring.zero_subgroup(),
            ring.span([np.array([0, 1])]),
        ]
        g = gr.attach_grading(ring, pair_groupoid, comps)
        assert not gr.strongly_graded_check(g)


class TestHomSetStronglyGraded:
    def test_matrix_grading_report(self, matrix_grading):
        report = gr.homset_strongly_graded_report(matrix_grading)
        assert report.strong and report.agree and report.corner_identity

    def test_trivial_grading_report(self, trivial_category, m2f2):
        g = gr.attach_grading(m2f2, trivial_category, [m2f2.full_subgroup()])
        report = gr.homset_strongly_graded_report(g)
        assert report.strong and report.corner_identity

    def test_arrow_grading_rejected_for_category(self, arrow_grading):
        with pytest.raises(CategoryNotHomSetStrong):
            gr.homset_strongly_graded_report(arrow_grading)

    def test_not_object_unital_rejected(self, trivial_category, zero_ring_2):
        g = gr.attach_grading(zero_ring_2, trivial_category, [zero_ring_2.full_subgroup()])
        with pytest.raises(NotObjectUnital):
            gr.homset_strongly_graded_report(g)

    def test_corner_identity_without_strength_hypothesis(self, arrow_grading):
        ok, witness = gr.corner_identity_check(arrow_grading)
        assert ok and witness is None


class TestInducedIdempotents:
    def test_matrix_grading_induces_strong_set(self, matrix_grading):
        iset = gr.induced_idempotents(matrix_grading)
        assert iset.size == 2
        assert idem.is_strong(iset)

    def test_trivial_grading_induces_unit(self, trivial_category, m2f2):
        g = gr.attach_grading(m2f2, trivial_category, [m2f2.full_subgroup()])
        iset = gr.induced_idempotents(g)
        assert iset.elements == (fr.find_identity(m2f2),)

    def test_arrow_grading_induces_valid_but_not_strong(self, arrow_grading):
        iset = gr.induced_idempotents(arrow_grading)
        assert iset.size == 2
        assert not idem.is_strong(iset)

    def test_not_object_unital_raises(self, trivial_category, zero_ring_2):
        g = gr.attach_grading(zero_ring_2, trivial_category, [zero_ring_2.full_subgroup()])
        with pytest.raises(NotObjectUnital):
            gr.induced_idempotents(g)


class TestFlagsAndLinkage:
    def test_flags_for_matrix_grading(self, matrix_grading):
        flags = gr.compute_flags(matrix_grading)
        assert flags.object_unital and flags.strongly_graded
        assert flags.homset_strongly_graded is True
        assert flags.induced_set is not None

    def test_flags_for_arrow_grading(self, arrow_grading):
        flags = gr.compute_flags(arrow_grading)
        assert flags.object_unital and flags.strongly_graded
        assert flags.homset_strongly_graded is None  # category hypothesis fails

    def test_homset_verdict_equals_strongness_of_induced_set(self):
        for inst in corpus.generate_suite("gradings"):
            flags = gr.compute_flags(inst.grading)
            if flags.homset_strongly_graded is None:
                continue
            assert flags.homset_strongly_graded == idem.is_strong(flags.induced_set), inst.name

    def test_strongly_graded_object_unital_groupoid_gradings_are_homset_strong(self):
        for inst in corpus.generate_suite("gradings"):
            if not sc.is_groupoid(inst.grading.category).is_groupoid:
                continue
            flags = gr.compute_flags(inst.grading)
            if flags.object_unital and flags.strongly_graded:
                assert flags.homset_strongly_graded is True, inst.name

    def test_corner_identity_on_all_object_unital_gradings(self):
        for inst in corpus.generate_suite("gradings"):
            if gr.object_unital_check(inst.grading).object_unital:
                ok, witness = gr.corner_identity_check(inst.grading)
                assert ok, (inst.name, witness)

    def test_graded_tri_equivalence_on_admissible_instances(self):
        seen_false = False
        for inst in corpus.generate_suite("gradings"):
            if not gr.object_unital_check(inst.grading).object_unital:
                continue
            if not sc.homset_strong_report(inst.grading.category).strong:
                continue
            report = gr.homset_strongly_graded_report(inst.grading)
            assert report.agree, inst.name
            seen_false = seen_false or not report.strong
        assert seen_false  # the suite must exercise a negative admissible case

    def test_hom_components_decompose_the_ring(self):
        for inst in corpus.generate_suite("gradings"):
            g = inst.grading
            p = g.category.object_count
            total = g.ring.zero_subgroup()
            prod = 1
            for a in range(p):
                for b in range(p):
                    comp = g.hom_component(a, b)
                    total = total.join(comp)
                    prod *= comp.order
            assert prod == g.ring.order, inst.name
            assert total == g.ring.full_subgroup(), inst.name
