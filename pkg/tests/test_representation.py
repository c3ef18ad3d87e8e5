from fractions import Fraction

import pytest

from conftest import BOTH, EMPTY, T1, T2
from qualbelief import (
    Frame,
    SetFunction,
    check_belief,
    check_generalized,
    check_monotonic,
    check_probability,
    check_relation,
    classify_measure,
    construct_belief,
    construct_generalized_belief,
    construct_monotonic_belief,
    construct_probability_scott,
    from_ranking,
    induce_relation,
    ordinal_representation,
    verify_compatibility,
)
from qualbelief.errors import (
    AxiomError,
    InternalError,
    NotQualitativeBeliefError,
    NotQualitativeProbabilityError,
    NotWeakOrderError,
)
from qualbelief.oracle import enumerate_rankings, random_probability, search_probability_grid, search_relation
from qualbelief.relations import from_statements
from qualbelief.representation import probability_from_singletons, scott_system

F = Fraction


class TestInduce:
    def test_three_measures_one_relation(self, worked_p, worked_bel, worked_f, example_relation):
        for g in (worked_p, worked_bel, worked_f):
            assert induce_relation(g) == example_relation

    def test_vacuous(self, vacuous, frame2):
        assert induce_relation(vacuous) == from_ranking(frame2, [[EMPTY, T1, T2], [BOTH]])


class TestCompatibility:
    def test_compatible(self, worked_bel, example_relation):
        assert verify_compatibility(worked_bel, example_relation).compatible

    def test_vacuous_witness(self, vacuous, example_relation):
        verdict = verify_compatibility(vacuous, example_relation)
        assert not verdict.compatible
        assert verdict.witness == (T1, EMPTY)
        assert verdict.reason

    def test_strict_values_against_trivial(self, worked_p, trivial_relation):
        assert not verify_compatibility(worked_p, trivial_relation).compatible

    def test_frame_mismatch(self, worked_p):
        other = from_ranking(Frame(["a", "b"]), [[0], [1], [2], [3]])
        with pytest.raises(ValueError):
            verify_compatibility(worked_p, other)


class TestOrdinal:
    def test_example(self, example_relation):
        assert ordinal_representation(example_relation).values == (0, 1, 2, 3)

    def test_trivial(self, trivial_relation):
        assert ordinal_representation(trivial_relation).values == (0, 0, 0, 0)

    def test_uniform(self, uniform_relation):
        assert ordinal_representation(uniform_relation).values == (0, 1, 1, 2)

    def test_not_weak_order(self, frame2):
        with pytest.raises(NotWeakOrderError):
            ordinal_representation(from_statements(frame2, [(T1, EMPTY)]))

    def test_always_compatible(self, frame2):
        for r in enumerate_rankings(frame2):
            assert verify_compatibility(ordinal_representation(r), r).compatible


class TestConstructBelief:
    def test_example(self, example_relation):
        built = construct_belief(example_relation)
        assert built.class_values == (0, 1, 2, 3)
        assert built.measure.values == (0, F(1, 3), F(2, 3), 1)
        assert built.masses.masses == (0, F(1, 3), F(2, 3), 0)
        assert built.provenance == "theorem3"

    def test_uniform(self, uniform_relation):
        built = construct_belief(uniform_relation)
        assert built.class_values == (0, 1, 2)
        assert built.measure.values == (0, F(1, 2), F(1, 2), 1)
        assert built.masses.masses == (0, F(1, 2), F(1, 2), 0)

    def test_trivial_rejected(self, trivial_relation):
        with pytest.raises(NotQualitativeBeliefError) as info:
            construct_belief(trivial_relation)
        assert info.value.axiom == "Q3"

    def test_frame_above_sum_of_parts(self, frame2):
        # Vacuous ranking: f(frame) must jump to keep the frame's mass >= 0.
        built = construct_belief(from_ranking(frame2, [[EMPTY, T1, T2], [BOTH]]))
        assert built.measure.values == (0, 0, 0, 1)

    def test_null_element_needs_member_guard(self):
        """A qualitative probability with a null element, where the whole-class guard breaks.

        Singleton weights 2, 4, 5, 0 give classes in which every member
        has a copy with the null element added.
        """
        frame = Frame.of_size(4)
        p = probability_from_singletons(frame, [F(2, 11), F(4, 11), F(5, 11), F(0)])
        r = induce_relation(p)
        assert check_relation(r).structure_class == "qualitative_probability"
        built = construct_belief(r)
        assert built.class_values == (0, 1, 2, 3, 4, 5, 6, 9)
        assert check_belief(built.measure).passed
        with pytest.raises(InternalError):
            construct_belief(r, guard="class")

    def test_guards_agree_without_nested_classes(self, frame2):
        for r in enumerate_rankings(frame2):
            try:
                a = construct_belief(r)
            except NotQualitativeBeliefError:
                continue
            assert construct_belief(r, guard="class").measure == a.measure

    @pytest.mark.parametrize("seed", range(30))
    def test_random_belief_relations(self, frame3, seed):
        r = search_relation(frame3, lambda r: True, seed=seed, tries=1)
        built = construct_belief(r)
        assert check_belief(built.measure).passed
        assert verify_compatibility(built.measure, r).compatible


class TestScott:
    def test_example(self, example_relation):
        result = construct_probability_scott(example_relation)
        assert result.representable
        p = result.probability
        assert p[BOTH] > p[T2] > p[T1] > 0
        assert check_probability(p).passed
        assert verify_compatibility(p, example_relation).compatible
        assert result.epsilon == F(1, 3)

    def test_frame_at_bottom(self, frame_at_bottom):
        result = construct_probability_scott(frame_at_bottom)
        assert not result.representable and result.probability is None
        assert search_probability_grid(frame_at_bottom, 60) is None

    def test_trivial(self, trivial_relation):
        assert not construct_probability_scott(trivial_relation).representable
        f1 = Frame.of_size(1)
        assert not construct_probability_scott(from_ranking(f1, [[0, 1]])).representable
        assert construct_probability_scott(from_ranking(f1, [[0], [1]])).representable

    def test_reduced_and_full_systems_agree(self, frame2):
        for r in enumerate_rankings(frame2):
            full = construct_probability_scott(r, reduce=False)
            reduced = construct_probability_scott(r)
            assert full.representable == reduced.representable
            if full.representable:
                assert full.epsilon == reduced.epsilon

    def test_non_weak_order(self, frame2):
        r = from_statements(frame2, [(T1, EMPTY)])
        result = construct_probability_scott(r)
        assert not result.representable
        assert len(scott_system(r).constraints) == 1 + 6 + 1

    @pytest.mark.parametrize("seed", range(20))
    def test_probability_relations_are_representable(self, frame3, seed):
        r = induce_relation(random_probability(frame3, seed))
        result = construct_probability_scott(r)
        assert result.representable
        assert verify_compatibility(result.probability, r).compatible


class TestMonotonic:
    def test_example(self, example_relation):
        built = construct_monotonic_belief(example_relation)
        assert built.measure.values == (0, F(1, 3), F(2, 3), 1)
        assert check_monotonic(built.measure).passed
        assert built.provenance == "theorem4"

    def test_uniform(self, uniform_relation):
        built = construct_monotonic_belief(uniform_relation)
        assert built.measure.values == (0, F(1, 2), F(1, 2), 1)

    def test_rejects_belief_only_relation(self, frame3):
        r = search_relation(
            frame3,
            lambda r: check_relation(r).structure_class == "qualitative_belief",
            seed=0,
            tries=500,
        )
        assert r is not None
        with pytest.raises(NotQualitativeProbabilityError) as info:
            construct_monotonic_belief(r)
        assert info.value.axiom == "Q5"
        a, b, c = info.value.witness
        assert (a | b) & c == 0
        assert r.prefers(a, b) != r.prefers(a | c, b | c)


class TestGeneralized:
    def test_trivial(self, trivial_relation):
        built = construct_generalized_belief(trivial_relation)
        assert built.measure.values == (0, 0, 0, 0)
        assert built.masses.masses[EMPTY] == 1
        assert built.provenance == "theorem5-case-i"
        assert check_generalized(built.measure).passed

    def test_example_delegates(self, example_relation):
        built = construct_generalized_belief(example_relation)
        assert built.measure == construct_belief(example_relation).measure
        assert built.provenance == "theorem5-case-ii"

    def test_dominance_failure(self, frame_at_bottom):
        with pytest.raises(AxiomError) as info:
            construct_generalized_belief(frame_at_bottom)
        assert info.value.axiom == "Q4'"


def test_one_relation_three_classes(worked_p, worked_bel, worked_f, example_relation):
    classes = [classify_measure(g) for g in (worked_p, worked_bel, worked_f)]
    assert classes == ["probability", "monotonic_belief", "none"]
    for g in (worked_p, worked_bel, worked_f):
        assert verify_compatibility(g, example_relation).compatible


def test_ordinal_uniqueness(worked_p, worked_bel, worked_f):
    orders = []
    for g in (worked_p, worked_bel, worked_f):
        ordered = sorted(range(4), key=lambda a: g[a])
        orders.append(ordered)
    assert orders[0] == orders[1] == orders[2]


def test_single_element_frame():
    f1 = Frame.of_size(1)
    r = from_ranking(f1, [[0], [1]])
    for build in (construct_belief, construct_monotonic_belief, construct_generalized_belief):
        assert build(r).measure == SetFunction(f1, [0, 1])
    assert construct_probability_scott(r).probability == SetFunction(f1, [0, 1])


def test_nontriviality_equals_any_strict_pair_under_dominance(frame2):
    """With dominance, the frame tied with the empty set forces complete indifference."""
    for r in enumerate_rankings(frame2):
        report = check_relation(r)
        if report.holds("Q1", "Q2", "Q4'"):
            assert report.axioms["Q3"] == bool(r.strict_pairs())
