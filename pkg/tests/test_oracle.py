from fractions import Fraction

import pytest

from conftest import BOTH, EMPTY, T1, T2, scipy_lp
from qualbelief import Frame, SetFunction, check_relation, from_ranking
from qualbelief.oracle import (
    check_scott_axiom_direct,
    check_supadditivity_direct,
    enumerate_rankings,
    inclusion_exclusion,
    random_mass,
    random_ranking,
    scott_instance_holds,
    search_probability_grid,
    search_unrepresentable_qualitative_probability,
)
from qualbelief.representation import construct_probability_scott, scott_system
from qualbelief.lp import solve

F = Fraction


class TestSupadditivity:
    def test_inclusion_exclusion(self, worked_p):
        assert inclusion_exclusion(worked_p, [T1, T2]) == 1
        assert inclusion_exclusion(worked_p, [T1, BOTH]) == 1
        assert inclusion_exclusion(worked_p, [T1]) == F(2, 5)

    def test_non_belief_witness(self, worked_f):
        result = check_supadditivity_direct(worked_f, 2)
        assert not result.passed
        assert result.witness == (T1, T2)
        assert result.union_value == 1 and result.bound == F(13, 10)

    def test_belief_passes(self, worked_bel, vacuous):
        for g in (worked_bel, vacuous):
            assert check_supadditivity_direct(g, 3).passed

    def test_repetition_conventions_agree(self, frame3):
        for seed in range(15):
            g = SetFunction(frame3, [0] + [F((seed * 7 + a * a) % 11, 10) for a in range(1, 8)])
            with_rep = check_supadditivity_direct(g, 3)
            without = check_supadditivity_direct(g, 3, repeat=False)
            assert with_rep.passed == without.passed

    def test_sampled(self, worked_f):
        assert not check_supadditivity_direct(worked_f, 3, samples=500, seed=1).passed

    def test_bad_n(self, worked_f):
        with pytest.raises(ValueError):
            check_supadditivity_direct(worked_f, 0)


class TestScottAxiom:
    def test_example_relation_passes(self, example_relation):
        result = check_scott_axiom_direct(example_relation, 2)
        assert result.passed and result.bounded

    def test_frame_at_bottom(self, frame_at_bottom):
        result = check_scott_axiom_direct(frame_at_bottom, 2)
        assert not result.passed
        lhs, rhs = result.witness
        assert (lhs, rhs) == ((T1, T2), (EMPTY, BOTH))
        assert not scott_instance_holds(frame_at_bottom, lhs, rhs)

    def test_vacuous_ranking_fails(self, frame2):
        r = from_ranking(frame2, [[EMPTY, T1, T2], [BOTH]])
        assert not check_scott_axiom_direct(r, 2).passed

    def test_balance_implies_monotonicity_instance(self, example_relation):
        # A = {theta1}, B = empty, C = {theta2}: (C, A) balanced against (B, A u C).
        assert scott_instance_holds(example_relation, [T2, T1], [EMPTY, BOTH])

    def test_unbalanced_sequences_are_vacuous(self, frame_at_bottom):
        assert scott_instance_holds(frame_at_bottom, [T1], [T2])
        with pytest.raises(ValueError):
            scott_instance_holds(frame_at_bottom, [T1], [])

    def test_agrees_with_lp_on_all_s2_weak_orders(self, frame2):
        for r in enumerate_rankings(frame2):
            lp = construct_probability_scott(r).representable
            # The LP also demands frame > empty and nothing below empty.
            bounded = (
                check_scott_axiom_direct(r, 2).passed
                and r.prefers(BOTH, EMPTY)
                and not any(r.prefers(EMPTY, a) for a in range(4))
            )
            assert lp == bounded


class TestGrid:
    def test_example(self, example_relation):
        p = search_probability_grid(example_relation, 10)
        assert (p[T1], p[T2]) == (F(2, 5), F(3, 5))

    def test_uniform(self, uniform_relation):
        p = search_probability_grid(uniform_relation, 2)
        assert p.values == (0, F(1, 2), F(1, 2), 1)

    def test_no_solution(self, frame_at_bottom, trivial_relation):
        assert search_probability_grid(frame_at_bottom, 60) is None
        assert search_probability_grid(trivial_relation, 60) is None

    def test_limits(self, example_relation):
        with pytest.raises(ValueError):
            search_probability_grid(example_relation, 61)
        with pytest.raises(ValueError):
            search_probability_grid(from_ranking(Frame.of_size(4), [list(range(16))]), 10)


class TestGenerators:
    def test_random_mass_deterministic(self, frame3):
        assert random_mass(frame3, "closed", 4) == random_mass(frame3, "closed", 4)

    @pytest.mark.parametrize("world", ["closed", "open"])
    def test_random_mass_valid(self, frame3, world):
        for seed in range(50):
            m = random_mass(frame3, world, seed)
            assert sum(m.masses) == 1
            assert min(m.masses) >= 0
            if world == "closed":
                assert m.masses[0] == 0

    def test_open_world_usually_has_empty_mass(self, frame3):
        assert sum(random_mass(frame3, "open", s).masses[0] > 0 for s in range(50)) > 25

    def test_ranking_counts(self):
        assert len(list(enumerate_rankings(Frame.of_size(1)))) == 3
        assert len(set(enumerate_rankings(Frame.of_size(2)))) == 75
        with pytest.raises(ValueError):
            next(enumerate_rankings(Frame.of_size(3)))

    def test_random_ranking_is_weak_order(self, frame3):
        for seed in range(20):
            assert check_relation(random_ranking(frame3, seed)).structure_class != "not_weak_order"


def test_additivity_gap_search():
    frame = Frame.of_size(5)
    result = search_unrepresentable_qualitative_probability(frame, seed=1, tries=50)
    assert result.found
    r = result.relation
    assert check_relation(r).structure_class == "qualitative_probability"
    for reduce in (True, False):
        assert solve(scott_system(r, reduce=reduce)).optimal_value == 0


def test_additivity_gap_cross_checked_with_floating_point_lp():
    frame = Frame.of_size(5)
    r = search_unrepresentable_qualitative_probability(frame, seed=1, tries=50).relation
    status, value = scipy_lp(scott_system(r))
    assert status == "optimal"
    assert value < 1e-9


def test_small_frames_have_no_gap():
    frame = Frame.of_size(3)
    assert not search_unrepresentable_qualitative_probability(frame, seed=0, tries=30).found
