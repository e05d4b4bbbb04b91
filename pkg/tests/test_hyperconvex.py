from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from ballfix import (
    Ball,
    StepFn,
    ZERO,
    dist,
    helly_witness,
    in_ball,
    interval_hull,
    pairwise_intersect,
    pointwise_le,
)
from ballfix.gen import disjoint_ball_pair, ordinal_pool, rand_intersecting_balls, trial_rng
from strategies import stepfns, unit_rationals

POOL = ordinal_pool()

balls = st.builds(Ball, stepfns, unit_rationals.map(lambda q: abs(q) + 1))


class TestPairwise:
    def test_single_ball(self):
        assert pairwise_intersect([Ball(StepFn.constant(0), Q(1))]) is None

    def test_touching_constants(self):
        family = [Ball(StepFn.constant(0), Q(1)), Ball(StepFn.constant(Q(3, 2)), Q(1))]
        assert pairwise_intersect(family) is None

    def test_separated_constants(self):
        family = [Ball(StepFn.constant(0), Q(1)), Ball(StepFn.constant(3), Q(1))]
        assert pairwise_intersect(family) == (0, 1)


class TestWitness:
    def test_pair_of_constants(self):
        family = [Ball(StepFn.constant(0), Q(1)), Ball(StepFn.constant(Q(3, 2)), Q(1))]
        w = helly_witness(family)
        assert w == StepFn.constant(Q(1, 2))
        assert all(in_ball(w, b) for b in family)

    def test_single_ball_boundary(self):
        center = StepFn(0, {ZERO: 1})
        w = helly_witness([Ball(center, Q(2))])
        assert w == center - 2
        assert dist(w, center) == 2

    def test_random_families(self):
        for i in range(200):
            rng = trial_rng(424242, i)
            family = rand_intersecting_balls(rng, POOL, rng.randint(2, 8))
            w = helly_witness(family)
            assert all(in_ball(w, b) for b in family)

    def test_disjoint_rejected(self):
        for i in range(50):
            rng = trial_rng(99, i)
            pair = disjoint_ball_pair(rng, POOL)
            assert pairwise_intersect(pair) == (0, 1)
            with pytest.raises(ValueError):
                helly_witness(pair)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            helly_witness([])


class TestHull:
    def test_single_ball(self):
        center = StepFn(Q(1, 2), {ZERO: -1})
        hull = interval_hull([Ball(center, Q(1, 4))])
        assert hull == (center - Q(1, 4), center + Q(1, 4), True)

    def test_disjoint_pair_is_empty(self):
        hull = interval_hull([Ball(StepFn.constant(0), Q(1)), Ball(StepFn.constant(3), Q(1))])
        assert hull.lower == StepFn.constant(2)
        assert hull.upper == StepFn.constant(1)
        assert not hull.nonempty

    def test_lower_bound_is_the_witness(self):
        for i in range(200):
            rng = trial_rng(31337, i)
            family = rand_intersecting_balls(rng, POOL, rng.randint(2, 8))
            hull = interval_hull(family)
            assert hull.nonempty
            assert hull.lower == helly_witness(family)
            assert pointwise_le(hull.lower, hull.upper)

    def test_middle_functions_lie_in_every_ball(self):
        family = [Ball(StepFn.constant(0), Q(1)), Ball(StepFn(Q(1, 2), {ZERO: 1}), Q(1))]
        hull = interval_hull(family)
        mid = (hull.lower + hull.upper) * Q(1, 2)
        assert all(in_ball(mid, b) for b in family)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            interval_hull([])


@given(balls, balls, balls)
def test_hull_monotone_in_the_family(b1, b2, b3):
    small = interval_hull([b1, b2])
    large = interval_hull([b1, b2, b3])
    assert pointwise_le(small.lower, large.lower)
    assert pointwise_le(large.upper, small.upper)


@given(balls, balls)
def test_pairwise_condition_matches_hull_nonemptiness(b1, b2):
    meets = pairwise_intersect([b1, b2]) is None
    assert interval_hull([b1, b2]).nonempty == meets
