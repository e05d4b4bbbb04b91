from fractions import Fraction as Q

import pytest
from hypothesis import given, strategies as st

from ballfix import (
    PLFunction,
    SeqRep,
    clamp_shift,
    interpolate_sequence,
    pl_discrepancy,
    pl_dist,
    pl_equal,
    pl_sup_norm,
    quotient_equal,
    quotient_seminorm,
    sample_sequence,
    seq_dist,
)
from strategies import rationals, unit_rationals

ZERO_FN = PLFunction.on_interval([(-1, 0), (1, 0)])
ONE_FN = PLFunction.on_interval([(-1, 1), (1, 1)])
LINE_2T = PLFunction.on_interval([(-1, -2), (1, 2)])
CLAMPED_2T = PLFunction.on_interval([(-1, -1), (Q(-1, 2), -1), (Q(1, 2), 1), (1, 1)])

seqreps = st.builds(SeqRep, st.lists(rationals, max_size=6), rationals)

_grid = [Q(n, 8) for n in range(-7, 8)]

unit_pls = st.lists(st.sampled_from(_grid), unique=True, max_size=4).flatmap(
    lambda xs: st.lists(unit_rationals, min_size=len(xs) + 2, max_size=len(xs) + 2).map(
        lambda ys: PLFunction.on_interval(list(zip([Q(-1)] + sorted(xs) + [Q(1)], ys)))))

halfline_pls = st.lists(st.tuples(st.integers(1, 8), rationals), max_size=5).flatmap(
    lambda steps: rationals.map(
        lambda y0: PLFunction.on_halfline(
            [(Q(0), y0)] + [(Q(sum(s for s, _ in steps[:i + 1])), y) for i, (_, y) in enumerate(steps)])))

domain_points = st.integers(-16, 16).map(lambda n: Q(n, 16))


class TestBasics:
    def test_eval_constant(self):
        assert ZERO_FN(Q(1, 3)) == 0

    def test_clamp_inserts_crossings(self):
        assert LINE_2T.clamp(-1, 1) == CLAMPED_2T

    def test_dist_self(self):
        assert pl_dist(CLAMPED_2T, CLAMPED_2T) == 0

    def test_eval_outside_domain_rejected(self):
        with pytest.raises(ValueError):
            ZERO_FN(2)

    def test_domain_mismatch_rejected(self):
        with pytest.raises(ValueError):
            pl_dist(ZERO_FN, PLFunction.on_interval([(0, 0), (1, 0)]))

    def test_affine_on_halfline_needs_zero_slope(self):
        f = PLFunction.on_halfline([(0, 0), (2, 1)])
        assert f.add_affine(0, 3)(5) == 4
        with pytest.raises(ValueError):
            f.add_affine(1, 0)

    def test_collinear_points_are_canonicalized(self):
        f = PLFunction.on_interval([(-1, -2), (0, 0), (1, 2)])
        assert f == LINE_2T
        assert pl_equal(f, LINE_2T)

    def test_strictly_increasing_required(self):
        with pytest.raises(ValueError):
            PLFunction.on_interval([(0, 0), (0, 1)])


class TestClampShift:
    def test_zero(self):
        assert clamp_shift(ZERO_FN) == CLAMPED_2T

    def test_one(self):
        assert clamp_shift(ONE_FN) == PLFunction.on_interval([(-1, -1), (0, 1), (1, 1)])

    def test_zero_is_moved_a_full_unit(self):
        assert pl_dist(clamp_shift(ZERO_FN), ZERO_FN) == 1

    def test_preconditions(self):
        with pytest.raises(ValueError):
            clamp_shift(PLFunction.on_interval([(-1, 2), (1, 2)]))
        with pytest.raises(ValueError):
            clamp_shift(PLFunction.on_interval([(0, 0), (1, 0)]))


class TestDiscrepancy:
    def test_constant_zero(self):
        t = pl_discrepancy(ZERO_FN)
        assert t == -1
        assert clamp_shift(ZERO_FN)(t) != ZERO_FN(t)

    def test_constant_one(self):
        assert pl_discrepancy(ONE_FN) == -1
        assert clamp_shift(ONE_FN)(-1) == -1 != ONE_FN(-1)

    def test_clamped_line_witness_is_interior(self):
        t = pl_discrepancy(CLAMPED_2T)
        assert Q(-1, 2) < t < Q(1, 2)
        assert clamp_shift(CLAMPED_2T)(t) != CLAMPED_2T(t)


class TestSampling:
    def test_constant(self):
        c = PLFunction.on_halfline([(0, Q(2, 3))])
        assert sample_sequence(c) == SeqRep([], Q(2, 3))

    def test_interpolated_prefix(self):
        f = PLFunction.on_halfline([(0, 0), (2, 1)])
        assert sample_sequence(f) == SeqRep([Q(1, 2), 1], 1)
        assert sample_sequence(f).prefix == (Q(1, 2),)

    def test_interval_rejected(self):
        with pytest.raises(ValueError):
            sample_sequence(ZERO_FN)


class TestInterpolation:
    def test_floor_ceiling_formula(self):
        r = interpolate_sequence(SeqRep([1], 0))
        assert r(Q(3, 2)) == Q(1, 2)

    def test_all_zero(self):
        assert interpolate_sequence(SeqRep([], 0)) == PLFunction.on_halfline([(0, 0)])

    def test_anchored_at_zero(self):
        r = interpolate_sequence(SeqRep([4], 4))
        assert r(0) == 0
        assert r(Q(1, 2)) == 2


class TestQuotient:
    def test_finite_changes_vanish(self):
        assert quotient_equal(SeqRep([5, 7], 0), SeqRep([], 0))

    def test_different_tails(self):
        assert not quotient_equal(SeqRep([], 1), SeqRep([], 0))

    def test_seminorm(self):
        assert quotient_seminorm(SeqRep([100], Q(1, 2))) == Q(1, 2)

    def test_sequence_values_indexed_from_one(self):
        a = SeqRep([1, 2], 9)
        assert (a.value(1), a.value(2), a.value(3)) == (1, 2, 9)
        with pytest.raises(ValueError):
            a.value(0)


class TestText:
    @pytest.mark.parametrize("text", [
        "domain=[-1,1]; points=(-1,-1),(-1/2,-1),(1/2,1),(1,1)",
        "domain=halfline; points=(0,0),(2,1); tail=1",
        "domain=[0,2]; points=(0,0),(2,7)",
    ])
    def test_round_trip(self, text):
        assert str(PLFunction.parse(text)) == text

    def test_tail_mismatch_rejected(self):
        with pytest.raises(ValueError):
            PLFunction.parse("domain=halfline; points=(0,0),(2,1); tail=5")

    def test_seqrep_round_trip(self):
        for text in ("prefix=[]; tail=0", "prefix=[1, 1/2, -3]; tail=2/7"):
            assert str(SeqRep.parse(text)) == text


@given(unit_pls, domain_points)
def test_clamp_pointwise_oracle(f, t):
    clamped = f.clamp(Q(-1, 3), Q(1, 2))
    assert clamped(t) == min(Q(1, 2), max(Q(-1, 3), f(t)))


@given(unit_pls, rationals, rationals, domain_points)
def test_affine_pointwise_oracle(f, p, q, t):
    assert f.add_affine(p, q)(t) == f(t) + p * t + q


@given(unit_pls, unit_pls)
def test_clamp_shift_nonexpansive(f, g):
    assert pl_dist(clamp_shift(f), clamp_shift(g)) <= pl_dist(f, g)


@given(unit_pls)
def test_clamp_shift_ball_invariant_with_witness(f):
    image = clamp_shift(f)
    assert pl_sup_norm(image) <= 1
    t = pl_discrepancy(f)
    assert image(t) != f(t)


@given(seqreps)
def test_retraction_identity(a):
    assert sample_sequence(interpolate_sequence(a)) == a


@given(seqreps, seqreps)
def test_interpolation_nonexpansive(a, b):
    assert pl_dist(interpolate_sequence(a), interpolate_sequence(b)) <= seq_dist(a, b)


@given(halfline_pls, halfline_pls)
def test_sampling_nonexpansive(f, g):
    assert seq_dist(sample_sequence(f), sample_sequence(g)) <= pl_dist(f, g)


@given(unit_pls, unit_pls)
def test_equal_agrees_with_structural_equality(f, g):
    assert pl_equal(f, g) == (f == g)
    assert pl_equal(f, f)
