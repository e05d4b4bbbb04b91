"""Shared hypothesis strategies for exact inputs."""

from fractions import Fraction

from hypothesis import strategies as st

from ballfix import Ordinal, StepFn, parse_ordinal

triples = st.tuples(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))

_deep = [parse_ordinal(s) for s in ("w^3", "w^(w)", "w^(w+1)+w^2*2", "w^(w)*3+w^4+1")]

ordinals = st.one_of(
    triples.map(lambda t: Ordinal([(e, c) for e, c in ((2, t[0]), (1, t[1]), (0, t[2])) if c > 0])),
    st.sampled_from(_deep),
)

rationals = st.builds(Fraction, st.integers(-8, 8), st.integers(1, 6))

unit_rationals = st.integers(1, 6).flatmap(
    lambda d: st.integers(-d, d).map(lambda n: Fraction(n, d)))

stepfns = st.builds(StepFn, rationals, st.dictionaries(ordinals, rationals, max_size=6))

unit_stepfns = st.builds(StepFn, unit_rationals, st.dictionaries(ordinals, unit_rationals, max_size=6))
