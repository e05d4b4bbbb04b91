"""Exact-arithmetic laboratory for fixed points of nonexpansive maps on sup-norm balls.

Everything is computed over rationals and ordinals in Cantor normal form, so
equality tests, norms, and fixed-point checks are exact rather than floating
point approximations.
"""

from .dynamics import (
    DOUBLE_SHIFT,
    SINGLE_SHIFT,
    UNIT_BALL,
    OperatorDescriptor,
    UnexpectedFixedPoint,
    check_ball_invariance,
    check_nonexpansive,
    discrepancy_witness,
    double_shift,
    forced_sign_values,
    gap_fixed_point,
    gap_map,
    limit_value_oracle,
    minimal_bad_limit,
    ppoint_fixed_point,
    ppoint_map,
    single_shift,
    transfer_fixed_point,
)
from .hyperconvex import IntervalHull, helly_witness, interval_hull, pairwise_intersect
from .ordinal import OMEGA, ONE, ZERO, Kind, Ordinal, OrdinalParseError, cmp, sup_finite
from .ordinal import parse as parse_ordinal
from .pl import (
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
from .stepfn import (
    Ball,
    StepFn,
    dist,
    family_inf,
    family_sup,
    fresh_beyond,
    in_ball,
    pointwise_le,
    pointwise_max,
    pointwise_min,
    sign,
    sup_norm,
)

__all__ = [name for name in dir() if not name.startswith("_")]
