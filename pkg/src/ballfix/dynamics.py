"""Nonexpansive operators on step-function balls, with exact witnesses.

The two shift operators move values up the ordinal line after seeding fixed
values at the bottom; vacated limit positions are filled with an inf-of-sups
(or sup-of-infs) of the preceding values.  For finite-deviation inputs both
limit formulas collapse to the tail, which gives a closed form; the
definitional enumeration is kept alongside as `limit_value_oracle` so the
closed form can be cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal

from .ordinal import OMEGA, ZERO, Ordinal
from .stepfn import Ball, StepFn, dist, fresh_beyond, sign, sup_norm

UNIT_BALL = Ball(StepFn.constant(0), Fraction(1))

_ONE = Ordinal.from_int(1)
_TWO = Ordinal.from_int(2)


class UnexpectedFixedPoint(RuntimeError):
    """Raised when a witness search finds none; firing is itself a defect."""


@dataclass(frozen=True)
class OperatorDescriptor:
    """A named self-map of a ball, evaluated via `evaluate`."""

    name: str
    domain: Ball
    evaluate: Callable[[StepFn], StepFn]
    metadata: str = ""

    def __call__(self, f: StepFn) -> StepFn:
        return self.evaluate(f)


def double_shift(f: StepFn) -> StepFn:
    """Shift values two positions up, seeding 1 at 0 and -1 at 1.

    Position 0 maps to 1, position 1 to -1, and alpha+2 receives f(alpha).
    Every limit position takes the inf-of-sups of the values below it, and
    every successor-of-limit the sup-of-infs; for finite-deviation f both
    equal the tail, so the result keeps the tail and only the deviation
    keys move.
    """
    dev = {ZERO: Fraction(1), _ONE: Fraction(-1)}
    for k, v in f.deviations.items():
        dev[k + _TWO] = v
    return StepFn(f.tail, dev)


def single_shift(f: StepFn) -> StepFn:
    """Shift values one position up, seeding 1 at 0.

    On tail-0 inputs restricted to finite keys this is the classical
    shift (x1, x2, ...) -> (1, x1, x2, ...) on null sequences.
    """
    dev = {ZERO: Fraction(1)}
    for k, v in f.deviations.items():
        dev[k + _ONE] = v
    return StepFn(f.tail, dev)


DOUBLE_SHIFT = OperatorDescriptor(
    "double-shift", UNIT_BALL, double_shift,
    "transfinite two-position shift seeding (1, -1); limit slots filled by inf-of-sups / sup-of-infs",
)
SINGLE_SHIFT = OperatorDescriptor(
    "single-shift", UNIT_BALL, single_shift,
    "transfinite one-position shift seeding 1; limit slots filled by inf-of-sups",
)

LimitFormula = Literal["inf-sup", "sup-inf"]


def limit_value_oracle(f: StepFn, beta: Ordinal, which: LimitFormula) -> Fraction:
    """Brute-force value a shift writes at a limit position.

    Enumerates cut points alpha in {0} union {k+1 : k a deviation key below
    beta}; the inner sup/inf over the open interval (alpha, beta) is the
    max/min of the tail and the deviation values strictly inside, because
    the interval is infinite and the deviation set finite.  The inner value
    only changes when the cut crosses a deviation key, so these cuts realize
    the extremal value.
    """
    if which not in ("inf-sup", "sup-inf"):
        raise ValueError(f"unknown limit formula {which!r}")
    if not beta.is_limit():
        raise ValueError(f"{beta} is not a limit ordinal")
    cuts = [ZERO] + [k + _ONE for k in f.deviations if k < beta]
    inner = []
    for alpha in cuts:
        values = [f.tail] + [v for k, v in f.deviations.items() if alpha < k < beta]
        inner.append(max(values) if which == "inf-sup" else min(values))
    return min(inner) if which == "inf-sup" else max(inner)


@dataclass(frozen=True)
class NonexpansiveViolation:
    f: StepFn
    g: StepFn
    witness: Ordinal
    input_dist: Fraction
    output_gap: Fraction


@dataclass(frozen=True)
class BallViolation:
    f: StepFn
    image: StepFn
    witness: Ordinal
    distance: Fraction
    radius: Fraction


def _require_in_domain(op: OperatorDescriptor, *fns: StepFn) -> None:
    for f in fns:
        if f not in op.domain:
            raise ValueError(f"input outside the domain ball of {op.name}: {f}")


def check_nonexpansive(op: OperatorDescriptor, f: StepFn, g: StepFn) -> NonexpansiveViolation | None:
    """Exact check dist(op(f), op(g)) <= dist(f, g); None means it holds."""
    _require_in_domain(op, f, g)
    d_in = dist(f, g)
    tf, tg = op(f), op(g)
    if dist(tf, tg) <= d_in:
        return None
    gap = tf - tg
    for w in sorted(set(gap.deviations) | {fresh_beyond(gap)}):
        if abs(gap(w)) > d_in:
            return NonexpansiveViolation(f, g, w, d_in, abs(gap(w)))
    raise AssertionError("sup norm not attained on deviation keys")


def check_ball_invariance(op: OperatorDescriptor, f: StepFn) -> BallViolation | None:
    """Exact check op(f) stays in op.domain; None means it does."""
    _require_in_domain(op, f)
    image = op(f)
    if image in op.domain:
        return None
    gap = image - op.domain.center
    for w in sorted(set(gap.deviations) | {fresh_beyond(gap)}):
        if abs(gap(w)) > op.domain.radius:
            return BallViolation(f, image, w, abs(gap(w)), op.domain.radius)
    raise AssertionError("sup norm not attained on deviation keys")


def discrepancy_witness(op: OperatorDescriptor, f: StepFn) -> Ordinal:
    """Least position where op(f) differs from f.

    The search set (both deviation key sets, positions 0 and 1, and one
    fresh ordinal beyond all keys) is complete: two step functions equal
    on it are equal everywhere.  For the shift operators a witness always
    exists; running out of candidates raises UnexpectedFixedPoint.
    """
    _require_in_domain(op, f)
    image = op(f)
    candidates = set(f.deviations) | set(image.deviations) | {ZERO, _ONE, fresh_beyond(f, image)}
    for w in sorted(candidates):
        if image(w) != f(w):
            return w
    raise UnexpectedFixedPoint(f"{op.name} fixed {f}")


def minimal_bad_limit(f: StepFn) -> Ordinal:
    """Least limit mu with (f(mu), f(mu+1)) != (1, -1).

    Only limits adjacent to a deviation key can show the (1, -1) pattern;
    all others evaluate to (tail, tail).  It therefore suffices to scan
    omega, each such adjacent limit, and the next limit after each.
    """
    adjacent = set()
    for k in f.deviations:
        if k.is_limit():
            adjacent.add(k)
        else:
            limit_part, n = k.split_finite()
            if n == 1 and limit_part.is_limit():
                adjacent.add(limit_part)
    candidates = {OMEGA} | adjacent | {lam + OMEGA for lam in adjacent}
    one, minus_one = Fraction(1), Fraction(-1)
    for mu in sorted(candidates):
        if (f(mu), f(mu + _ONE)) != (one, minus_one):
            return mu
    raise AssertionError("the largest candidate limit always qualifies")


def gap_map(g: StepFn, f: StepFn) -> StepFn:
    """(1 - |g|) f + g, defined for sup_norm(g) <= 1.

    Pulls f toward the sign of g: nonexpansive with pointwise factor
    1 - |g|, and maps the unit ball into itself.
    """
    if sup_norm(g) > 1:
        raise ValueError("gap map requires sup_norm(g) <= 1")
    return (1 - abs(g)) * f + g


def gap_fixed_point(g: StepFn) -> StepFn:
    """sign(g), verified to be an exact fixed point of the gap map of g."""
    s = sign(g)
    if gap_map(g, s) != s:
        raise RuntimeError("sign(g) failed the gap-map fixed point check")
    if g * s != abs(g) or s * abs(g) != g:
        raise RuntimeError("sign(g) failed the sign identity check")
    return s


def forced_sign_values(samples) -> tuple[list[tuple[str, int]], bool]:
    """Signs any f with g = f|g| must take at the sampled points.

    Where g is nonzero the sign is forced to +/-1; where g vanishes it is
    unconstrained (reported as 0).  The obstruction flag is set when the
    forced signs end in an alternation, i.e. the last two are opposite and
    nonzero, so the sequence has no limit.
    """
    forced = []
    for label, value in samples:
        v = value if isinstance(value, Fraction) else Fraction(value)
        forced.append((label, (v > 0) - (v < 0)))
    signs = [s for _, s in forced]
    obstruction = len(signs) >= 2 and signs[-1] != 0 and signs[-1] == -signs[-2]
    return forced, obstruction


def _require_range_01(g: StepFn) -> None:
    values = [g.tail] + list(g.deviations.values())
    if any(v < 0 or v > 1 for v in values):
        raise ValueError("requires 0 <= g <= 1 pointwise")


def ppoint_map(g: StepFn, f: StepFn) -> StepFn:
    """(1 - g) f + g for 0 <= g <= 1; nonexpansive, unit-ball invariant."""
    _require_range_01(g)
    return (1 - g) * f + g


def ppoint_fixed_point(g: StepFn) -> StepFn:
    """Indicator of the support of a tail-0 g: 1 where g deviates, else 0.

    Verified to be fixed by the map (1-g)f + g and to satisfy
    g * (1 - f) == 0, which exhibits the tail position as a point where
    every step function is locally constant.
    """
    _require_range_01(g)
    if g.tail != 0:
        raise ValueError("requires tail(g) = 0")
    f = StepFn(0, {k: Fraction(1) for k in g.deviations})
    if ppoint_map(g, f) != f:
        raise RuntimeError("support indicator failed the fixed point check")
    if g * (1 - f) != StepFn.constant(0):
        raise RuntimeError("support indicator failed the vanishing check")
    return f


def transfer_fixed_point(embed, retract, operator, g):
    """Transfer a fixed point along a retraction pair.

    `embed` and `retract` are nonexpansive maps with embed(retract(x)) = x
    on the target carrier, and g is a fixed point of retract . operator .
    embed.  Returns f = embed(g) and verifies operator(f) == f; failure of
    either identity signals a violated precondition.  Works for any carrier
    with value equality (step functions, sequence representatives,
    piecewise-linear functions).
    """
    f = embed(g)
    if embed(retract(f)) != f:
        raise ValueError("embed . retract is not the identity at the transferred element")
    image = operator(f)
    if image != f:
        raise ValueError("transferred element is not fixed by the operator")
    return f
