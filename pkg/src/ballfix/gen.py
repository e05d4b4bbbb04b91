"""Seeded random generation of exact test inputs.

The ordinal pool stays below w^3 by default (finite, w-scale and w^2-scale
limits all occur); --wide adds deeper exponents.  Values are rationals with
small denominators so every downstream computation stays exact and small.
Each trial draws from its own stream split off the master seed, so trial
outcomes do not depend on execution order.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .ordinal import Ordinal, parse as parse_ordinal
from .pl import PLFunction, SeqRep
from .stepfn import Ball, StepFn, sup_norm


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(f"{seed}:{trial}")


def ordinal_pool(wide: bool = False) -> list[Ordinal]:
    pool = [
        Ordinal([(e, c) for e, c in ((2, i), (1, j), (0, k)) if c > 0])
        for i in range(5) for j in range(5) for k in range(5)
    ]
    if wide:
        pool += [parse_ordinal(s) for s in
                 ("w^3", "w^3+w^2*2+1", "w^4*3+w", "w^(w)", "w^(w)+w^2", "w^(w+1)+w^(w)*2+5")]
    return pool


def rand_fraction(rng: random.Random, max_num: int = 8, max_den: int = 6) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def rand_unit_fraction(rng: random.Random, nonneg: bool = False) -> Fraction:
    den = rng.randint(1, 6)
    return Fraction(rng.randint(0 if nonneg else -den, den), den)


def rand_stepfn(
    rng: random.Random,
    pool: list[Ordinal],
    max_keys: int = 12,
    unit: bool = False,
    nonneg: bool = False,
    tail_zero: bool = False,
) -> StepFn:
    draw = (lambda: rand_unit_fraction(rng, nonneg)) if unit else (lambda: rand_fraction(rng))
    tail = Fraction(0) if tail_zero else draw()
    keys = rng.sample(pool, rng.randint(0, min(max_keys, len(pool))))
    return StepFn(tail, {k: draw() for k in keys})


def rand_intersecting_balls(rng: random.Random, pool: list[Ordinal], size: int) -> list[Ball]:
    """A family of balls sharing a common point, hence mutually intersecting."""
    hub = rand_stepfn(rng, pool, max_keys=6)
    balls = []
    for _ in range(size):
        radius = Fraction(rng.randint(0, 12), rng.randint(1, 4))
        offset = rand_stepfn(rng, pool, max_keys=6)
        norm = sup_norm(offset)
        if norm > radius:
            offset = offset * (radius / norm) if radius else StepFn.constant(0)
        balls.append(Ball(hub + offset, radius))
    return balls


def disjoint_ball_pair(rng: random.Random, pool: list[Ordinal]) -> list[Ball]:
    """Two balls engineered not to meet: centers further apart than r1+r2."""
    center = rand_stepfn(rng, pool, max_keys=6)
    r1 = Fraction(rng.randint(0, 6), rng.randint(1, 3))
    r2 = Fraction(rng.randint(0, 6), rng.randint(1, 3))
    gap = Fraction(rng.randint(1, 5), rng.randint(1, 3))
    return [Ball(center, r1), Ball(center + (r1 + r2 + gap), r2)]


def rand_seqrep(rng: random.Random) -> SeqRep:
    prefix = [rand_fraction(rng) for _ in range(rng.randint(0, 6))]
    return SeqRep(prefix, rand_fraction(rng))


_GRID = [Fraction(n, 8) for n in range(-7, 8)]


def rand_unit_pl(rng: random.Random) -> PLFunction:
    """Random function on [-1, 1] with values in [-1, 1]."""
    interior = sorted(rng.sample(_GRID, rng.randint(0, 4)))
    xs = [Fraction(-1)] + interior + [Fraction(1)]
    return PLFunction.on_interval([(x, rand_unit_fraction(rng)) for x in xs])


def rand_halfline_pl(rng: random.Random) -> PLFunction:
    x = Fraction(0)
    pts = [(x, rand_fraction(rng))]
    for _ in range(rng.randint(0, 5)):
        x += Fraction(rng.randint(1, 8), rng.randint(1, 4))
        pts.append((x, rand_fraction(rng)))
    return PLFunction.on_halfline(pts)
