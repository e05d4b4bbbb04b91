"""Ball-intersection geometry in the sup-norm step-function lattice.

A closed ball of center f and radius r is the order interval [f-r, f+r],
so a family of mutually intersecting balls has the common point
sup_i (f_i - r_i): the pairwise condition f_i - r_i <= f_j + r_j makes the
pointwise supremum land inside every interval.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Optional

from .stepfn import Ball, StepFn, dist, family_inf, family_sup, pointwise_le


def pairwise_intersect(balls: Iterable[Ball]) -> Optional[tuple[int, int]]:
    """None if every pair of balls meets, else the first violating (i, j).

    Two sup-norm balls meet iff the distance of their centers is at most
    the sum of their radii.
    """
    items = list(balls)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if dist(items[i].center, items[j].center) > items[i].radius + items[j].radius:
                return (i, j)
    return None


def helly_witness(balls: Iterable[Ball]) -> StepFn:
    """A common point of a mutually intersecting family: sup_i (center_i - r_i)."""
    items = list(balls)
    if not items:
        raise ValueError("helly witness of an empty family is undefined")
    bad = pairwise_intersect(items)
    if bad is not None:
        raise ValueError(f"balls {bad[0]} and {bad[1]} do not intersect")
    witness = family_sup(b.center - b.radius for b in items)
    for i, b in enumerate(items):
        if witness not in b:
            raise RuntimeError(f"witness unexpectedly outside ball {i}")
    return witness


class IntervalHull(NamedTuple):
    lower: StepFn
    upper: StepFn
    nonempty: bool


def interval_hull(balls: Iterable[Ball]) -> IntervalHull:
    """Order-interval intersection of a nonempty family of balls.

    lower = sup_i (center_i - r_i) and upper = inf_i (center_i + r_i); the
    intersection of the balls is exactly {h : lower <= h <= upper}, which
    is nonempty iff lower <= upper pointwise.
    """
    items = list(balls)
    if not items:
        raise ValueError("interval hull of an empty family is undefined")
    lower = family_sup(b.center - b.radius for b in items)
    upper = family_inf(b.center + b.radius for b in items)
    return IntervalHull(lower, upper, pointwise_le(lower, upper))
