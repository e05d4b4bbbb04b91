"""Exact piecewise-linear functions and tail-constant sequence representatives.

PLFunction models continuous functions on a closed rational interval or on
the half-line [0, oo); on a half-line the function is constant beyond its
last breakpoint.  SeqRep models a bounded sequence that is constant past a
finite prefix; two representatives are identified in the quotient modulo
null sequences exactly when their tail constants agree.
"""

from __future__ import annotations

import math
import re
from bisect import bisect_right
from fractions import Fraction
from typing import Iterable, Sequence

from .dynamics import UnexpectedFixedPoint
from .stepfn import Rational, _parse_rational, _q


class PLFunction:
    """Continuous piecewise-linear function with rational breakpoints.

    Canonical on construction: abscissae strictly increase, interior
    breakpoints where the slope does not change are dropped, and on a
    half-line a trailing zero-slope segment is merged into the constant
    tail.  Structural equality therefore coincides with pointwise equality.
    """

    __slots__ = ("_points", "_halfline")

    def __init__(self, points: Iterable[tuple[Rational, Rational]], halfline: bool = False) -> None:
        pts = [(_q(x), _q(y)) for x, y in points]
        if not pts:
            raise ValueError("a piecewise-linear function needs at least one breakpoint")
        for (x1, _), (x2, _) in zip(pts, pts[1:]):
            if x1 >= x2:
                raise ValueError("breakpoint abscissae must strictly increase")
        if halfline and pts[0][0] != 0:
            raise ValueError("a half-line function must start at abscissa 0")
        if halfline:
            while len(pts) >= 2 and pts[-1][1] == pts[-2][1]:
                pts.pop()
        canon: list[tuple[Fraction, Fraction]] = []
        for p in pts:
            canon.append(p)
            while len(canon) >= 3 and _collinear(canon[-3], canon[-2], canon[-1]):
                del canon[-2]
        self._points = tuple(canon)
        self._halfline = halfline

    @classmethod
    def on_interval(cls, points: Iterable[tuple[Rational, Rational]]) -> "PLFunction":
        return cls(points, halfline=False)

    @classmethod
    def on_halfline(cls, points: Iterable[tuple[Rational, Rational]]) -> "PLFunction":
        return cls(points, halfline=True)

    @property
    def points(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return self._points

    @property
    def is_halfline(self) -> bool:
        return self._halfline

    @property
    def tail(self) -> Fraction:
        """Value beyond the last breakpoint (meaningful on a half-line)."""
        return self._points[-1][1]

    def domain(self) -> tuple:
        if self._halfline:
            return ("halfline",)
        return ("interval", self._points[0][0], self._points[-1][0])

    def __call__(self, t: Rational) -> Fraction:
        t = _q(t)
        lo, hi = self._points[0][0], self._points[-1][0]
        if t < lo or (not self._halfline and t > hi):
            raise ValueError(f"{t} is outside the domain")
        if t >= hi:
            return self._points[-1][1]
        xs = [x for x, _ in self._points]
        i = bisect_right(xs, t) - 1
        (x1, y1), (x2, y2) = self._points[i], self._points[i + 1]
        return y1 + (y2 - y1) * (t - x1) / (x2 - x1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PLFunction):
            return NotImplemented
        return self._halfline == other._halfline and self._points == other._points

    def __hash__(self) -> int:
        return hash((self._halfline, self._points))

    def add_affine(self, p: Rational, q: Rational) -> "PLFunction":
        """t -> f(t) + p*t + q; on a half-line p must be 0 to stay bounded."""
        p, q = _q(p), _q(q)
        if self._halfline and p != 0:
            raise ValueError("adding a nonconstant affine part leaves the half-line class")
        return PLFunction([(x, y + p * x + q) for x, y in self._points], self._halfline)

    def clamp(self, lo: Rational, hi: Rational) -> "PLFunction":
        """min(hi, max(lo, f)), with exact crossing abscissae inserted."""
        lo, hi = _q(lo), _q(hi)
        if lo > hi:
            raise ValueError(f"clamp bounds out of order: {lo} > {hi}")
        refined: list[tuple[Fraction, Fraction]] = [self._points[0]]
        for (x1, y1), (x2, y2) in zip(self._points, self._points[1:]):
            if y1 != y2:
                crossings = sorted(
                    x1 + (c - y1) * (x2 - x1) / (y2 - y1)
                    for c in (lo, hi)
                    if min(y1, y2) < c < max(y1, y2)
                )
                for x in crossings:
                    refined.append((x, self(x)))
            refined.append((x2, y2))
        return PLFunction([(x, min(hi, max(lo, y))) for x, y in refined], self._halfline)

    def __str__(self) -> str:
        body = ",".join(f"({x},{y})" for x, y in self._points)
        if self._halfline:
            return f"domain=halfline; points={body}; tail={self.tail}"
        a, b = self._points[0][0], self._points[-1][0]
        return f"domain=[{a},{b}]; points={body}"

    def __repr__(self) -> str:
        return f"PLFunction({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "PLFunction":
        m = re.fullmatch(
            r"\s*domain\s*=\s*(halfline|\[[^\]]*\])\s*;\s*points\s*=\s*(.+?)\s*(?:;\s*tail\s*=\s*(.+?)\s*)?",
            text,
            re.DOTALL,
        )
        if not m:
            raise ValueError(f"malformed piecewise-linear text: {text!r}")
        halfline = m.group(1) == "halfline"
        pts = []
        for pm in re.finditer(r"\(\s*([^,()]+)\s*,\s*([^,()]+)\s*\)", m.group(2)):
            pts.append((_parse_rational(pm.group(1)), _parse_rational(pm.group(2))))
        if not pts:
            raise ValueError(f"no breakpoints in {text!r}")
        f = cls(pts, halfline)
        if m.group(3) is not None:
            declared = _parse_rational(m.group(3))
            if not halfline:
                raise ValueError("tail is only meaningful on a half-line domain")
            if declared != f.tail:
                raise ValueError(f"declared tail {declared} differs from last breakpoint value {f.tail}")
        if not halfline:
            a, b = m.group(1)[1:-1].split(",")
            if _parse_rational(a) != f.points[0][0] or _parse_rational(b) != f.points[-1][0]:
                raise ValueError("declared interval does not match first/last breakpoints")
        return f


def _collinear(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction], c: tuple[Fraction, Fraction]) -> bool:
    return (c[1] - a[1]) * (b[0] - a[0]) == (b[1] - a[1]) * (c[0] - a[0])


def _same_domain(f: PLFunction, g: PLFunction) -> None:
    if f.domain() != g.domain():
        raise ValueError(f"domain mismatch: {f.domain()} vs {g.domain()}")


def _merged_abscissae(f: PLFunction, g: PLFunction) -> list[Fraction]:
    return sorted({x for x, _ in f.points} | {x for x, _ in g.points})


def pl_dist(f: PLFunction, g: PLFunction) -> Fraction:
    """Exact sup of |f - g|, attained on the merged breakpoint refinement."""
    _same_domain(f, g)
    return max(abs(f(x) - g(x)) for x in _merged_abscissae(f, g))


def pl_equal(f: PLFunction, g: PLFunction) -> bool:
    _same_domain(f, g)
    return all(f(x) == g(x) for x in _merged_abscissae(f, g))


def pl_sup_norm(f: PLFunction) -> Fraction:
    return max(abs(y) for _, y in f.points)


UNIT_INTERVAL_DOMAIN = ("interval", Fraction(-1), Fraction(1))


def _require_unit_ball(f: PLFunction) -> None:
    if f.domain() != UNIT_INTERVAL_DOMAIN:
        raise ValueError("expected a function on [-1, 1]")
    if pl_sup_norm(f) > 1:
        raise ValueError("expected sup norm at most 1")


def clamp_shift(f: PLFunction) -> PLFunction:
    """t -> min(1, max(-1, f(t) + 2t)) on [-1, 1]; nonexpansive, fixed point free."""
    _require_unit_ball(f)
    return f.add_affine(2, 0).clamp(-1, 1)


def pl_discrepancy(f: PLFunction) -> Fraction:
    """Least merged breakpoint where clamp_shift(f) differs from f.

    A fixed point would need f(t) = 1 for t > 0 and f(t) = -1 for t < 0,
    which no continuous function does, so the search always succeeds.
    """
    _require_unit_ball(f)
    image = clamp_shift(f)
    for x in _merged_abscissae(f, image):
        if image(x) != f(x):
            return x
    raise UnexpectedFixedPoint(f"clamp shift fixed {f}")


class SeqRep:
    """Rational sequence indexed from 1, constant past a finite prefix.

    Normalized: trailing prefix entries equal to the tail constant are
    dropped, so equal representatives compare equal structurally.
    """

    __slots__ = ("_prefix", "_tail")

    def __init__(self, prefix: Sequence[Rational] = (), tail: Rational = 0) -> None:
        self._tail = _q(tail)
        entries = [_q(v) for v in prefix]
        while entries and entries[-1] == self._tail:
            entries.pop()
        self._prefix = tuple(entries)

    @property
    def prefix(self) -> tuple[Fraction, ...]:
        return self._prefix

    @property
    def tail(self) -> Fraction:
        return self._tail

    def value(self, n: int) -> Fraction:
        if n < 1:
            raise ValueError("sequence entries are indexed from 1")
        return self._prefix[n - 1] if n <= len(self._prefix) else self._tail

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SeqRep):
            return NotImplemented
        return self._tail == other._tail and self._prefix == other._prefix

    def __hash__(self) -> int:
        return hash((self._tail, self._prefix))

    def __str__(self) -> str:
        body = ", ".join(str(v) for v in self._prefix)
        return f"prefix=[{body}]; tail={self._tail}"

    def __repr__(self) -> str:
        return f"SeqRep({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "SeqRep":
        m = re.fullmatch(r"\s*prefix\s*=\s*\[(.*)\]\s*;\s*tail\s*=\s*(.+?)\s*", text, re.DOTALL)
        if not m:
            raise ValueError(f"malformed sequence text: {text!r}")
        body = m.group(1).strip()
        prefix = [_parse_rational(v) for v in body.split(",")] if body else []
        return cls(prefix, _parse_rational(m.group(2)))


def seq_dist(a: SeqRep, b: SeqRep) -> Fraction:
    """Exact sup over n >= 1 of |a_n - b_n|."""
    span = max(len(a.prefix), len(b.prefix))
    gaps = [abs(a.tail - b.tail)] + [abs(a.value(n) - b.value(n)) for n in range(1, span + 1)]
    return max(gaps)


def quotient_equal(a: SeqRep, b: SeqRep) -> bool:
    """Equality modulo null sequences: the pointwise difference tends to 0."""
    return a.tail == b.tail


def quotient_seminorm(a: SeqRep) -> Fraction:
    """limsup |a_n|, which for a tail-constant sequence is |tail|."""
    return abs(a.tail)


def sample_sequence(f: PLFunction) -> SeqRep:
    """Sample a half-line function at the positive integers.

    The prefix runs to the smallest integer at or beyond the last
    breakpoint; past it the function holds its tail value.  Nonexpansive:
    samples are point evaluations.
    """
    if not f.is_halfline:
        raise ValueError("sampling requires a half-line domain")
    n_last = math.ceil(f.points[-1][0])
    return SeqRep([f(n) for n in range(1, n_last + 1)], f.tail)


def interpolate_sequence(a: SeqRep) -> PLFunction:
    """Linear interpolation of a sequence, anchored at value 0 for x = 0.

    Breakpoints sit at the integers, so the value at non-integer x is
    (ceil(x) - x) a_floor(x) + (x - floor(x)) a_ceil(x).  Sampling at the
    integers recovers the sequence exactly, and interpolated gaps are
    convex combinations of entry gaps, so the map is nonexpansive.
    """
    pts = [(Fraction(0), Fraction(0))]
    pts += [(Fraction(n), a.value(n)) for n in range(1, len(a.prefix) + 1)]
    pts.append((Fraction(len(a.prefix) + 1), a.tail))
    return PLFunction.on_halfline(pts)
