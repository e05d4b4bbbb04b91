"""Eventually-constant ordinal-indexed functions with exact rational values.

A StepFn is a total function on all representable ordinals: it takes its
tail value everywhere except on a finite set of deviation positions.  With
tail 0 these model the sup-norm space of functions vanishing off a small
set; with arbitrary tail, the space of functions constant off a small set.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

from .ordinal import OMEGA, ZERO, Ordinal
from .ordinal import parse as parse_ordinal

Rational = Union[Fraction, int, str]


def _q(x: Rational) -> Fraction:
    if isinstance(x, float):
        raise TypeError("floats are not exact; pass Fraction, int, or 'p/q' text")
    return x if isinstance(x, Fraction) else Fraction(x)


class StepFn:
    """Ordinal-indexed function equal to `tail` off a finite deviation set.

    Normalized on construction: no deviation value equals the tail, keys are
    distinct and stored in increasing ordinal order.  Instances are immutable
    values; all operations return new objects.
    """

    __slots__ = ("_tail", "_dev")

    def __init__(
        self,
        tail: Rational,
        deviations: Union[Mapping[Ordinal, Rational], Iterable[tuple[Ordinal, Rational]]] = (),
    ) -> None:
        self._tail = _q(tail)
        items = deviations.items() if isinstance(deviations, Mapping) else deviations
        dev: dict[Ordinal, Fraction] = {}
        seen: set[Ordinal] = set()
        for key, value in items:
            if not isinstance(key, Ordinal):
                raise TypeError(f"deviation key must be an Ordinal, got {type(key).__name__}")
            if key in seen:
                raise ValueError(f"duplicate deviation key {key}")
            seen.add(key)
            value = _q(value)
            if value != self._tail:
                dev[key] = value
        self._dev = dict(sorted(dev.items(), key=lambda kv: kv[0]))

    @classmethod
    def constant(cls, value: Rational) -> "StepFn":
        return cls(value)

    @property
    def tail(self) -> Fraction:
        return self._tail

    @property
    def deviations(self) -> Mapping[Ordinal, Fraction]:
        return MappingProxyType(self._dev)

    def __call__(self, gamma: Ordinal) -> Fraction:
        return self._dev.get(gamma, self._tail)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, StepFn):
            return NotImplemented
        return self._tail == other._tail and self._dev == other._dev

    def __hash__(self) -> int:
        return hash((self._tail, frozenset(self._dev.items())))

    # -- pointwise algebra -------------------------------------------------

    @staticmethod
    def _as_stepfn(x: object) -> "StepFn | None":
        if isinstance(x, StepFn):
            return x
        if isinstance(x, (Fraction, int, str)) and not isinstance(x, bool):
            return StepFn(x)
        return None

    def _zip(self, other: object, op) -> "StepFn":
        rhs = self._as_stepfn(other)
        if rhs is None:
            return NotImplemented
        tail = op(self._tail, rhs._tail)
        dev = {k: op(self(k), rhs(k)) for k in set(self._dev) | set(rhs._dev)}
        return StepFn(tail, dev)

    def _map(self, op) -> "StepFn":
        return StepFn(op(self._tail), {k: op(v) for k, v in self._dev.items()})

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._zip(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self) -> "StepFn":
        return self._map(lambda v: -v)

    def __abs__(self) -> "StepFn":
        return self._map(abs)

    def scale(self, factor: Rational) -> "StepFn":
        return self * _q(factor)

    def clamp(self, lo: Rational, hi: Rational) -> "StepFn":
        lo, hi = _q(lo), _q(hi)
        if lo > hi:
            raise ValueError(f"clamp bounds out of order: {lo} > {hi}")
        return self._map(lambda v: min(hi, max(lo, v)))

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        body = ", ".join(f"{k}:{v}" for k, v in self._dev.items())
        return f"tail={self._tail}; [{body}]"

    def __repr__(self) -> str:
        return f"StepFn({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "StepFn":
        """Parse `tail=<rational>; [<ordinal>:<rational>, ...]` text."""
        m = re.fullmatch(r"\s*tail\s*=\s*([^;]+?)\s*(?:;\s*\[(.*)\]\s*)?", text, re.DOTALL)
        if not m:
            raise ValueError(f"malformed step function text: {text!r}")
        tail = _parse_rational(m.group(1))
        dev = []
        body = (m.group(2) or "").strip()
        if body:
            for entry in body.split(","):
                if ":" not in entry:
                    raise ValueError(f"malformed deviation entry {entry.strip()!r}")
                at, _, value = entry.partition(":")
                dev.append((parse_ordinal(at.strip()), _parse_rational(value)))
        return cls(tail, dev)

    def to_json_obj(self) -> dict:
        return {
            "tail": str(self._tail),
            "deviations": [{"at": str(k), "value": str(v)} for k, v in self._dev.items()],
        }


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text.strip()!r}: {exc}") from None


@dataclass(frozen=True)
class Ball:
    """Closed sup-norm ball: all step functions within `radius` of `center`."""

    center: StepFn
    radius: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "radius", _q(self.radius))
        if self.radius < 0:
            raise ValueError("ball radius must be nonnegative")

    def contains(self, f: StepFn) -> bool:
        return dist(f, self.center) <= self.radius

    __contains__ = contains

    def __str__(self) -> str:
        return f"center={self.center}; r={self.radius}"

    @classmethod
    def parse(cls, text: str) -> "Ball":
        m = re.fullmatch(r"\s*center\s*=(.*);\s*r\s*=\s*(.+?)\s*", text, re.DOTALL)
        if not m:
            raise ValueError(f"malformed ball text: {text!r}")
        return cls(StepFn.parse(m.group(1)), _parse_rational(m.group(2)))


def sup_norm(f: StepFn) -> Fraction:
    """Exact sup of |f|; attained since f takes finitely many values."""
    return max([abs(f.tail)] + [abs(v) for v in f.deviations.values()])


def dist(f: StepFn, g: StepFn) -> Fraction:
    """Exact sup of |f - g|; equals sup_norm(f - g) without building it."""
    gap = abs(f.tail - g.tail)
    for k in set(f.deviations) | set(g.deviations):
        d = abs(f(k) - g(k))
        if d > gap:
            gap = d
    return gap


def in_ball(f: StepFn, ball: Ball) -> bool:
    return ball.contains(f)


def pointwise_min(f: StepFn, g: StepFn) -> StepFn:
    return f._zip(g, min)


def pointwise_max(f: StepFn, g: StepFn) -> StepFn:
    return f._zip(g, max)


def family_sup(fns: Iterable[StepFn]) -> StepFn:
    """Pointwise supremum of a nonempty finite family."""
    items = list(fns)
    if not items:
        raise ValueError("sup of an empty family is undefined")
    result = items[0]
    for f in items[1:]:
        result = pointwise_max(result, f)
    return result


def family_inf(fns: Iterable[StepFn]) -> StepFn:
    items = list(fns)
    if not items:
        raise ValueError("inf of an empty family is undefined")
    result = items[0]
    for f in items[1:]:
        result = pointwise_min(result, f)
    return result


def sign(f: StepFn) -> StepFn:
    """Pointwise sign in {-1, 0, 1}; satisfies sign(f) * abs(f) == f exactly."""
    def sgn(v: Fraction) -> Fraction:
        return Fraction((v > 0) - (v < 0))

    return f._map(sgn)


def pointwise_le(f: StepFn, g: StepFn) -> bool:
    """True iff f(gamma) <= g(gamma) for every ordinal gamma."""
    if f.tail > g.tail:
        return False
    return all(f(k) <= g(k) for k in set(f.deviations) | set(g.deviations))


def fresh_beyond(*fns: StepFn) -> Ordinal:
    """An ordinal outside every deviation set: sup of all keys, plus omega."""
    top = ZERO
    for f in fns:
        for k in f.deviations:
            if k > top:
                top = k
    return top + OMEGA
