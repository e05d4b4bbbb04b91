"""Exact arithmetic for ordinals below epsilon_0 in Cantor normal form."""

from __future__ import annotations

from enum import Enum
from functools import total_ordering
from typing import Iterable, Union


class Kind(Enum):
    ZERO = "zero"
    SUCCESSOR = "successor"
    LIMIT = "limit"


class OrdinalParseError(ValueError):
    """Malformed or non-canonical ordinal text; carries the offending position."""

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} (at position {position})")
        self.position = position


@total_ordering
class Ordinal:
    """An ordinal below epsilon_0 in Cantor normal form.

    Stored as a tuple of (exponent, coefficient) pairs, exponents being
    ordinals themselves, strictly decreasing, with positive integer
    coefficients.  The empty tuple is 0.  Normal form is enforced at
    construction, so structural equality coincides with ordinal equality
    and instances can be shared freely (they are never mutated).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Iterable[tuple[Union["Ordinal", int], int]] = ()) -> None:
        canon: list[tuple[Ordinal, int]] = []
        prev: Ordinal | None = None
        for exp, coeff in terms:
            if isinstance(exp, int):
                exp = Ordinal.from_int(exp)
            elif not isinstance(exp, Ordinal):
                raise TypeError(f"exponent must be Ordinal or int, got {type(exp).__name__}")
            if not isinstance(coeff, int) or isinstance(coeff, bool) or coeff < 1:
                raise ValueError(f"coefficient must be a positive integer, got {coeff!r}")
            if prev is not None and not prev > exp:
                raise ValueError("exponents must be strictly decreasing")
            canon.append((exp, coeff))
            prev = exp
        self._terms = tuple(canon)
        self._hash = hash(self._terms)

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError(f"expected int, got {type(n).__name__}")
        if n < 0:
            raise ValueError("ordinals are nonnegative")
        if n == 0:
            return cls(())
        return cls(((cls(()), n),))

    @property
    def terms(self) -> tuple[tuple["Ordinal", int], ...]:
        return self._terms

    # -- order ----------------------------------------------------------

    @staticmethod
    def _coerce(x: object) -> "Ordinal | None":
        if isinstance(x, Ordinal):
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return Ordinal.from_int(x) if x >= 0 else None
        return None

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Ordinal):
            return self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self._terms == Ordinal.from_int(other)._terms
        return NotImplemented

    def __lt__(self, other: object) -> bool:
        if isinstance(other, int) and not isinstance(other, bool) and other < 0:
            return False
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        # Tuple comparison of CNF terms is exactly the ordinal order.
        return self._terms < coerced._terms

    def __hash__(self) -> int:
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: object) -> "Ordinal":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        if not coerced._terms:
            return self
        if not self._terms:
            return coerced
        lead = coerced._terms[0][0]
        i = len(self._terms)
        while i > 0 and self._terms[i - 1][0] < lead:
            i -= 1
        head = self._terms[:i]
        if head and head[-1][0] == lead:
            merged = (lead, head[-1][1] + coerced._terms[0][1])
            return Ordinal(head[:-1] + (merged,) + coerced._terms[1:])
        return Ordinal(head + coerced._terms)

    def __radd__(self, other: object) -> "Ordinal":
        coerced = self._coerce(other)
        if coerced is None:
            return NotImplemented
        return coerced + self

    # -- structure -------------------------------------------------------

    def classify(self) -> Kind:
        if not self._terms:
            return Kind.ZERO
        return Kind.SUCCESSOR if not self._terms[-1][0] else Kind.LIMIT

    def is_zero(self) -> bool:
        return not self._terms

    def is_successor(self) -> bool:
        return self.classify() is Kind.SUCCESSOR

    def is_limit(self) -> bool:
        return self.classify() is Kind.LIMIT

    def is_finite(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not self._terms[0][0])

    def split_finite(self) -> tuple["Ordinal", int]:
        """Unique decomposition a = limit_part + n with limit_part zero or limit."""
        if self._terms and not self._terms[-1][0]:
            return Ordinal(self._terms[:-1]), self._terms[-1][1]
        return self, 0

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in self._terms:
            if not exp:
                parts.append(str(coeff))
                continue
            if exp == ONE:
                s = "w"
            elif exp.is_finite():
                s = f"w^{exp._terms[0][1]}"
            else:
                s = f"w^({exp})"
            if coeff > 1:
                s += f"*{coeff}"
            parts.append(s)
        return "+".join(parts)

    def __repr__(self) -> str:
        return f"Ordinal({str(self)!r})"


ZERO = Ordinal()
ONE = Ordinal.from_int(1)
OMEGA = Ordinal(((ONE, 1),))


def cmp(a: Ordinal, b: Ordinal) -> int:
    """Three-way comparison: -1, 0, or 1 for less, equal, greater."""
    if a == b:
        return 0
    return -1 if a < b else 1


def classify(a: Ordinal) -> Kind:
    return a.classify()


def split_finite(a: Ordinal) -> tuple[Ordinal, int]:
    return a.split_finite()


def sup_finite(ordinals: Iterable[Ordinal]) -> Ordinal:
    """Supremum of a nonempty finite set, i.e. its maximum."""
    items = list(ordinals)
    if not items:
        raise ValueError("sup of an empty set of ordinals is undefined")
    return max(items)


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def error(self, message: str) -> None:
        raise OrdinalParseError(message, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def term(self) -> tuple[Ordinal, int, int]:
        """Returns (exponent, coefficient, start position)."""
        c = self.peek()
        start = self.pos
        if c.isdigit():
            return ZERO, self.nat(), start
        if c == "w":
            self.pos += 1
            exp = ONE
            if self.peek() == "^":
                self.pos += 1
                exp = self.ordexp()
            coeff = 1
            if self.peek() == "*":
                self.pos += 1
                coeff = self.nat()
            return exp, coeff, start
        self.error(f"expected a term, found {c!r}" if c else "expected a term, found end of input")
        raise AssertionError("unreachable")

    def ordexp(self) -> Ordinal:
        c = self.peek()
        if c.isdigit():
            return Ordinal.from_int(self.nat())
        if c == "(":
            self.pos += 1
            inner = self.ordinal()
            self.expect(")")
            return inner
        self.error(f"expected an exponent, found {c!r}" if c else "expected an exponent, found end of input")
        raise AssertionError("unreachable")

    def ordinal(self) -> Ordinal:
        terms: list[tuple[Ordinal, int, int]] = [self.term()]
        while self.peek() == "+":
            self.pos += 1
            terms.append(self.term())
        if len(terms) == 1 and not terms[0][0] and terms[0][1] == 0:
            return ZERO
        prev: Ordinal | None = None
        canon = []
        for exp, coeff, start in terms:
            if coeff == 0:
                self.pos = start
                self.error("zero coefficient is not in normal form")
            if prev is not None and not prev > exp:
                self.pos = start
                self.error("exponents must be strictly decreasing")
            canon.append((exp, coeff))
            prev = exp
        return Ordinal(canon)


def parse(text: str) -> Ordinal:
    """Parse ordinal text: 0 | term(+term)*, term = w[^exp][*nat] | nat."""
    p = _Parser(text)
    result = p.ordinal()
    if p.peek():
        p.error(f"unexpected trailing input {p.peek()!r}")
    return result
