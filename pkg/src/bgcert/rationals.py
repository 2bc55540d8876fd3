"""Exact scalars: arbitrary-precision rationals plus a +infinity sentinel.

Rationals are `fractions.Fraction`, which already guarantees lowest terms and
a positive denominator. No floating point is used anywhere in this package.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

RATIONAL_GRAMMAR = re.compile(r"-?[0-9]+(/[0-9]+)?")


def parse_rational(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact Fraction.

    The accepted grammar is ``-?[0-9]+(/[0-9]+)?``; anything else (signs on
    the denominator, whitespace inside, decimals) is rejected.
    """
    s = text.strip()
    if not RATIONAL_GRAMMAR.fullmatch(s):
        raise ValueError(f"malformed rational {text!r}: expected p or p/q")
    if "/" in s:
        p, q = s.split("/")
        if int(q) == 0:
            raise ValueError(f"malformed rational {text!r}: denominator is zero")
        return Fraction(int(p), int(q))
    return Fraction(int(s))


def format_rational(value: Fraction | int) -> str:
    """Render as "p/q", or just "p" when the denominator is 1."""
    f = Fraction(value)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


class _PlusInfinity:
    """Sentinel that compares greater than every rational.

    Used as the slope of torsion classes. There is a single instance,
    ``INFINITY``; never construct more.
    """

    __slots__ = ()

    def _comparable(self, other) -> bool:
        return isinstance(other, (int, Fraction, _PlusInfinity))

    def __lt__(self, other):
        if not self._comparable(other):
            return NotImplemented
        return False

    def __le__(self, other):
        if not self._comparable(other):
            return NotImplemented
        return isinstance(other, _PlusInfinity)

    def __gt__(self, other):
        if not self._comparable(other):
            return NotImplemented
        return not isinstance(other, _PlusInfinity)

    def __ge__(self, other):
        if not self._comparable(other):
            return NotImplemented
        return True

    def __eq__(self, other):
        return isinstance(other, _PlusInfinity)

    def __ne__(self, other):
        return not isinstance(other, _PlusInfinity)

    def __hash__(self):
        return hash("bgcert.INFINITY")

    def __repr__(self):
        return "+inf"


INFINITY = _PlusInfinity()

ExtendedRational = Union[Fraction, _PlusInfinity]


def format_extended(value: ExtendedRational) -> str:
    """Render a rational as "p/q" and the infinite sentinel as "+inf"."""
    if isinstance(value, _PlusInfinity):
        return "+inf"
    return format_rational(value)
