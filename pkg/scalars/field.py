"""
Exact scalars: rationals (``fractions.Fraction``) and the real quadratic
field Q(sqrt5), which holds every root coordinate of the H-series.

A ``QuadExt`` never has a zero sqrt5 part: ``quad`` hands back a plain
Fraction instead, so equal numbers always share one representation.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union


_RATIONAL = r"[+-]?\d+(?:/\d+)?"
SCALAR_TEXT_RE = re.compile(rf"^({_RATIONAL})(?:([+-])(\d+(?:/\d+)?)\*sqrt5)?$")


@dataclass(frozen=True)
class QuadExt:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.b == 0:
            raise ValueError("QuadExt needs a non-zero sqrt5 part, use quad()")

    # arithmetic
    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        oa, ob = _parts(other)
        return quad(self.a + oa, self.b + ob)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        oa, ob = _parts(other)
        return quad(self.a - oa, self.b - ob)

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        oa, ob = _parts(other)
        return quad(oa - self.a, ob - self.b)

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        oa, ob = _parts(other)
        return quad(self.a * oa + 5 * self.b * ob, self.a * ob + self.b * oa)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return self * inv(other)

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other * inv(self)

    # comparison
    def __eq__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        oa, ob = _parts(other)
        return self.a == oa and self.b == ob

    def __hash__(self):
        return hash((self.a, self.b))

    def __bool__(self):
        return True

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __str__(self):
        return format_scalar(self)

    def __repr__(self):
        return f"QuadExt({format_scalar(self)})"

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b


Scalar = Union[Fraction, QuadExt]


def _lift(value):
    if isinstance(value, (Fraction, QuadExt)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return None


def _parts(value):
    if isinstance(value, QuadExt):
        return value.a, value.b
    return Fraction(value), Fraction(0)


def quad(a, b=0) -> Scalar:
    """Build a + b*sqrt5, collapsing to a Fraction when b is zero."""
    b = Fraction(b)
    if b == 0:
        return Fraction(a)
    return QuadExt(Fraction(a), b)


def to_scalar(value) -> Scalar:
    if isinstance(value, (Fraction, QuadExt)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact scalar")


ZERO = Fraction(0)
ONE = Fraction(1)
SQRT5 = QuadExt(Fraction(0), Fraction(1))
# golden ratio (1 + sqrt5) / 2, equal to 2cos(pi/5)
PHI = quad(Fraction(1, 2), Fraction(1, 2))


def add(x: Scalar, y: Scalar) -> Scalar:
    return x + y


def mul(x: Scalar, y: Scalar) -> Scalar:
    return x * y


def neg(x: Scalar) -> Scalar:
    return -x


def inv(x: Scalar) -> Scalar:
    if isinstance(x, QuadExt):
        n = x.norm()
        # a^2 - 5b^2 vanishes only at zero because sqrt5 is irrational
        return quad(x.a / n, -x.b / n)
    x = Fraction(x)
    if x == 0:
        raise ZeroDivisionError("inverse of zero scalar")
    return 1 / x


def is_zero(x: Scalar) -> bool:
    return not isinstance(x, QuadExt) and x == 0


def _sign_rational(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sign(x: Scalar) -> int:
    if not isinstance(x, QuadExt):
        return _sign_rational(Fraction(x))
    sa = _sign_rational(x.a)
    sb = _sign_rational(x.b)
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    # opposite signs: the term with the larger square wins
    if x.a * x.a > 5 * x.b * x.b:
        return sa
    return sb


def format_scalar(x: Scalar) -> str:
    if not isinstance(x, QuadExt):
        return str(Fraction(x))
    op = "+" if x.b > 0 else "-"
    return f"{x.a}{op}{abs(x.b)}*sqrt5"


def parse_scalar(text: str) -> Scalar:
    match = SCALAR_TEXT_RE.match((text or "").strip())
    if not match:
        raise ValueError(f"not a canonical scalar: {text!r}")
    rational, op, radical = match.groups()
    a = Fraction(rational)
    if radical is None:
        return a
    b = Fraction(radical)
    return quad(a, -b if op == "-" else b)
