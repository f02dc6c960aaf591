"""Exact rational arithmetic, decimal rendering and two-endpoint enclosures.

Every finite quantity in the package is a :class:`fractions.Fraction`; decimal
strings are produced only when results leave the library.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[Fraction, int]

MAX_SCALE = 100_000


def rat(n: int, d: int = 1) -> Fraction:
    """Return the reduced fraction ``n/d`` with a positive denominator."""
    if d == 0:
        raise ZeroDivisionError(f"zero denominator in rat({n}, {d})")
    return Fraction(n, d)


class Rounding(str, enum.Enum):
    TOWARD_ZERO = "toward-zero"
    HALF_EVEN = "half-even"


@dataclass(frozen=True)
class DecimalRendering:
    digits: str
    scale: int
    rounding: Rounding

    def __str__(self) -> str:
        return self.digits

    def to_rational(self) -> Fraction:
        return parse_decimal(self.digits)


def parse_decimal(text: str) -> Fraction:
    """Parse a plain decimal string such as ``-3.1415`` into an exact rational."""
    text = text.strip()
    sign = -1 if text.startswith("-") else 1
    body = text.lstrip("+-")
    whole, _, frac = body.partition(".")
    if not (whole + frac).isdigit():
        raise ValueError(f"not a decimal literal: {text!r}")
    return sign * Fraction(int(whole + frac), 10 ** len(frac))


def _scaled_integer(x: Fraction, scale: int, rounding: Rounding) -> int:
    num = abs(x.numerator) * 10**scale
    q, r = divmod(num, x.denominator)
    if rounding is Rounding.HALF_EVEN:
        twice = 2 * r
        if twice > x.denominator or (twice == x.denominator and q % 2 == 1):
            q += 1
    return q if x >= 0 else -q


def to_decimal(
    x: RationalLike, scale: int, rounding: Rounding | str = Rounding.TOWARD_ZERO
) -> DecimalRendering:
    """Render ``x`` with exactly ``scale`` digits after the decimal point.

    Toward-zero rounding is plain truncation of the exact expansion.
    """
    rounding = Rounding(rounding)
    if not 0 <= scale <= MAX_SCALE:
        raise ValueError(f"scale must lie in [0, {MAX_SCALE}], got {scale}")
    x = Fraction(x)
    q = _scaled_integer(x, scale, rounding)
    digits = str(abs(q)).rjust(scale + 1, "0")
    body = digits[:-scale] + "." + digits[-scale:] if scale else digits
    if q < 0:
        body = "-" + body
    return DecimalRendering(body, scale, rounding)


@dataclass(frozen=True)
class Enclosure:
    """Closed interval ``[lower, upper]`` with rational endpoints."""

    lower: Fraction
    upper: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lower", Fraction(self.lower))
        object.__setattr__(self, "upper", Fraction(self.upper))
        if self.lower > self.upper:
            raise ValueError(f"invalid enclosure: {self.lower} > {self.upper}")

    @classmethod
    def point(cls, x: RationalLike) -> Enclosure:
        return cls(Fraction(x), Fraction(x))

    @classmethod
    def hull(cls, a: RationalLike, b: RationalLike) -> Enclosure:
        return cls(min(a, b), max(a, b))

    @property
    def width(self) -> Fraction:
        return self.upper - self.lower

    @property
    def midpoint(self) -> Fraction:
        return (self.lower + self.upper) / 2

    def contains(self, x: RationalLike) -> bool:
        return self.lower <= x <= self.upper

    def strictly_contains(self, x: RationalLike) -> bool:
        return self.lower < x < self.upper

    def contains_zero(self) -> bool:
        return self.lower <= 0 <= self.upper

    def overlaps(self, other: Enclosure) -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def intersect(self, other: Enclosure) -> Enclosure:
        if not self.overlaps(other):
            raise ValueError(f"disjoint enclosures {self} and {other}")
        return Enclosure(max(self.lower, other.lower), min(self.upper, other.upper))

    def magnitude(self) -> Fraction:
        """Largest absolute value attained on the interval."""
        return max(abs(self.lower), abs(self.upper))

    def mignitude(self) -> Fraction:
        """Smallest absolute value attained on the interval."""
        if self.contains_zero():
            return Fraction(0)
        return min(abs(self.lower), abs(self.upper))

    def __abs__(self) -> Enclosure:
        return Enclosure(self.mignitude(), self.magnitude())

    def __neg__(self) -> Enclosure:
        return Enclosure(-self.upper, -self.lower)

    def __add__(self, other) -> Enclosure:
        other = _lift(other)
        return Enclosure(self.lower + other.lower, self.upper + other.upper)

    __radd__ = __add__

    def __sub__(self, other) -> Enclosure:
        return self + (-_lift(other))

    def __rsub__(self, other) -> Enclosure:
        return _lift(other) - self

    def __mul__(self, other) -> Enclosure:
        other = _lift(other)
        products = [
            self.lower * other.lower,
            self.lower * other.upper,
            self.upper * other.lower,
            self.upper * other.upper,
        ]
        return Enclosure(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> Enclosure:
        if self.contains_zero():
            raise ZeroDivisionError(f"enclosure {self} contains zero")
        return Enclosure(1 / self.upper, 1 / self.lower)

    def __truediv__(self, other) -> Enclosure:
        return self * _lift(other).reciprocal()

    def __rtruediv__(self, other) -> Enclosure:
        return _lift(other) * self.reciprocal()

    def __str__(self) -> str:
        return f"[{self.lower}, {self.upper}]"


def _lift(x) -> Enclosure:
    if isinstance(x, Enclosure):
        return x
    if isinstance(x, (int, Fraction)):
        return Enclosure.point(x)
    raise TypeError(f"cannot combine Enclosure with {type(x).__name__}")


def enclosure_width(e: Enclosure) -> Fraction:
    return e.upper - e.lower
