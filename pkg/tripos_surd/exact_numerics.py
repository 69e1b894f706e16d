"""Exact numerics. Every quantity in the toolkit is a Fraction or an
Interval of Fractions, so no rounding ever happens silently.

Irrational values (roots and rational powers) are never approximated by a
single number. They are enclosed: nth_root_interval returns two dyadic
rationals whose n-th powers bracket the radicand, checked with integer
arithmetic only. Decimal output is produced by long division and carries a
flag telling whether the rendering is exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import Union

import gmpy2

from .errors import ArgumentError, DomainError

# Logger for the module.
_LOGGER = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Coerce an exact value into a Fraction. Floats are refused because
    they would smuggle binary rounding into the computation.
    :param value: a Fraction, an int, or a "p/q" or decimal literal.
    :returns: the value as a Fraction."""
    if isinstance(value, bool):
        raise ArgumentError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ArgumentError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse "p/q", integer, decimal ("-0.05336") or exponent ("1e-4")
    literals. Decimals are read as scaled integers, never through float.
    :param text: the literal to parse.
    :returns: the exact value."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError, AttributeError) as ex:
        raise ArgumentError(f"not a rational literal: {text!r}") from ex


def format_rational(value: RationalLike) -> str:
    """Render as "p/q", denominator always present."""
    value = as_rational(value)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Interval:
    """A closed interval [lo, hi] with rational endpoints, enclosing a
    value that is usually irrational. Endpoints are exact, so every
    operation below returns the exact image hull."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        lo = as_rational(self.lo)
        hi = as_rational(self.hi)
        if lo > hi:
            raise ArgumentError(
                f"empty interval [{format_rational(lo)}, "
                f"{format_rational(hi)}]"
            )
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, value: RationalLike) -> Interval:
        """Zero-width interval."""
        value = as_rational(value)
        return cls(value, value)

    @classmethod
    def hull(cls, *items: Interval | RationalLike) -> Interval:
        """Smallest interval containing every item."""
        if not items:
            raise ArgumentError("hull of nothing")
        parts = [_coerce(item) for item in items]
        return cls(min(p.lo for p in parts), max(p.hi for p in parts))

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def width(self) -> Fraction:
        return self.hi - self.lo

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def magnitude(self) -> Fraction:
        """Largest absolute value in the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mignitude(self) -> Fraction:
        """Smallest absolute value in the interval."""
        if self.contains(0):
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def contains(self, item: Interval | RationalLike) -> bool:
        other = _coerce(item)
        return self.lo <= other.lo and other.hi <= self.hi

    def reciprocal(self) -> Interval:
        if self.contains(0):
            raise DomainError(f"reciprocal of {self} which contains zero")
        return Interval(1 / self.hi, 1 / self.lo)

    def __neg__(self) -> Interval:
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: Interval | RationalLike) -> Interval:
        other = _coerce(other)
        return Interval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other: Interval | RationalLike) -> Interval:
        return self + (-_coerce(other))

    def __rsub__(self, other: Interval | RationalLike) -> Interval:
        return _coerce(other) - self

    def __mul__(self, other: Interval | RationalLike) -> Interval:
        other = _coerce(other)
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return f"[{format_rational(self.lo)}, {format_rational(self.hi)}]"


def _coerce(item: Interval | RationalLike) -> Interval:
    if isinstance(item, Interval):
        return item
    return Interval.point(item)


@dataclass(frozen=True)
class DecimalString:
    """Fixed-point rendering of a rational, truncated toward zero."""

    sign: str
    integer_digits: str
    fractional_digits: str
    exact: bool

    @property
    def places(self) -> int:
        return len(self.fractional_digits)

    def to_rational(self) -> Fraction:
        return parse_rational(str(self))

    def __str__(self) -> str:
        text = self.sign + self.integer_digits
        if self.fractional_digits:
            text += "." + self.fractional_digits
        return text


def to_decimal(value: RationalLike, places: int) -> DecimalString:
    """Render value with `places` fractional digits, truncating toward
    zero. The exact flag is set iff value * 10^places is an integer.
    :param value: the rational to render.
    :param places: number of fractional digits, at least 0.
    :returns: the DecimalString."""
    if places < 0:
        raise ArgumentError(f"negative decimal places: {places}")
    value = as_rational(value)
    scaled = abs(value) * 10**places
    units, remainder = divmod(scaled.numerator, scaled.denominator)
    digits = str(units).rjust(places + 1, "0")
    split = len(digits) - places
    return DecimalString(
        sign="-" if value < 0 else "+",
        integer_digits=digits[:split],
        fractional_digits=digits[split:],
        exact=remainder == 0,
    )


def leading_digits(value: RationalLike, count: int) -> tuple[str, int]:
    """The first `count` significant digits of |value| (truncated) and the
    decimal exponent of the leading one, so 5.6956...e-18 with count 7
    gives ("5695655", -18). Zero gives all zeros and exponent 0."""
    if count < 1:
        raise ArgumentError(f"need at least one digit, got {count}")
    magnitude = abs(as_rational(value))
    if magnitude == 0:
        return "0" * count, 0
    exponent = len(str(magnitude.numerator)) - len(
        str(magnitude.denominator)
    )
    if magnitude < Fraction(10) ** exponent:
        exponent -= 1
    scaled = magnitude * Fraction(10) ** (count - 1 - exponent)
    return str(scaled.numerator // scaled.denominator), exponent


def to_scientific(value: RationalLike, count: int) -> str:
    """Truncated scientific rendering, e.g. "-5.695655e-18"."""
    value = as_rational(value)
    digits, exponent = leading_digits(value, count)
    sign = "-" if value < 0 else ""
    mantissa = digits[0] + ("." + digits[1:] if count > 1 else "")
    return f"{sign}{mantissa}e{exponent:+d}"


def nth_root_interval(
    value: RationalLike, n: int, eps: RationalLike
) -> Interval:
    """Enclose the real n-th root of value in an interval of width <= eps.
    The radicand is scaled by 2^(b*n) with 2^-b <= eps, the exact integer
    n-th root r of the floor is taken, and [r/2^b, (r+1)/2^b] is returned.
    Both endpoints are dyadic, so their size grows linearly in b. Perfect
    powers come back as points.
    :param value: the radicand; negative only for odd n.
    :param n: the root index, at least 1.
    :param eps: the largest acceptable width.
    :returns: the enclosure."""
    value = as_rational(value)
    eps = as_rational(eps)
    if n < 1:
        raise ArgumentError(f"root index must be at least 1, got {n}")
    if eps <= 0:
        raise ArgumentError(f"eps must be positive, got {eps}")
    if value < 0:
        if n % 2 == 0:
            raise DomainError(
                f"even root of negative {format_rational(value)}"
            )
        return -nth_root_interval(-value, n, eps)
    if value == 0:
        return Interval.point(0)
    exact = _exact_root(value, n)
    if exact is not None:
        return Interval.point(exact)
    bits = _bits_for(eps)
    floor_power = (value.numerator << (bits * n)) // value.denominator
    root = int(gmpy2.iroot(gmpy2.mpz(floor_power), n)[0])
    _LOGGER.debug("Root %s of %s enclosed with %s bits", n, value, bits)
    return Interval(Fraction(root, 1 << bits), Fraction(root + 1, 1 << bits))


def _exact_root(value: Fraction, n: int) -> Fraction | None:
    """The n-th root of a non-negative rational if it is rational."""
    num_root, num_exact = gmpy2.iroot(gmpy2.mpz(value.numerator), n)
    if not num_exact:
        return None
    den_root, den_exact = gmpy2.iroot(gmpy2.mpz(value.denominator), n)
    if not den_exact:
        return None
    return Fraction(int(num_root), int(den_root))


def _bits_for(eps: Fraction) -> int:
    """Smallest b >= 0 with 2^-b <= eps."""
    ceiling = -(-eps.denominator // eps.numerator)
    return max(0, (ceiling - 1).bit_length())


def rational_pow_interval(
    base: RationalLike, exponent: RationalLike, eps: RationalLike
) -> Interval:
    """Enclose base^(p/q) in an interval of width <= eps as the q-th root
    of the exact integer power base^|p|. Negative exponents take the exact
    reciprocal of that enclosure, tightening the root until the reciprocal
    is narrow enough.
    :param base: positive rational.
    :param exponent: rational exponent p/q.
    :param eps: the largest acceptable width.
    :returns: the enclosure."""
    base = as_rational(base)
    exponent = as_rational(exponent)
    eps = as_rational(eps)
    if base <= 0:
        raise DomainError(f"power of non-positive {format_rational(base)}")
    if eps <= 0:
        raise ArgumentError(f"eps must be positive, got {eps}")
    power = base ** abs(exponent.numerator)
    if exponent >= 0:
        return nth_root_interval(power, exponent.denominator, eps)
    inner = eps
    while True:
        enclosure = nth_root_interval(power, exponent.denominator, inner)
        if enclosure.lo > 0:
            reciprocal = enclosure.reciprocal()
            if reciprocal.width() <= eps:
                return reciprocal
            # width(1/I) <= width(I) / lo^2
            inner = min(inner / 2, eps * enclosure.lo**2 / 2)
        else:
            inner /= 1024
        _LOGGER.debug("Tightening root enclosure to %s", inner)
