"""Binomial series of (1+t)^alpha: exact coefficients, truncations, and an
enclosure of the Lagrange remainder.

For 1 + t > 0 and order m there is an X between 0 and t with

    (1+t)^alpha = sum_{j<=m} C(alpha, j) t^j
                  + C(alpha, m+1) (1+X)^(alpha-m-1) t^(m+1).

For 0 < alpha < 1 the exponent alpha-m-1 is negative, so the factor
(1+X)^(alpha-m-1) is monotone in X and its range is spanned by the values
at X = 0 and X = t.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
import logging

from .const import DEFAULT_DIGITS, GUARD_DIGITS
from .errors import ArgumentError, DomainError
from .exact_numerics import (
    Interval,
    RationalLike,
    as_rational,
    rational_pow_interval,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SeriesTruncation:
    """The binomial series of (1+t)^alpha cut after t^order."""

    alpha: Fraction
    order: int
    coefficients: tuple[Fraction, ...]

    def evaluate(self, t: RationalLike) -> Fraction:
        """Horner evaluation of the retained polynomial."""
        t = as_rational(t)
        total = Fraction(0)
        for coefficient in reversed(self.coefficients):
            total = total * t + coefficient
        return total


@lru_cache(maxsize=256)
def _coefficients(alpha: Fraction, order: int) -> tuple[Fraction, ...]:
    # C(a, j+1) = C(a, j) * (a - j) / (j + 1)
    coefficients = [Fraction(1)]
    for j in range(order):
        coefficients.append(coefficients[-1] * (alpha - j) / (j + 1))
    return tuple(coefficients)


def binomial_coefficient(alpha: RationalLike, j: int) -> Fraction:
    """Generalized binomial coefficient alpha(alpha-1)...(alpha-j+1)/j!.
    :param alpha: any rational.
    :param j: non-negative index; C(alpha, 0) = 1.
    :returns: the exact coefficient."""
    if j < 0:
        raise ArgumentError(f"binomial index must be >= 0, got {j}")
    return _coefficients(as_rational(alpha), j)[j]


def series_truncation(alpha: RationalLike, order: int) -> SeriesTruncation:
    if order < 0:
        raise ArgumentError(f"series order must be >= 0, got {order}")
    alpha = as_rational(alpha)
    return SeriesTruncation(alpha, order, _coefficients(alpha, order))


def truncated_series(
    alpha: RationalLike, order: int, t: RationalLike
) -> Fraction:
    """Sum of C(alpha, j) t^j for j = 0..order, exactly."""
    return series_truncation(alpha, order).evaluate(t)


def remainder_enclosure(
    alpha: RationalLike,
    order: int,
    t: RationalLike,
    digits: int = DEFAULT_DIGITS,
) -> Interval:
    """Enclose C(alpha, order+1) (1+X)^(alpha-order-1) t^(order+1) for all
    X between 0 and t, by evaluating the monotone power at both ends.
    :param alpha: exponent strictly between 0 and 1.
    :param order: highest retained power, at least 0.
    :param t: expansion variable with 1 + t > 0.
    :param digits: the power enclosure is taken to digits + GUARD_DIGITS.
    :returns: the remainder enclosure."""
    alpha = as_rational(alpha)
    t = as_rational(t)
    if not 0 < alpha < 1:
        raise ArgumentError(f"alpha must lie in (0, 1), got {alpha}")
    if order < 0:
        raise ArgumentError(f"series order must be >= 0, got {order}")
    if 1 + t <= 0:
        raise DomainError(f"expansion needs 1 + t > 0, got t = {t}")
    if t == 0:
        return Interval.point(0)
    scale = binomial_coefficient(alpha, order + 1) * t ** (order + 1)
    eps = Fraction(1, 10 ** (digits + GUARD_DIGITS))
    at_t = rational_pow_interval(1 + t, alpha - order - 1, eps)
    _LOGGER.debug(
        "Remainder of order %s at t=%s: factor in %s", order, t, at_t
    )
    return Interval.hull(Fraction(1), at_t) * scale
