"""Surd approximants of k-th roots.

With M = N^k + x and t = x/N^k the template is

    S = A*N + B*M/N^(k-1) + C*N*x/(D*M + E*N^k)
      = N * (A + B + B*t + C' t/(1 + r*t)),   r = D/(D+E), C' = C/(D+E),

so its Maclaurin coefficients in t are A+B, B+C', and C'(-r)^(j-1) for
j >= 2. Matching these to the binomial series of (1+t)^(1/k) through t^3
fixes r, C', B and A uniquely; the t^4 coefficient can then no longer be
matched.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import logging
import math

import voluptuous as vol

from .const import KEY_ROOT, MATCHED_ORDER, SURD_RECORD_KEYS
from .errors import ArgumentError, PoleError
from .exact_numerics import RationalLike, as_rational, format_rational
from .options import SURD_RECORD_SCHEMA
from .series_engine import binomial_coefficient

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class SurdForm:
    """Coefficients of the surd approximant for root index k. C, D and E
    are kept as coprime integers with D > 0, which removes the freedom of
    scaling numerator and denominator of the correction term together."""

    k: int
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction

    def __post_init__(self) -> None:
        if isinstance(self.k, bool) or not isinstance(self.k, int):
            raise ArgumentError(f"root index must be an int, got {self.k}")
        if self.k < 2:
            raise ArgumentError(f"root index must be >= 2, got {self.k}")
        for name in ("a", "b", "c", "d", "e"):
            object.__setattr__(self, name, as_rational(getattr(self, name)))
        if any(v.denominator != 1 for v in (self.c, self.d, self.e)):
            raise ArgumentError("C, D and E must be integers")
        if self.d <= 0:
            raise ArgumentError(f"D must be positive, got {self.d}")
        if math.gcd(*(int(v) for v in (self.c, self.d, self.e))) != 1:
            raise ArgumentError("C, D and E must be coprime")
        if self.a + self.b != 1:
            raise ArgumentError("A + B must equal 1")
        if self.d + self.e == 0:
            raise PoleError("D + E must not vanish")

    @classmethod
    def from_coefficients(
        cls,
        k: int,
        a: RationalLike,
        b: RationalLike,
        c: RationalLike,
        d: RationalLike,
        e: RationalLike,
    ) -> SurdForm:
        """Build a form from arbitrary rational C, D, E by clearing
        denominators, dividing out the common factor and making D > 0."""
        c, d, e = (as_rational(v) for v in (c, d, e))
        if d == 0:
            raise ArgumentError("D must not be zero")
        common = math.lcm(c.denominator, d.denominator, e.denominator)
        ints = [int(v * common) for v in (c, d, e)]
        divisor = math.gcd(*ints)
        if d < 0:
            divisor = -divisor
        c, d, e = (Fraction(v, divisor) for v in ints)
        return cls(k, as_rational(a), as_rational(b), c, d, e)

    @property
    def ratio(self) -> Fraction:
        """r = D/(D+E), the geometric ratio of the correction term."""
        return self.d / (self.d + self.e)

    @property
    def correction(self) -> Fraction:
        """C' = C/(D+E)."""
        return self.c / (self.d + self.e)

    def to_record(self) -> dict:
        """JSON-compatible record with rationals as "p/q" strings."""
        record = {KEY_ROOT: self.k}
        for key, value in zip(
            SURD_RECORD_KEYS, (self.a, self.b, self.c, self.d, self.e)
        ):
            record[key] = format_rational(value)
        return record

    @classmethod
    def from_record(cls, record: dict) -> SurdForm:
        try:
            valid = SURD_RECORD_SCHEMA(record)
        except vol.Invalid as ex:
            raise ArgumentError(f"invalid surd record: {ex}") from ex
        return cls(
            valid[KEY_ROOT], *(valid[key] for key in SURD_RECORD_KEYS)
        )

    def __str__(self) -> str:
        values = (self.a, self.b, self.c, self.d, self.e)
        return f"k={self.k} " + " ".join(
            f"{key}={value}" for key, value in zip(SURD_RECORD_KEYS, values)
        )


@dataclass(frozen=True)
class ConsistencyReport:
    """The value of D/(D+E) a matched t^4 coefficient would force, next to
    the value the derived form actually has."""

    required_ratio: Fraction
    actual_ratio: Fraction
    consistent: bool = field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "consistent", self.required_ratio == self.actual_ratio
        )


@lru_cache(maxsize=64)
def derive(k: int) -> SurdForm:
    """Solve for the unique form matching (1+t)^(1/k) through t^3.
    With c_j = C(1/k, j): r = -c3/c2, C' = -c2/r, B = c1 - C', A = 1 - B.
    :param k: the root index, at least 2.
    :returns: the canonical SurdForm."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 2:
        raise ArgumentError(f"root index must be an int >= 2, got {k}")
    alpha = Fraction(1, k)
    c1, c2, c3 = (binomial_coefficient(alpha, j) for j in (1, 2, 3))
    ratio = -c3 / c2
    correction = -c2 / ratio
    b = c1 - correction
    # Taking D + E = 1 gives D = r and C = C'.
    form = SurdForm.from_coefficients(
        k, 1 - b, b, correction, ratio, 1 - ratio
    )
    _LOGGER.debug("Derived root %s form: %s", k, form)
    return form


def evaluate(form: SurdForm, n: RationalLike, x: RationalLike) -> Fraction:
    """Exact value of the approximant at N, x.
    :param form: the surd form.
    :param n: N > 0.
    :param x: offset with M = N^k + x.
    :returns: S as a Fraction."""
    n = as_rational(n)
    x = as_rational(x)
    if n <= 0:
        raise ArgumentError(f"N must be positive, got {n}")
    power = n**form.k
    m = power + x
    denominator = form.d * m + form.e * power
    if denominator == 0:
        raise PoleError(
            f"pole of the correction term at N={format_rational(n)}, "
            f"x={format_rational(x)}"
        )
    return (
        form.a * n
        + form.b * m / n ** (form.k - 1)
        + form.c * n * x / denominator
    )


def expand_coefficients(
    a: RationalLike,
    b: RationalLike,
    c: RationalLike,
    d: RationalLike,
    e: RationalLike,
    order: int,
) -> list[Fraction]:
    """Formal Maclaurin coefficients of S/N in t for any five coefficients,
    canonical or not."""
    if order < 0:
        raise ArgumentError(f"expansion order must be >= 0, got {order}")
    a, b, c, d, e = (as_rational(v) for v in (a, b, c, d, e))
    if d + e == 0:
        raise PoleError("D + E must not vanish")
    ratio = d / (d + e)
    correction = c / (d + e)
    coefficients = [a + b]
    if order >= 1:
        coefficients.append(b + correction)
    term = correction
    for _ in range(2, order + 1):
        term *= -ratio
        coefficients.append(term)
    return coefficients


def expand(form: SurdForm, order: int) -> list[Fraction]:
    """Coefficients of t^0..t^order in S/N. Formal only: the geometric
    series behind them converges for r*|t| < 1."""
    return expand_coefficients(
        form.a, form.b, form.c, form.d, form.e, order
    )


def check_next_order(form: SurdForm) -> ConsistencyReport:
    """Compare D/(D+E) with the ratio -c4/c3 that matching t^4 would need
    on top of the t^3 equation."""
    alpha = Fraction(1, form.k)
    c3 = binomial_coefficient(alpha, MATCHED_ORDER)
    c4 = binomial_coefficient(alpha, MATCHED_ORDER + 1)
    return ConsistencyReport(required_ratio=-c4 / c3, actual_ratio=form.ratio)
