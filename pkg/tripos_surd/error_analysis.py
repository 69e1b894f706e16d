"""Error analysis of the surd approximant.

For the fourth-root form, with t = x/N^4 and X somewhere between 0 and t,

    E = 4th-root(M) - S
      = c4 * {(1+X)^(-15/4) - rho/(1 + r*t)} * N * t^4,

where c4 = C(1/4, 4) = -77/2048, r = 7/12 and rho = 28/33. The
constants are not typed in: they are read off the derived form and the
binomial series, see tripos_constants(). Because (1+X)^(-15/4) is
monotone, the range of E is spanned by X = 0 and X = t.

Other root indices use the same argument in generic form: the remainder
enclosure of the cubic Taylor polynomial minus the exact rational tail of
the surd's own expansion.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
import logging

from .approximant import SurdForm, derive, evaluate
from .const import (
    DEFAULT_DIGITS,
    GUARD_DIGITS,
    MATCHED_ORDER,
    NOTE_CORRECTION_RATIO,
    NOTE_REMAINDER_POWER,
    PERCENT_NEGATIVE_DIVISOR,
    PERCENT_POSITIVE_DIVISOR,
    SIGN_NEGATIVE,
    SIGN_POSITIVE,
    TRIPOS_ACCURATE_PLACES,
    TRIPOS_BOUND_FIGURE,
    TRIPOS_COINCIDENCE,
    TRIPOS_ERROR_CEILING,
    TRIPOS_ERROR_FIGURE,
    TRIPOS_ERROR_FLOOR,
    TRIPOS_FRACTION,
    TRIPOS_N,
    TRIPOS_ROOT,
    TRIPOS_X,
    WINDOW_TOLERANCE,
)
from .errors import ArgumentError, DomainError
from .exact_numerics import (
    Interval,
    RationalLike,
    as_rational,
    format_rational,
    leading_digits,
    nth_root_interval,
    rational_pow_interval,
    to_scientific,
)
from .series_engine import (
    binomial_coefficient,
    remainder_enclosure,
    truncated_series,
)

_LOGGER = logging.getLogger(__name__)


class Sign(Enum):
    """Sign of x in the percent bounds."""

    POSITIVE = SIGN_POSITIVE
    NEGATIVE = SIGN_NEGATIVE


@dataclass(frozen=True)
class TriposConstants:
    """Constants of the fourth-root error formula."""

    # C(1/4, 4)
    remainder: Fraction
    # rho, the weight of the restoring term
    restoring: Fraction
    # r = D/(D+E)
    ratio: Fraction
    # 1/4 - 4
    exponent: Fraction


@dataclass(frozen=True)
class Window:
    """Range of t = x/N^4 on which the fourth-root form overestimates."""

    lower: Fraction
    upper: Interval


@dataclass(frozen=True)
class ErrorReport:
    """True error and formula enclosure of one (N, x) instance.
    overestimates is True when t lies in the proven window, else None."""

    n_value: Fraction
    x_value: Fraction
    true_error: Interval
    formula_enclosure: Interval
    overestimates: bool | None = None

    @property
    def bound(self) -> Fraction:
        """Largest |E| the formula allows."""
        return self.formula_enclosure.magnitude()


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class TriposVerification:
    """Everything needed to confirm the 1886 claim for N = 10, x = 1."""

    fraction: Fraction
    true_error: Interval
    formula_enclosure: Interval
    bound: Fraction
    accurate_places: int | None
    checks: tuple[Check, ...]
    notes: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _eps(digits: int) -> Fraction:
    if digits < 0:
        raise ArgumentError(f"digits must be >= 0, got {digits}")
    return Fraction(1, 10**digits)


@lru_cache(maxsize=1)
def tripos_constants() -> TriposConstants:
    """Read c4, rho, r and the remainder exponent off derive(4).
    The surd's tail beyond t^3 is -C' r^3 t^4 / (1 + r t), so
    rho = C' r^3 / |c4|."""
    form = derive(TRIPOS_ROOT)
    alpha = Fraction(1, TRIPOS_ROOT)
    remainder = binomial_coefficient(alpha, MATCHED_ORDER + 1)
    ratio = form.ratio
    restoring = form.correction * ratio**MATCHED_ORDER / -remainder
    return TriposConstants(
        remainder=remainder,
        restoring=restoring,
        ratio=ratio,
        exponent=alpha - MATCHED_ORDER - 1,
    )


def _restoring_term(t: Fraction) -> Fraction:
    constants = tripos_constants()
    return constants.restoring / (1 + constants.ratio * t)


def _bracket_sign(t: Fraction) -> int:
    """Sign of g(t) = (1+t)^(-15/4) - rho/(1 + r t), decided exactly by
    comparing (1+t)^(-15) with (rho/(1 + r t))^4."""
    constants = tripos_constants()
    left = (1 + t) ** constants.exponent.numerator
    right = _restoring_term(t) ** constants.exponent.denominator
    return (left > right) - (left < right)


def _offset(n: Fraction, x: Fraction, k: int) -> Fraction:
    """t = x/N^k after checking N > 0 and 1 + t > 0."""
    if n <= 0:
        raise ArgumentError(f"N must be positive, got {n}")
    t = x / n**k
    if 1 + t <= 0:
        raise DomainError(
            f"need M = N^k + x > 0, got N={format_rational(n)}, "
            f"x={format_rational(x)}"
        )
    return t


def _within_hypothesis(t: Fraction) -> bool:
    return tripos_constants().ratio * abs(t) < 1


def true_error(
    form: SurdForm,
    n: RationalLike,
    x: RationalLike,
    digits: int = DEFAULT_DIGITS,
) -> Interval:
    """Enclose k-th-root(N^k + x) - S(x) to width 10^-digits.
    :param form: the surd form.
    :param n: N > 0.
    :param x: offset, with N^k + x > 0.
    :param digits: width exponent of the enclosure.
    :returns: the true error enclosure."""
    n = as_rational(n)
    x = as_rational(x)
    _offset(n, x, form.k)
    approximation = evaluate(form, n, x)
    root = nth_root_interval(n**form.k + x, form.k, _eps(digits))
    return root - approximation


def formula_at(
    n: RationalLike,
    x: RationalLike,
    point: RationalLike,
    digits: int = DEFAULT_DIGITS,
) -> Interval:
    """Value of the fourth-root error formula with X fixed at `point`.
    X = 0 gives an exact rational."""
    n = as_rational(n)
    x = as_rational(x)
    point = as_rational(point)
    t = _offset(n, x, TRIPOS_ROOT)
    if not min(0, t) <= point <= max(0, t):
        raise ArgumentError(f"X = {point} is not between 0 and {t}")
    constants = tripos_constants()
    factor = rational_pow_interval(
        1 + point, constants.exponent, _eps(digits + GUARD_DIGITS)
    )
    return (factor - _restoring_term(t)) * (constants.remainder * n * t**4)


def formula_enclosure(
    n: RationalLike, x: RationalLike, digits: int = DEFAULT_DIGITS
) -> Interval:
    """Hull of the fourth-root error formula as X sweeps [0, t] (or
    [t, 0]). The power is monotone, so only the ends are evaluated.
    :param n: N > 0.
    :param x: offset with 1 + t > 0 and (7/12)|t| < 1.
    :param digits: guard-free precision of the power enclosures.
    :returns: an enclosure of E."""
    n = as_rational(n)
    x = as_rational(x)
    t = _offset(n, x, TRIPOS_ROOT)
    if not _within_hypothesis(t):
        raise DomainError(f"error formula needs r*|t| < 1, got t = {t}")
    if x == 0:
        return Interval.point(0)
    return Interval.hull(
        formula_at(n, x, 0, digits), formula_at(n, x, t, digits)
    )


def series_error_enclosure(
    form: SurdForm,
    n: RationalLike,
    x: RationalLike,
    digits: int = DEFAULT_DIGITS,
) -> Interval:
    """Enclose the error of any derived form: the Lagrange remainder of the
    cubic Taylor polynomial minus the exact tail S/N - T3(t), times N."""
    n = as_rational(n)
    x = as_rational(x)
    t = _offset(n, x, form.k)
    alpha = Fraction(1, form.k)
    tail = evaluate(form, n, x) / n - truncated_series(
        alpha, MATCHED_ORDER, t
    )
    remainder = remainder_enclosure(alpha, MATCHED_ORDER, t, digits)
    return (remainder - tail) * n


def taylor_error(
    k: int, t: RationalLike, digits: int = DEFAULT_DIGITS
) -> Interval:
    """Enclose (1+t)^(1/k) - T3(t), the error of the bare cubic Taylor
    polynomial per unit N."""
    t = as_rational(t)
    if 1 + t <= 0:
        raise DomainError(f"need 1 + t > 0, got t = {t}")
    root = nth_root_interval(1 + t, k, _eps(digits))
    return root - truncated_series(Fraction(1, k), MATCHED_ORDER, t)


@lru_cache(maxsize=8)
def overestimate_window(tolerance: Fraction = WINDOW_TOLERANCE) -> Window:
    """The window (lower, upper) of t where the fourth-root form provably
    overestimates. lower solves 1 = rho/(1 + r t) exactly; upper is the
    positive root of g, bracketed by exact-sign bisection.
    :param tolerance: largest width of the upper enclosure.
    :returns: the Window."""
    tolerance = as_rational(tolerance)
    if tolerance <= 0:
        raise ArgumentError(f"tolerance must be positive, got {tolerance}")
    constants = tripos_constants()
    lower = (constants.restoring - 1) / constants.ratio
    low, high = Fraction(0), Fraction(1)
    if _bracket_sign(low) <= 0 or _bracket_sign(high) >= 0:
        raise DomainError("no sign change of g on [0, 1]")
    while high - low > tolerance:
        middle = (low + high) / 2
        sign = _bracket_sign(middle)
        if sign == 0:
            low = high = middle
        elif sign > 0:
            low = middle
        else:
            high = middle
    _LOGGER.debug("Window upper end in [%s, %s]", low, high)
    return Window(lower=lower, upper=Interval(low, high))


def in_overestimate_window(t: RationalLike) -> bool:
    """Exact membership: lower < t, and g(t) > 0 when t > 0."""
    t = as_rational(t)
    if t <= overestimate_window().lower:
        return False
    return t <= 0 or _bracket_sign(t) > 0


def percent_bound(
    p: RationalLike,
    sign: Sign | str,
    digits: int = DEFAULT_DIGITS,
) -> Interval:
    """Per-N error bound when M differs from N^4 by less than p% of
    either: |E| < bound * N.
    :param p: the percentage, positive.
    :param sign: sign of x.
    :param digits: precision of the power enclosure (negative branch).
    :returns: the bound; a point for positive x."""
    p = as_rational(p)
    if p <= 0:
        raise ArgumentError(f"percentage must be positive, got {p}")
    try:
        sign = Sign(sign)
    except ValueError as ex:
        raise ArgumentError(f"unknown sign {sign!r}") from ex
    constants = tripos_constants()
    weight = -constants.remainder
    share = p / 100
    if sign is Sign.POSITIVE:
        if not in_overestimate_window(share):
            _LOGGER.warning("p = %s%% reaches outside the window", p)
        value = (
            weight
            * (1 - constants.restoring / (1 + constants.ratio * share))
            * share**4
        )
        return Interval.point(value)
    limit = p / (100 + p)
    if not in_overestimate_window(-limit):
        _LOGGER.warning("p = %s%% reaches outside the window", p)
    growth = rational_pow_interval(
        1 + share, -constants.exponent, _eps(digits + GUARD_DIGITS)
    )
    return (growth - constants.restoring) * (weight * limit**4)


def accurate_places(enclosure: Interval) -> int | None:
    """Largest d with |E| < 10^-d / 2 over the whole enclosure; None for
    an exact zero, 0 when even the units are off."""
    magnitude = enclosure.magnitude()
    if magnitude == 0:
        return None
    places = 0
    while 2 * magnitude * 10 ** (places + 1) < 1:
        places += 1
    return places


def _digits_to_resolve(value: Fraction) -> int:
    """Smallest d with 10^-d <= value / 4; 0 for non-positive value."""
    digits = 0
    if value <= 0:
        return digits
    while Fraction(4, 10**digits) > value:
        digits += 1
    return digits


def error_report(
    form: SurdForm,
    n: RationalLike,
    x: RationalLike,
    digits: int = DEFAULT_DIGITS,
) -> ErrorReport:
    """Build the ErrorReport of one instance. The fourth-root form gets
    the closed error formula where its hypothesis holds; everything else
    gets the generic series enclosure. Inside the window the true error is
    computed finely enough to show its sign."""
    n = as_rational(n)
    x = as_rational(x)
    t = _offset(n, x, form.k)
    overestimates = None
    if form == derive(TRIPOS_ROOT) and _within_hypothesis(t):
        enclosure = formula_enclosure(n, x, digits)
        if in_overestimate_window(t):
            overestimates = True
    else:
        enclosure = series_error_enclosure(form, n, x, digits)
    if overestimates and x != 0:
        digits = max(digits, _digits_to_resolve(enclosure.mignitude()))
    return ErrorReport(
        n_value=n,
        x_value=x,
        true_error=true_error(form, n, x, digits),
        formula_enclosure=enclosure,
        overestimates=overestimates,
    )


def verify_tripos(digits: int = DEFAULT_DIGITS) -> TriposVerification:
    """Reproduce the 1886 claim: for N = 10, x = 1 the fourth-root form
    is accurate to 16 decimal places, and the X = 0 end of the error
    formula coincides with the true error to 10^-20.
    :param digits: working precision; never below DEFAULT_DIGITS, so a
        short display cannot weaken the checks."""
    digits = max(digits, DEFAULT_DIGITS)
    form = derive(TRIPOS_ROOT)
    fraction = evaluate(form, TRIPOS_N, TRIPOS_X)
    error = true_error(form, TRIPOS_N, TRIPOS_X, digits + GUARD_DIGITS)
    enclosure = formula_enclosure(TRIPOS_N, TRIPOS_X, digits)
    bound = formula_at(TRIPOS_N, TRIPOS_X, 0, digits).magnitude()
    places = accurate_places(error)
    figure_count = len(TRIPOS_ERROR_FIGURE[0])
    gap = max(abs(bound - abs(error.lo)), abs(bound - abs(error.hi)))
    above = percent_bound(1, Sign.POSITIVE, digits)
    below = percent_bound(1, Sign.NEGATIVE, digits)
    checks = (
        Check(
            "exact fraction",
            fraction == TRIPOS_FRACTION,
            format_rational(fraction),
        ),
        Check(
            "true error figure",
            all(
                leading_digits(end, figure_count) == TRIPOS_ERROR_FIGURE
                for end in (error.lo, error.hi)
            ),
            to_scientific(error.midpoint(), figure_count),
        ),
        Check(
            "accurate to 16 places",
            error.magnitude() < TRIPOS_ERROR_CEILING
            and places == TRIPOS_ACCURATE_PLACES,
            f"{places} places",
        ),
        Check(
            "misses 17 places",
            error.mignitude() > TRIPOS_ERROR_FLOOR,
            f"|E| > {to_scientific(TRIPOS_ERROR_FLOOR, 1)}",
        ),
        Check(
            "overestimates",
            error.hi < 0,
            f"E <= {to_scientific(error.hi, figure_count)}",
        ),
        Check(
            "bound figure",
            leading_digits(bound, figure_count) == TRIPOS_BOUND_FIGURE,
            to_scientific(bound, figure_count),
        ),
        Check(
            "formula encloses true error",
            enclosure.contains(error),
            str(enclosure),
        ),
        Check(
            "bound coincides to 1e-20",
            gap < TRIPOS_COINCIDENCE,
            f"gap < {to_scientific(gap, 2)}",
        ),
        Check(
            "1% bound for x > 0",
            above.hi < Fraction(1, PERCENT_POSITIVE_DIVISOR),
            f"|E| < {to_scientific(above.hi, figure_count)} N",
        ),
        Check(
            "1% bound for x < 0",
            below.hi < Fraction(1, PERCENT_NEGATIVE_DIVISOR),
            f"|E| < {to_scientific(below.hi, figure_count)} N",
        ),
    )
    for check in checks:
        _LOGGER.debug("Check %s: %s", check.name, check.passed)
    return TriposVerification(
        fraction=fraction,
        true_error=error,
        formula_enclosure=enclosure,
        bound=bound,
        accurate_places=places,
        checks=checks,
        notes=(NOTE_REMAINDER_POWER, NOTE_CORRECTION_RATIO),
    )
