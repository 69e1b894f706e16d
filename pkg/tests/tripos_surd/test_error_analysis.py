"""The tests for the error analysis module."""

from fractions import Fraction
import random
import unittest

import pytest

from tripos_surd.approximant import derive
from tripos_surd.const import (
    PERCENT_NEGATIVE_DIVISOR,
    PERCENT_POSITIVE_DIVISOR,
    TRIPOS_BOUND_FIGURE,
    TRIPOS_ERROR_FIGURE,
    TRIPOS_FRACTION,
)
from tripos_surd.errors import ArgumentError, DomainError
from tripos_surd.error_analysis import (
    Sign,
    accurate_places,
    error_report,
    formula_at,
    formula_enclosure,
    in_overestimate_window,
    overestimate_window,
    percent_bound,
    series_error_enclosure,
    taylor_error,
    tripos_constants,
    true_error,
    verify_tripos,
)
from tripos_surd.exact_numerics import Interval, leading_digits

FOURTH = derive(4)
PRECISE = 40


def _window_sample(rng: random.Random) -> Fraction:
    """A t well inside (-20/77, 0.0533) and away from zero."""
    while True:
        t = Fraction(rng.randint(-2500, 520), 10000)
        if abs(t) >= Fraction(1, 10000):
            return t


class TestConstants(unittest.TestCase):
    """Constants of the error formula come from the derived form"""

    def test_values(self):
        constants = tripos_constants()
        assert constants.remainder == Fraction(-77, 2048)
        assert constants.restoring == Fraction(28, 33)
        assert constants.ratio == Fraction(7, 12)
        assert constants.exponent == Fraction(-15, 4)


class TestTriposInstance(unittest.TestCase):
    """The 1886 instance N = 10, x = 1"""

    def test_true_error_figure(self):
        error = true_error(FOURTH, 10, 1, 24)
        assert error.width() <= Fraction(1, 10**24)
        assert error.hi < 0
        for end in (error.lo, error.hi):
            assert leading_digits(end, 7) == TRIPOS_ERROR_FIGURE

    def test_bound_figure(self):
        bound = formula_at(10, 1, 0)
        assert bound.is_point
        assert leading_digits(bound.lo, 7) == TRIPOS_BOUND_FIGURE
        assert bound.lo == Fraction(-46217787, 8110553088) / 10**15

    def test_bound_coincides_with_true_error(self):
        error = true_error(FOURTH, 10, 1, 34)
        bound = formula_at(10, 1, 0).lo
        assert abs(bound - error.lo) < Fraction(1, 10**20)

    def test_enclosure_contains_true_error(self):
        enclosure = formula_enclosure(10, 1)
        assert enclosure.contains(true_error(FOURTH, 10, 1, 34))
        assert enclosure.magnitude() < Fraction(57, 10**19)

    def test_accurate_places(self):
        assert accurate_places(true_error(FOURTH, 10, 1, 34)) == 16

    def test_verify(self):
        verification = verify_tripos()
        assert verification.passed, [
            check.name for check in verification.checks if not check.passed
        ]
        assert verification.fraction == TRIPOS_FRACTION
        assert verification.accurate_places == 16
        assert len(verification.checks) == 10
        assert len(verification.notes) == 2

    def test_verify_low_precision(self):
        """A small digits request is raised to the working minimum."""
        assert verify_tripos(3).passed
        assert verify_tripos(0).accurate_places == 16


class TestErrorFormula(unittest.TestCase):
    """Enclosures of the fourth-root error"""

    def test_zero_offset(self):
        assert formula_enclosure(7, 0) == Interval.point(0)
        assert true_error(FOURTH, 7, 0) == Interval.point(0)

    def test_negative_offset(self):
        """N = 1, x = -1/16: the ends X = -1/16 and X = 0."""
        enclosure = formula_enclosure(1, Fraction(-1, 16), PRECISE)
        assert enclosure == Interval.hull(
            formula_at(1, Fraction(-1, 16), 0, PRECISE),
            formula_at(1, Fraction(-1, 16), Fraction(-1, 16), PRECISE),
        )
        assert enclosure.contains(
            true_error(FOURTH, 1, Fraction(-1, 16), PRECISE)
        )

    def test_point_must_lie_between(self):
        with pytest.raises(ArgumentError):
            formula_at(10, 1, Fraction(1, 1000))

    def test_hypothesis_violation(self):
        with pytest.raises(DomainError):
            formula_enclosure(1, 2)
        with pytest.raises(DomainError):
            true_error(FOURTH, 1, -1)
        with pytest.raises(ArgumentError):
            true_error(FOURTH, -1, 1)

    def test_random_containment_and_sign(self):
        """Inside the window the enclosure holds the true error and both
        are negative: the form overestimates."""
        rng = random.Random(1886)
        for _ in range(200):
            n = Fraction(rng.randint(2, 100))
            t = _window_sample(rng)
            x = t * n**4
            error = true_error(FOURTH, n, x, PRECISE)
            enclosure = formula_enclosure(n, x, PRECISE)
            assert enclosure.contains(error), (n, x)
            assert error.hi < 0, (n, x)
            assert enclosure.hi < 0, (n, x)

    def test_bound_dominates(self):
        rng = random.Random(28)
        for _ in range(100):
            n = Fraction(rng.randint(1, 50))
            t = _window_sample(rng)
            x = t * n**4
            report = error_report(FOURTH, n, x, PRECISE)
            assert report.true_error.magnitude() <= report.bound
            assert report.overestimates

    def test_quartic_scaling(self):
        """Halving t divides E/N by roughly 16."""
        small = formula_at(1, Fraction(1, 2000), 0).lo
        smaller = formula_at(1, Fraction(1, 4000), 0).lo
        ratio = small / smaller
        assert Fraction(15) < ratio < Fraction(17)

    def test_true_error_quartic_scaling(self):
        """Halving x divides the true error by roughly 16."""
        rng = random.Random(16)
        for _ in range(100):
            n = Fraction(rng.randint(2, 100))
            t = Fraction(rng.choice([-1, 1]) * rng.randint(1, 10), 1000)
            x = t * n**4
            full = true_error(FOURTH, n, x, PRECISE).midpoint()
            half = true_error(FOURTH, n, x / 2, PRECISE).midpoint()
            assert Fraction(15) < full / half < Fraction(17), (n, x)

    def test_other_roots(self):
        """The series enclosure holds the true error for any k."""
        rng = random.Random(3)
        for _ in range(100):
            k = rng.randint(2, 8)
            form = derive(k)
            n = Fraction(rng.randint(1, 6))
            t = Fraction(rng.choice([-1, 1]) * rng.randint(10, 400), 1000)
            x = t * n**k
            enclosure = series_error_enclosure(form, n, x, PRECISE)
            assert enclosure.contains(true_error(form, n, x, PRECISE)), (
                k,
                n,
                x,
            )

    def test_square_root_instance(self):
        report = error_report(derive(2), 1, 3, 12)
        assert report.true_error == Interval.point(Fraction(-1, 20))
        assert report.overestimates is None
        assert report.formula_enclosure.contains(report.true_error)


class TestTaylor(unittest.TestCase):
    """The bare cubic Taylor polynomial"""

    def test_taylor_worse_than_surd(self):
        for t in (Fraction(1, 100), Fraction(-1, 50), Fraction(1, 30)):
            taylor = taylor_error(4, t, PRECISE)
            surd = true_error(FOURTH, 1, t, PRECISE)
            assert surd.magnitude() < taylor.mignitude()

    def test_zero(self):
        assert taylor_error(4, 0) == Interval.point(0)


class TestWindow(unittest.TestCase):
    """Where the fourth-root form overestimates"""

    def test_ends(self):
        window = overestimate_window()
        assert window.lower == Fraction(-20, 77)
        assert Fraction("0.05336") < window.upper.lo
        assert window.upper.hi < Fraction("0.05337")
        assert window.upper.width() <= Fraction(1, 10**8)

    def test_membership(self):
        assert in_overestimate_window(0)
        assert in_overestimate_window(Fraction(1, 20))
        assert in_overestimate_window(Fraction(-1, 4))
        assert not in_overestimate_window(Fraction(-20, 77))
        assert not in_overestimate_window(Fraction(-26, 100))
        assert not in_overestimate_window(Fraction(6, 100))

    def test_bad_tolerance(self):
        with pytest.raises(ArgumentError):
            overestimate_window(Fraction(0))


class TestPercentBound(unittest.TestCase):
    """Bounds when M is within p% of N^4"""

    def test_bound_dominates_true_error(self):
        """|E| < bound * N whenever |x| is below p% of N^4 (x > 0) or
        of M (x < 0)."""
        rng = random.Random(1700)
        for _ in range(200):
            p = Fraction(rng.randint(1, 50), 10)
            n = Fraction(rng.randint(2, 100))
            share = Fraction(rng.randint(1, 999), 1000)
            if rng.random() < 0.5:
                sign = Sign.POSITIVE
                t = share * p / 100
            else:
                sign = Sign.NEGATIVE
                t = -share * p / (100 + p)
            x = t * n**4
            error = true_error(FOURTH, n, x, PRECISE)
            bound = percent_bound(p, sign, PRECISE)
            assert error.magnitude() < bound.hi * n, (p, n, x)

    def test_positive_one_percent(self):
        bound = percent_bound(1, Sign.POSITIVE)
        assert bound.is_point
        assert bound.hi < Fraction(1, PERCENT_POSITIVE_DIVISOR)
        assert bound.hi > Fraction(1, 17200000000)

    def test_negative_one_percent(self):
        bound = percent_bound(1, "neg")
        assert bound.lo > 0
        assert bound.hi < Fraction(1, PERCENT_NEGATIVE_DIVISOR)

    def test_small_percentage(self):
        for sign in Sign:
            bound = percent_bound(Fraction(1, 1000), sign)
            assert bound.hi < Fraction(1, 10**18)

    def test_errors(self):
        with pytest.raises(ArgumentError):
            percent_bound(0, Sign.POSITIVE)
        with pytest.raises(ArgumentError):
            percent_bound(1, "sideways")

    def test_outside_window_warns(self):
        with self.assertLogs("tripos_surd.error_analysis", "WARNING"):
            percent_bound(10, Sign.POSITIVE)


class TestAccuratePlaces(unittest.TestCase):
    """Decimal places to which an error is negligible"""

    def test_values(self):
        assert accurate_places(Interval.point(Fraction(4, 100))) == 1
        assert accurate_places(Interval.point(Fraction(5, 100))) == 0
        assert accurate_places(Interval.point(Fraction(1))) == 0
        assert accurate_places(Interval.point(0)) is None
        assert accurate_places(Interval(Fraction(-1, 10**5), 0)) == 4
