"""The tests for the surd approximant module."""

from fractions import Fraction
import random
import unittest

import pytest

from tripos_surd.approximant import (
    SurdForm,
    check_next_order,
    derive,
    evaluate,
    expand,
    expand_coefficients,
)
from tripos_surd.const import TRIPOS_FRACTION
from tripos_surd.errors import ArgumentError, PoleError
from tripos_surd.series_engine import binomial_coefficient


def _form_values(form: SurdForm) -> tuple:
    return (form.a, form.b, form.c, form.d, form.e)


class TestDerive(unittest.TestCase):
    """Derivation of the surd forms"""

    def test_fourth_root(self):
        form = derive(4)
        assert _form_values(form) == (
            Fraction(51, 56),
            Fraction(5, 56),
            27,
            98,
            70,
        )
        assert form.e / form.d == Fraction(5, 7)
        assert form.ratio == Fraction(7, 12)
        assert form.correction == Fraction(9, 56)
        assert str(form) == "k=4 A=51/56 B=5/56 C=27 D=98 E=70"

    def test_square_root(self):
        form = derive(2)
        assert _form_values(form) == (
            Fraction(3, 4),
            Fraction(1, 4),
            1,
            2,
            2,
        )

    def test_cube_root(self):
        form = derive(3)
        assert _form_values(form) == (
            Fraction(13, 15),
            Fraction(2, 15),
            9,
            25,
            20,
        )

    def test_rejects_small_index(self):
        with pytest.raises(ArgumentError):
            derive(1)
        with pytest.raises(ArgumentError):
            derive(True)

    def test_matches_series_through_cubic(self):
        """The first four coefficients are those of (1+t)^(1/k)."""
        for k in range(2, 13):
            alpha = Fraction(1, k)
            expected = [binomial_coefficient(alpha, j) for j in range(4)]
            assert expand(derive(k), 3) == expected, k

    def test_invariants_hold(self):
        for k in range(2, 13):
            form = derive(k)
            assert form.a + form.b == 1
            assert form.d > 0
            assert form.d + form.e != 0

    def test_uniqueness(self):
        """Perturbing any one coefficient breaks the match."""
        rng = random.Random(56)
        for _ in range(100):
            k = rng.randint(2, 8)
            form = derive(k)
            target = expand(form, 3)
            values = list(_form_values(form))
            index = rng.randrange(5)
            delta = Fraction(rng.choice([-1, 1]) * rng.randint(1, 50), 97)
            values[index] += delta
            if values[3] + values[4] == 0:
                continue
            assert expand_coefficients(*values, 3) != target, (k, index)

    def test_scale_invariance(self):
        """Scaling C, D and E together leaves the expansion alone."""
        form = derive(4)
        for scale in (Fraction(2), Fraction(-3, 7), Fraction(1, 14)):
            assert expand_coefficients(
                form.a,
                form.b,
                form.c * scale,
                form.d * scale,
                form.e * scale,
                6,
            ) == expand(form, 6)


class TestSurdForm(unittest.TestCase):
    """Construction and records"""

    def test_canonicalizes(self):
        form = SurdForm.from_coefficients(
            4,
            Fraction(51, 56),
            Fraction(5, 56),
            Fraction(-9, 56),
            Fraction(-7, 12),
            Fraction(-5, 12),
        )
        assert form == derive(4)

    def test_rejects_non_canonical(self):
        with pytest.raises(ArgumentError):
            SurdForm(
                4, Fraction(51, 56), Fraction(5, 56), 54, 196, 140
            )
        with pytest.raises(ArgumentError):
            SurdForm(4, Fraction(1, 2), Fraction(1, 4), 27, 98, 70)
        with pytest.raises(ArgumentError):
            SurdForm(4, Fraction(51, 56), Fraction(5, 56), -27, -98, -70)
        with pytest.raises(PoleError):
            SurdForm(4, Fraction(1, 2), Fraction(1, 2), 1, 1, -1)

    def test_record_round_trip(self):
        form = derive(3)
        record = form.to_record()
        assert record == {
            "k": 3,
            "A": "13/15",
            "B": "2/15",
            "C": "9/1",
            "D": "25/1",
            "E": "20/1",
        }
        assert SurdForm.from_record(record) == form

    def test_bad_record(self):
        record = derive(4).to_record()
        del record["E"]
        with pytest.raises(ArgumentError):
            SurdForm.from_record(record)
        with pytest.raises(ArgumentError):
            SurdForm.from_record({**derive(4).to_record(), "A": "half"})


class TestEvaluate(unittest.TestCase):
    """Exact evaluation"""

    def test_tripos_fraction(self):
        value = evaluate(derive(4), 10, 1)
        assert value == TRIPOS_FRACTION
        assert value == Fraction(1920160001, 192011200)

    def test_square_root_of_four(self):
        """3/4 + 4/4 + 3/(2*4 + 2) at N = 1, x = 3."""
        assert evaluate(derive(2), 1, 3) == Fraction(41, 20)

    def test_exact_at_zero_offset(self):
        for k in range(2, 9):
            for n in (Fraction(1), Fraction(7, 3), Fraction(10)):
                assert evaluate(derive(k), n, 0) == n

    def test_homogeneity(self):
        """S(lN, l^k x) = l S(N, x)."""
        rng = random.Random(7)
        for _ in range(50):
            k = rng.randint(2, 6)
            n = Fraction(rng.randint(1, 30), rng.randint(1, 5))
            x = Fraction(rng.randint(-10, 10), rng.randint(1, 9)) * n**k / 20
            scale = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            form = derive(k)
            assert evaluate(form, scale * n, scale**k * x) == scale * (
                evaluate(form, n, x)
            )

    def test_scaled_coefficients_evaluate_alike(self):
        """Scaling C, D and E together leaves S unchanged."""
        rng = random.Random(98)
        for _ in range(100):
            k = rng.randint(2, 8)
            form = derive(k)
            scale = Fraction(rng.choice([-1, 1]) * rng.randint(1, 40), 7)
            scaled = SurdForm.from_coefficients(
                k,
                form.a,
                form.b,
                form.c * scale,
                form.d * scale,
                form.e * scale,
            )
            n = Fraction(rng.randint(1, 50), rng.randint(1, 5))
            x = Fraction(rng.randint(-9, 9), 20) * n**k
            assert evaluate(scaled, n, x) == evaluate(form, n, x)
            # the raw scaled expression, before canonicalizing
            power = n**k
            raw = (
                form.a * n
                + form.b * (power + x) / n ** (k - 1)
                + form.c * scale * n * x
                / (form.d * scale * (power + x) + form.e * scale * power)
            )
            assert raw == evaluate(form, n, x)

    def test_pole(self):
        # 2(N^2 + x) + 2N^2 = 0 at N = 1, x = -2
        with pytest.raises(PoleError):
            evaluate(derive(2), 1, -2)

    def test_non_positive_n(self):
        with pytest.raises(ArgumentError):
            evaluate(derive(4), 0, 1)


class TestExpansion(unittest.TestCase):
    """Maclaurin coefficients of S/N"""

    def test_fourth_root(self):
        assert expand(derive(4), 4) == [
            1,
            Fraction(1, 4),
            Fraction(-3, 32),
            Fraction(7, 128),
            Fraction(-49, 1536),
        ]
        assert expand(derive(4), 0) == [1]

    def test_square_root(self):
        assert expand(derive(2), 4) == [
            1,
            Fraction(1, 2),
            Fraction(-1, 8),
            Fraction(1, 16),
            Fraction(-1, 32),
        ]

    def test_negative_order(self):
        with pytest.raises(ArgumentError):
            expand(derive(4), -1)


class TestNextOrder(unittest.TestCase):
    """The t^4 coefficient cannot be matched as well"""

    def test_fourth_root(self):
        report = check_next_order(derive(4))
        assert report.required_ratio == Fraction(11, 16)
        assert report.actual_ratio == Fraction(7, 12)
        assert not report.consistent

    def test_square_and_cube_roots(self):
        report = check_next_order(derive(2))
        assert report.required_ratio == Fraction(5, 8)
        assert report.actual_ratio == Fraction(1, 2)
        report = check_next_order(derive(3))
        assert report.required_ratio == Fraction(2, 3)
        assert report.actual_ratio == Fraction(5, 9)

    def test_never_consistent(self):
        for k in range(2, 13):
            assert not check_next_order(derive(k)).consistent, k
