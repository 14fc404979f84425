from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from truncriesz import Q, Rational, format_rational
from truncriesz.carriers import CoordinateCarrier, IntervalCarrier, CompactSupportCarrier
from truncriesz.core import (InputError, axiom_check_truncation, contraction_check, in_E_star,
                             parse_rational, truncation_bound)
from truncriesz.plfunction import PLFunction, REAL_LINE


def test_q_accepts_exact_forms():
    assert Q(3) == 3
    assert Q("6/4") == Q(3, 2)
    assert Q(Fraction(1, 3)) == Q(1, 3)
    assert isinstance(Q("-2/7"), Rational)


@pytest.mark.parametrize("bad", [0.5, True, None, "1.5", "1/0", "1/-2", "", "x"])
def test_q_rejects(bad):
    with pytest.raises(InputError):
        Q(bad)


def test_zero_denominator():
    with pytest.raises(InputError):
        Q(1, 0)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_format_round_trip(p, q):
    r = Q(p, q)
    text = format_rational(r)
    assert parse_rational(text) == r
    # canonical: lowest terms, denominator omitted when 1
    assert text == (str(p // q) if p % q == 0 else f"{Fraction(p, q).numerator}/{Fraction(p, q).denominator}")


def test_format_decimal():
    assert format_rational(Q(1, 3), decimal=True) == "0.333333333333333"


def test_axioms_on_known_elements():
    c = IntervalCarrier()
    x = PLFunction.hat(3)
    y = PLFunction.hat(Q(1, 2), center=Q(1, 2))
    assert axiom_check_truncation(c, x, y)
    assert contraction_check(c, x, y)


def test_axioms_reject_negative_input():
    c = CoordinateCarrier(2, (1, 1))
    with pytest.raises(InputError):
        axiom_check_truncation(c, c.vector(-1, 0), c.vector(1, 1))


def test_e_star_membership():
    c = CompactSupportCarrier()
    assert in_E_star(c, PLFunction((0, 1, 2), (0, -1, 0), REAL_LINE))
    assert not in_E_star(c, PLFunction((0, 1, 2), (0, 2, 0), REAL_LINE))


def test_truncation_bound_records_attainment():
    assert truncation_bound(CompactSupportCarrier()).attained
    tb = truncation_bound(IntervalCarrier())
    assert tb.bound == 1 and not tb.attained and tb.family is not None
    assert truncation_bound(CoordinateCarrier(2, (1, 1), ("1/2", "1/2"))).bound == 1
