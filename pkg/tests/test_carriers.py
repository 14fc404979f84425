import random

import pytest
from hypothesis import given, settings, strategies as st

from truncriesz import Q, make_fn, support_extension_witness
from truncriesz.carriers import (CompactSupportCarrier, CoordinateCarrier, CoordinateVector,
                                 IntervalCarrier, carrier_from_config, default_carriers)
from truncriesz.core import CarrierMismatchError, ConfigurationError, InputError
from truncriesz.plfunction import REAL_LINE, PLFunction


def test_coordinate_norm_is_rescaled():
    c = CoordinateCarrier(2, (2, 1), (1, 1))
    # ||e|| = 1 after rescaling by 1/(w.e) = 1/3
    assert c.norm(c.truncation_unit) == 1
    assert c.norm(c.vector(-3, 3)) == Q(3 * 1 + 3 * 1, 3)
    assert c.truncate(c.vector(5, Q(1, 2))) == c.vector(2, Q(1, 2))


def test_coordinate_defaults():
    c = carrier_from_config("coordinate")
    assert c.config()["weights"] == ["1/2", "1/2"]
    assert c.truncation_unit == CoordinateVector((Q(1), Q(1)))


def test_interval_truncation_bound_family():
    c = IntervalCarrier()
    for n in (2, 3, 64):
        assert c.norm(c.truncate(make_fn(n))) == 1 - Q(1, 2 * n)


def test_make_fn_shape_and_errors():
    f = make_fn(4)
    assert f.breakpoints == (-1, Q(-3, 4), Q(3, 4), 1) and f.values == (0, 1, 1, 0)
    for bad in (1, Q(5, 2), "3"):
        with pytest.raises(InputError):
            make_fn(bad)


def test_compact_truncation_attained():
    c = CompactSupportCarrier()
    assert c.norm(c.truncate(PLFunction.hat(5, 0, -1, 1, REAL_LINE))) == 1


def test_support_extension_witness():
    f = PLFunction((0, 1, 2), (0, 1, 0), REAL_LINE)
    g = support_extension_witness(f, 2)
    assert g.breakpoints == (0, 1, 2, 3, 4) and g.values == (0, 1, 0, 1, 0)
    with pytest.raises(InputError):
        support_extension_witness(PLFunction((0, 1, 2), (0, 2, 0), REAL_LINE), 2)


def test_mismatched_elements():
    with pytest.raises(CarrierMismatchError):
        IntervalCarrier().norm(PLFunction.zero(REAL_LINE))
    with pytest.raises(CarrierMismatchError):
        CoordinateCarrier(3).norm(CoordinateVector((Q(1), Q(2))))


def test_truncate_requires_positive():
    with pytest.raises(InputError):
        IntervalCarrier().truncate(PLFunction.hat(-1))


@pytest.mark.parametrize("cfg", [{"kind": "nope"}, {}, 7, {"kind": "coordinate", "dim": 2, "unit": [1, -1]}])
def test_bad_configs(cfg):
    with pytest.raises(ConfigurationError):
        carrier_from_config(cfg)


@pytest.mark.parametrize("carrier", default_carriers(), ids=lambda c: c.kind)
def test_config_round_trip(carrier):
    assert carrier_from_config(carrier.config()) == carrier


@pytest.mark.parametrize("carrier", default_carriers(), ids=lambda c: c.kind)
@given(seed=st.integers(0, 2**32))
@settings(max_examples=50, deadline=None)
def test_truncation_axioms_hold(carrier, seed):
    rng = random.Random(seed)
    x = carrier.random_element(rng, nonneg=True)
    y = carrier.random_element(rng, nonneg=True)
    tx, ty = carrier.truncate(x), carrier.truncate(y)
    assert carrier.leq(carrier.meet(x, ty), tx) and carrier.leq(tx, x)
    assert carrier.meet(tx, y) == carrier.meet(x, ty)
    assert carrier.norm(tx) <= 1
    assert carrier.norm(carrier.sub(tx, ty)) <= carrier.norm(carrier.sub(x, y))


@given(seed=st.integers(0, 2**32), n=st.integers(1, 64))
@settings(max_examples=50, deadline=None)
def test_interval_ideal_witness_approaches_sup(seed, n):
    c = IntervalCarrier()
    g = c.random_element(seed, nonneg=True)
    cc = Q(seed % 5, 2)
    w = c.ideal_sup_witness(g, cc, n)
    assert c.ideal_sup_norm(g, cc) - Q(1, n) <= c.norm(w) <= c.ideal_sup_norm(g, cc)


def test_random_element_reproducible():
    for c in default_carriers():
        assert c.random_element(7) == c.random_element(7)
