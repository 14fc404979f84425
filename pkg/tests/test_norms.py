import random

import pytest
from hypothesis import given, settings, strategies as st

from truncriesz import Q, UnitizedElement, gauge_norm, make_fn, norm0, norm1, normC, uL1
from truncriesz.carriers import (CompactSupportCarrier, CoordinateCarrier, IntervalCarrier,
                                 default_carriers)
from truncriesz.core import InputError, NormLookupError, UnsupportedCarrierError
from truncriesz.generators import Sampler
from truncriesz.norms import (applies, coordinate_representation, dist_one, eval_custom,
                              lattice_norm_verified, norm_kind, register_custom_norm,
                              registered_norms, unitization_norms)
from truncriesz.plfunction import REAL_LINE, PLFunction

COORD = CoordinateCarrier(2, (1, 1), ("1/2", "1/2"))


def test_interval_hat_values():
    c = IntervalCarrier()
    a = UnitizedElement(PLFunction.hat(-2), 1)
    assert (norm1(c, a), norm0(c, a), normC(c, a), gauge_norm(c, a), uL1(c, a)) == (1, Q(1, 2), 2, 1, Q(1, 2))


def test_coordinate_values():
    a = UnitizedElement(COORD.vector(2, -3), 1)
    assert (norm1(COORD, a), norm0(COORD, a), normC(COORD, a), gauge_norm(COORD, a)) == (
        Q(5, 2), Q(5, 2), Q(7, 2), 3)


@pytest.mark.parametrize("n", [2, 3, 5, 17, 64])
def test_fn_sequence_values(n):
    # |f_n - 1| is 1 on the two end ramps of length 1/n, so half the area is 1/(2n)
    c = IntervalCarrier()
    a = UnitizedElement(make_fn(n), -1)
    assert uL1(c, a) == Q(1, 2 * n)
    assert norm0(c, a) == Q(1, 2 * n)
    assert norm1(c, a) == 1


def test_unit_kernel():
    a = UnitizedElement(COORD.truncation_unit, -1)
    assert norm0(COORD, a) == 0 and not COORD.is_zero(a.x)


def test_compact_norm0_of_one_minus_bump():
    c = CompactSupportCarrier()
    f = PLFunction((0, 1, 2), (0, 1, 0), REAL_LINE)
    assert norm0(c, UnitizedElement(c.neg(f), 1)) == 1


@pytest.mark.parametrize("carrier", default_carriers(), ids=lambda c: c.kind)
@given(seed=st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_norms_extend_base_and_unit(carrier, seed):
    s = Sampler(carrier, random.Random(seed))
    x = s.element()
    for name in unitization_norms(carrier):
        assert eval_custom(carrier, name, UnitizedElement(x, 0)) == carrier.norm(x), name
        assert eval_custom(carrier, name, UnitizedElement(carrier.zero(), 1)) == 1, name
    assert gauge_norm(carrier, UnitizedElement(carrier.zero(), -1)) == 1


def test_registry():
    assert registered_norms(COORD) == ["norm1", "norm0", "normC", "gauge"]
    assert "uL1" in registered_norms(IntervalCarrier())
    assert not applies("uL1", COORD)
    assert norm_kind("normC").verified_lattice_norm is False
    assert not lattice_norm_verified("norm0", COORD)
    assert lattice_norm_verified("norm0", IntervalCarrier())
    with pytest.raises(NormLookupError):
        norm_kind("nope")
    with pytest.raises(UnsupportedCarrierError):
        eval_custom(COORD, "uL1", UnitizedElement(COORD.zero(), 1))
    with pytest.raises(ValueError):
        register_custom_norm("norm1", norm1)


def test_register_and_evaluate_custom():
    name = "test_half_norm1"
    register_custom_norm(name, lambda c, a: norm1(c, a), carriers=("interval",), unitization=False)
    c = IntervalCarrier()
    assert eval_custom(c, name, UnitizedElement(c.zero(), 3)) == 3
    assert not applies(name, COORD)


def test_dist_one():
    d = dist_one(IntervalCarrier(), "uL1", budget=64)
    assert d.upper_bound == Q(1, 128) and d.lower_bound == 0 and "f_64" in d.witness
    d0 = dist_one(CompactSupportCarrier(), "norm0")
    assert d0.lower_bound == 1 <= d0.upper_bound
    assert dist_one(COORD, "norm0").upper_bound == 0
    assert dist_one(COORD, "norm1").lower_bound == 1


def test_representation():
    rep = coordinate_representation(COORD)
    a = UnitizedElement(COORD.vector(2, -3), 0)
    assert rep.apply(a) == (2, -3, 0)
    report = rep.check(a)
    assert report["gauge"] == 3 and report["isometric"] and report["lattice"] and report["bijective"]
    assert rep.inverse(["1", "1", "1"]) == UnitizedElement(COORD.zero(), 1)
    with pytest.raises(InputError):
        rep.inverse([1, 2])
    with pytest.raises(UnsupportedCarrierError):
        coordinate_representation(IntervalCarrier())
