import json

import pytest
from hypothesis import given, settings, strategies as st

from truncriesz import Q, UnitizedElement
from truncriesz.carriers import CoordinateVector, default_carriers
from truncriesz.core import InputError
from truncriesz.formats import element_from_wire, infer_carrier, load_json, to_wire, unitized_from_wire
from truncriesz.plfunction import PLFunction


@pytest.mark.parametrize("carrier", default_carriers(), ids=lambda c: c.kind)
@given(seed=st.integers(0, 2**32), alpha=st.fractions(max_denominator=9))
@settings(max_examples=40, deadline=None)
def test_round_trip(carrier, seed, alpha):
    a = UnitizedElement(carrier.random_element(seed), Q(alpha))
    wire = json.loads(json.dumps(to_wire(a)))
    assert unitized_from_wire(wire) == a
    assert infer_carrier(a.x).kind == carrier.kind


def test_bare_element_means_zero_alpha():
    a = unitized_from_wire({"entries": ["1/2", "-3"]})
    assert a == UnitizedElement(CoordinateVector((Q(1, 2), Q(-3))), 0)


@pytest.mark.parametrize("bad", [
    {"x": {"entries": [0.5]}, "alpha": "1"},
    {"x": {"entries": ["1"]}, "alpha": 0.25},
    {"x": {"breakpoints": ["-1", "1"]}},
    {"x": {"entries": "12"}},
    [],
    {"values": []},
])
def test_malformed(bad):
    with pytest.raises(InputError):
        unitized_from_wire(bad)


def test_element_from_wire_domain():
    f = element_from_wire({"domain": "real_line", "breakpoints": ["0", "1", "2"], "values": ["0", "1", "0"]})
    assert isinstance(f, PLFunction) and f.domain == "real_line"


def test_load_json_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    with pytest.raises(InputError):
        load_json(str(bad))
    with pytest.raises(InputError):
        load_json(str(tmp_path / "missing.json"))
