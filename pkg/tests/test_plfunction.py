import pytest
from hypothesis import given, settings, strategies as st

from truncriesz import Q
from truncriesz.carriers import CompactSupportCarrier, IntervalCarrier
from truncriesz.core import InputError
from truncriesz.plfunction import INTERVAL, REAL_LINE, PLFunction, merged_grid, shifted_integral_abs

CARRIERS = [IntervalCarrier(), CompactSupportCarrier()]
seeds = st.integers(0, 2**32)


def _grid(*fs):
    """Breakpoints plus midpoints and a margin: enough to pin down a PL function."""
    pts = sorted(set(merged_grid(*fs)) | {Q(-5), Q(5)})
    mids = [(a + b) / 2 for a, b in zip(pts, pts[1:])]
    return [t for t in sorted(set(pts) | set(mids)) if fs[0].domain == REAL_LINE or -1 <= t <= 1]


def _pair(carrier, seed):
    return carrier.random_element(seed), carrier.random_element(seed + 1)


@pytest.mark.parametrize("carrier", CARRIERS, ids=["interval", "compact_support"])
@given(seed=seeds)
@settings(max_examples=60, deadline=None)
def test_ops_match_pointwise(carrier, seed):
    f, g = _pair(carrier, seed)
    ops = {
        "add": (f + g, lambda a, b: a + b),
        "sub": (f - g, lambda a, b: a - b),
        "meet": (f.meet(g), min),
        "join": (f.join(g), max),
    }
    # crossings of f and g are breakpoints of meet/join, so include them in the grid
    for name, (h, op) in ops.items():
        for t in _grid(f, g, h):
            assert h(t) == op(f(t), g(t)), (name, t)
    for t in _grid(f):
        assert f.abs()(t) == abs(f(t))
        assert f.pos()(t) == max(f(t), 0)
        assert f.neg_part()(t) == max(-f(t), 0)
        assert f.min_level(1)(t) == min(f(t), 1)
        assert f.scale(Q(-3, 2))(t) == Q(-3, 2) * f(t)


@given(seed=seeds)
@settings(max_examples=40, deadline=None)
def test_sample_agrees_with_call(seed):
    f = CompactSupportCarrier().random_element(seed)
    pts = _grid(f)
    assert f.sample(pts) == [f(t) for t in pts]


def test_canonical_form():
    f = PLFunction((-1, 0, Q(1, 2), 1), (0, 1, Q(1, 2), 0))
    assert f.breakpoints == (-1, 0, 1)
    assert PLFunction.zero(REAL_LINE).breakpoints == ()
    g = PLFunction((-3, -2, 0, 1, 4), (0, 0, 2, 0, 0), REAL_LINE)
    assert g.breakpoints == (-2, 0, 1)
    assert (g - g) == PLFunction.zero(REAL_LINE)


@pytest.mark.parametrize("args", [
    ((-1, 0, 1), (0, 1)),
    ((-1, 0, 0, 1), (0, 1, 1, 0)),
    ((-1, 1), (1, 0)),
    ((0, 1), (0, 0)),
])
def test_invalid(args):
    with pytest.raises(InputError):
        PLFunction(*args)


def test_domain_mismatch():
    with pytest.raises(InputError):
        PLFunction.zero(INTERVAL) + PLFunction.zero(REAL_LINE)


def test_integrals():
    hat = PLFunction.hat(2)
    assert hat.integral() == 2
    sign_change = PLFunction((-1, 0, 1), (0, -2, 0)) + PLFunction.hat(1, Q(1, 2), 0, 1)
    assert sign_change.integral_abs() == sign_change.abs().integral()


@given(seed=seeds, a=st.fractions(-3, 3, max_denominator=7))
@settings(max_examples=80, deadline=None)
def test_shifted_integral_matches_abs(seed, a):
    # independent closed form vs. building |f + a| explicitly
    f = IntervalCarrier().random_element(seed)
    alpha = Q(a)
    shifted = PLFunction._raw(f.breakpoints, tuple(v + alpha for v in f.values), INTERVAL)
    assert shifted_integral_abs(f, alpha) == shifted.abs().integral()


def test_extremes_count_zero_outside_support():
    f = PLFunction((0, 1, 2), (0, -1, 0), REAL_LINE)
    assert f.max_value() == 0 and f.min_value() == -1 and f.sup_abs() == 1
    assert f.support_hull() == (0, 2)
