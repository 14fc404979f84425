"""Random inputs for the property suites, and counterexample shrinking.

The sampler leans on the regimes the arguments split on: ``alpha`` of both
signs, ``|alpha|`` at the threshold where ``x^-/|alpha|`` enters the
fixed-point set of the truncation, elements of that set, disjoint pairs and
plateaus touching height 1.
"""

from __future__ import annotations

import random

from .carriers import Carrier, CoordinateVector, random_rational
from .core import ONE, ZERO, InputError, Q, Rational
from .plfunction import PLFunction
from .unitization import UnitizedElement, u_abs


class Sampler:
    def __init__(self, carrier: Carrier, rng: random.Random, max_breakpoints: int = 5,
                 value_bound: int = 3, max_den: int = 6):
        self.carrier = carrier
        self.rng = rng
        self.params = dict(max_breakpoints=max_breakpoints, value_bound=value_bound, max_den=max_den)

    def _raw(self, nonneg: bool = False):
        return self.carrier.random_element(self.rng, nonneg=nonneg, **self.params)

    def scalar(self, bound: int = 3, nonneg: bool = False) -> Rational:
        return random_rational(self.rng, bound, self.params["max_den"], nonneg)

    def nonzero_scalar(self) -> Rational:
        r = self.scalar()
        return r if r != 0 else ONE

    def element(self):
        c = self.carrier
        roll = self.rng.random()
        if roll < 0.05:
            return c.zero()
        if roll < 0.25:
            return self.e_star()
        if roll < 0.35:
            # plateau at height 1
            return c.truncate(c.scale(4, self._raw(nonneg=True)))
        if roll < 0.45:
            return c.scale(self.scalar(bound=1), self._raw())
        return self._raw()

    def positive(self):
        x = self.element()
        return self.carrier.abs(x)

    def e_star(self):
        """An element with ``|x|* = |x|``."""
        c = self.carrier
        x = self._raw()
        clipped = c.truncate(c.abs(x))
        if self.rng.random() < 0.5:
            return c.sub(c.truncate(c.pos(x)), c.truncate(c.neg_part(x)))
        return clipped

    def disjoint_pair(self):
        x = self._raw()
        return self.carrier.pos(x), self.carrier.neg_part(x)

    def alpha_for(self, x) -> Rational:
        from .norms import gauge_norm

        c = self.carrier
        roll = self.rng.random()
        sign = 1 if self.rng.random() < 0.5 else -1
        if roll < 0.1:
            return ZERO
        if roll < 0.3:
            # threshold where x^-/alpha (or x^+/|alpha|) becomes a fixed point
            part = c.neg_part(x) if sign > 0 else c.pos(x)
            t = gauge_norm(c, UnitizedElement(part, 0))
            return sign * t if t != 0 else sign * ONE
        if roll < 0.45:
            return sign * c.norm(c.neg_part(x))
        if roll < 0.55:
            return Q(sign)
        return self.scalar()

    def unitized(self) -> UnitizedElement:
        x = self.element()
        return UnitizedElement(x, self.alpha_for(x))

    def positive_unitized(self) -> UnitizedElement:
        return u_abs(self.carrier, self.unitized())


# shrinking -------------------------------------------------------------------

def _smaller_rationals(r: Rational) -> list:
    out = []
    if r != 0:
        out.append(ZERO)
    den = int(r.denominator)
    if den > 1:
        out.append(Q(round(r)))
        out.append(Q(round(r * (den // 2)), den // 2))
    if abs(r) > 1:
        sign = 1 if r > 0 else -1
        out.append(Q(sign))
        out.append(Q(int(r) // 2 if r > 0 else -(int(-r) // 2)))
        out.append(Q(int(r) - sign))
    return [v for v in out if v != r]


def _shrink_pl(f: PLFunction) -> list:
    out = []
    ts, vs = list(f.breakpoints), list(f.values)
    if len(ts) > 2:
        keep = [0] + list(range(1, len(ts) - 1, 2)) + [len(ts) - 1]
        out.append((tuple(ts[i] for i in keep), tuple(vs[i] for i in keep)))
        for i in range(1, len(ts) - 1):
            out.append((tuple(ts[:i] + ts[i + 1:]), tuple(vs[:i] + vs[i + 1:])))
    for i in range(1, len(vs) - 1):
        for r in _smaller_rationals(vs[i]):
            out.append((tuple(ts), tuple(vs[:i] + [r] + vs[i + 1:])))
    cands = []
    for bps, vals in out:
        try:
            cands.append(PLFunction(bps, vals, f.domain))
        except InputError:
            continue
    return [g for g in cands if g != f]


def shrink_candidates(value) -> list:
    if isinstance(value, Rational):
        return _smaller_rationals(value)
    if isinstance(value, PLFunction):
        return _shrink_pl(value)
    if isinstance(value, CoordinateVector):
        out = []
        for i, v in enumerate(value.entries):
            for r in _smaller_rationals(v):
                out.append(CoordinateVector(value.entries[:i] + (r,) + value.entries[i + 1:]))
        return out
    if isinstance(value, UnitizedElement):
        return ([UnitizedElement(x, value.alpha) for x in shrink_candidates(value.x)]
                + [UnitizedElement(value.x, r) for r in _smaller_rationals(value.alpha)])
    return []


def shrink(fails, inputs: tuple, max_steps: int = 500) -> tuple:
    """Greedily replace inputs by smaller ones while ``fails(inputs)`` stays true."""
    steps = 0
    improved = True
    while improved and steps < max_steps:
        improved = False
        for i, value in enumerate(inputs):
            for cand in shrink_candidates(value):
                steps += 1
                trial = inputs[:i] + (cand,) + inputs[i + 1:]
                if fails(trial):
                    inputs = trial
                    improved = True
                    break
            if improved or steps >= max_steps:
                break
    return inputs
