"""The three built-in truncated normed Riesz spaces.

``coordinate``
    ``Q^n`` with coordinatewise order, truncation ``x* = e ^ x`` for a fixed
    truncation unit ``e > 0`` and the weighted l1 norm ``sum w_i |x_i|``,
    rescaled so that ``||e|| = 1``.
``interval``
    PL functions on ``[-1, 1]`` vanishing at the endpoints, ``x* = min(1, x)``
    and ``||f|| = 1/2 int |f|``.  No truncation unit.
``compact_support``
    Compactly supported PL functions on the line, ``x* = min(1, x)`` and the
    sup norm.  No truncation unit.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Any, Optional, Sequence

from .core import (
    HALF,
    ONE,
    ZERO,
    CarrierMismatchError,
    ConfigurationError,
    InputError,
    Q,
    Rational,
    TruncationBound,
    TruncationContract,
)
from .plfunction import INTERVAL, REAL_LINE, PLFunction

COORDINATE = "coordinate"
INTERVAL_CARRIER = "interval"
COMPACT_SUPPORT = "compact_support"
CARRIER_KINDS = (COORDINATE, INTERVAL_CARRIER, COMPACT_SUPPORT)


@dataclass(frozen=True)
class CoordinateVector:
    entries: tuple

    def __post_init__(self):
        if not self.entries:
            raise InputError("coordinate vectors need at least one entry")
        object.__setattr__(self, "entries", tuple(Q(v) for v in self.entries))

    @classmethod
    def _raw(cls, entries) -> "CoordinateVector":
        obj = object.__new__(cls)
        object.__setattr__(obj, "entries", tuple(entries))
        return obj

    def __len__(self) -> int:
        return len(self.entries)

    def _check(self, other) -> None:
        if not isinstance(other, CoordinateVector) or len(other) != len(self):
            raise CarrierMismatchError("vectors of different shape")

    def _zip(self, other, op) -> "CoordinateVector":
        self._check(other)
        return CoordinateVector._raw(op(a, b) for a, b in zip(self.entries, other.entries))

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return CoordinateVector._raw(-a for a in self.entries)

    def scale(self, r):
        r = Q(r)
        return CoordinateVector._raw(r * a for a in self.entries)

    def __rmul__(self, r):
        return self.scale(r)

    def meet(self, other):
        return self._zip(other, min)

    def join(self, other):
        return self._zip(other, max)

    def abs(self):
        return CoordinateVector._raw(abs(a) for a in self.entries)

    def pos(self):
        return CoordinateVector._raw(a if a > 0 else ZERO for a in self.entries)

    def neg_part(self):
        return CoordinateVector._raw(-a if a < 0 else ZERO for a in self.entries)

    def leq(self, other) -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def __repr__(self) -> str:
        return "CoordinateVector(" + ", ".join(str(a) for a in self.entries) + ")"


def random_rational(rng: random.Random, bound, max_den: int = 6, nonneg: bool = False) -> Rational:
    den = rng.randint(1, max_den)
    top = int(bound * den)
    return Q(rng.randint(0 if nonneg else -top, top), den)


def _as_rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


class Carrier:
    """Common surface of the built-in carriers.

    Subclasses fix the element type, the base norm, the truncation and the
    closed form of the order-ideal supremum.
    """

    kind: str
    norm_kind: str
    element_type: type
    norm_scale: Rational = ONE

    # elements -----------------------------------------------------------

    def validate(self, x) -> None:
        if not isinstance(x, self.element_type):
            raise CarrierMismatchError(f"{x!r} is not a {self.kind} element")

    def zero(self):
        raise NotImplementedError

    def add(self, a, b):
        self.validate(a)
        return a + b

    def sub(self, a, b):
        self.validate(a)
        return a - b

    def neg(self, a):
        self.validate(a)
        return -a

    def scale(self, r, a):
        self.validate(a)
        return a.scale(r)

    def meet(self, a, b):
        self.validate(a)
        return a.meet(b)

    def join(self, a, b):
        self.validate(a)
        return a.join(b)

    def abs(self, a):
        self.validate(a)
        return a.abs()

    def pos(self, a):
        self.validate(a)
        return a.pos()

    def neg_part(self, a):
        self.validate(a)
        return a.neg_part()

    def leq(self, a, b) -> bool:
        self.validate(a)
        return a.leq(b)

    def is_zero(self, a) -> bool:
        self.validate(a)
        return a.is_zero()

    # structure ----------------------------------------------------------

    @property
    def truncation_unit(self):
        return None

    @property
    def contract(self) -> TruncationContract:
        return TruncationContract(self.kind, self.truncation_unit, self.truncation_bound().bound)

    def norm(self, x) -> Rational:
        raise NotImplementedError

    def truncate(self, x):
        self.validate(x)
        if not self.zero().leq(x):
            raise InputError("truncation is only defined on the positive cone")
        return self._truncate(x)

    def _truncate(self, x):
        raise NotImplementedError

    def truncation_bound(self) -> TruncationBound:
        raise NotImplementedError

    def ideal_sup_norm(self, g, c) -> Rational:
        """``sup{||y|| : y in E, |y| <= g + c}`` in closed form.

        ``(g, c)`` is the decomposition ``|x + alpha| = g + |alpha|`` of an
        absolute value in the unitization; ``g + c >= 0`` there is required.
        """
        from .unitization import UnitizedElement, u_is_positive

        self.validate(g)
        c = Q(c)
        if c < 0 or not u_is_positive(self, UnitizedElement(g, c)):
            raise InputError("ideal_sup_norm needs g + c >= 0 in the unitization")
        return self._ideal_sup(g, c)

    def _ideal_sup(self, g, c) -> Rational:
        raise NotImplementedError

    def ideal_sup_witness(self, g, c, n: int):
        """An element ``y`` with ``|y| <= g + c`` and ``||y|| >= sup - 1/n``."""
        raise NotImplementedError

    # oracle support -----------------------------------------------------

    def model_points(self, rng: random.Random, count: int, *elements) -> list:
        raise NotImplementedError

    def evaluate_model(self, x, alpha, points) -> list:
        """Values of ``x + alpha`` on ``points`` in the concrete function model."""
        raise NotImplementedError

    def random_element(self, seed, max_breakpoints: int = 6, value_bound=3, nonneg: bool = False,
                       max_den: int = 6):
        raise NotImplementedError

    def config(self) -> dict:
        return {"kind": self.kind}

    def __eq__(self, other) -> bool:
        return isinstance(other, Carrier) and self.config() == other.config()

    def __hash__(self) -> int:
        return hash(repr(self.config()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.config()})"


class CoordinateCarrier(Carrier):
    kind = COORDINATE
    norm_kind = "weighted-L1"
    element_type = CoordinateVector

    def __init__(self, dim: int = 2, unit: Optional[Sequence] = None, weights: Optional[Sequence] = None):
        if not isinstance(dim, int) or dim < 1:
            raise ConfigurationError("dim must be a positive integer")
        unit = [ONE] * dim if unit is None else [Q(v) for v in unit]
        weights = [Q(1, dim)] * dim if weights is None else [Q(v) for v in weights]
        if len(unit) != dim or len(weights) != dim:
            raise ConfigurationError("unit and weights must have length dim")
        if any(v <= 0 for v in unit) or any(w <= 0 for w in weights):
            raise ConfigurationError("unit and weights must be strictly positive")
        self.dim = dim
        self.unit = CoordinateVector(unit)
        self.raw_weights = tuple(weights)
        # Rescale so that sup ||x*|| = ||e|| = 1.
        self.norm_scale = 1 / sum(w * e for w, e in zip(weights, unit))
        self.weights = tuple(w * self.norm_scale for w in weights)

    def validate(self, x) -> None:
        super().validate(x)
        if len(x) != self.dim:
            raise CarrierMismatchError(f"expected dimension {self.dim}, got {len(x)}")

    def zero(self):
        return CoordinateVector._raw([ZERO] * self.dim)

    def vector(self, *entries) -> CoordinateVector:
        v = CoordinateVector(entries)
        self.validate(v)
        return v

    @property
    def truncation_unit(self):
        return self.unit

    def norm(self, x) -> Rational:
        self.validate(x)
        return sum((w * abs(a) for w, a in zip(self.weights, x.entries)), ZERO)

    def _truncate(self, x):
        return self.unit.meet(x)

    def truncation_bound(self) -> TruncationBound:
        return TruncationBound(self.norm(self.unit), True, "x = e (the truncation unit)")

    def _ideal_sup(self, g, c) -> Rational:
        return self.norm(g + self.unit.scale(c))

    def ideal_sup_witness(self, g, c, n: int):
        return g + self.unit.scale(c)

    def model_points(self, rng, count, *elements) -> list:
        return list(range(self.dim + 1))

    def evaluate_model(self, x, alpha, points) -> list:
        alpha = Q(alpha)
        return [alpha if i == self.dim else x.entries[i] / self.unit.entries[i] + alpha for i in points]

    def random_element(self, seed, max_breakpoints=6, value_bound=3, nonneg=False, max_den=6):
        rng = _as_rng(seed)
        return CoordinateVector._raw(
            random_rational(rng, value_bound, max_den, nonneg) for _ in range(self.dim)
        )

    def config(self) -> dict:
        from .core import format_rational

        return {
            "kind": COORDINATE,
            "dim": self.dim,
            "unit": [format_rational(v) for v in self.unit.entries],
            "weights": [format_rational(v) for v in self.raw_weights],
        }


class _FunctionCarrier(Carrier):
    element_type = PLFunction
    domain: str

    def validate(self, x) -> None:
        super().validate(x)
        if x.domain != self.domain:
            raise CarrierMismatchError(f"expected a {self.domain} function")

    def zero(self):
        return PLFunction.zero(self.domain)

    def _truncate(self, x):
        return x.min_level(ONE)

    def evaluate_model(self, x, alpha, points) -> list:
        alpha = Q(alpha)
        return [v + alpha for v in x.sample(points)]

    def _random_support(self, rng, max_den) -> tuple:
        raise NotImplementedError

    def random_element(self, seed, max_breakpoints=6, value_bound=3, nonneg=False, max_den=6):
        rng = _as_rng(seed)
        left, right = self._random_support(rng, max_den)
        k = rng.randint(1, max(1, max_breakpoints))
        den = math.lcm(*range(1, max_den + 1)) * 4
        lo, hi = int(left * den) + 1, int(right * den) - 1
        inner = sorted(rng.sample(range(lo, hi + 1), min(k, hi - lo + 1)))
        ts = [left] + [Q(i, den) for i in inner] + [right]
        vs = [ZERO] + [random_rational(rng, value_bound, max_den, nonneg) for _ in inner] + [ZERO]
        return PLFunction(tuple(ts), tuple(vs), self.domain)


class IntervalCarrier(_FunctionCarrier):
    kind = INTERVAL_CARRIER
    norm_kind = "half-integral-L1"
    domain = INTERVAL

    def norm(self, x) -> Rational:
        self.validate(x)
        return HALF * x.integral_abs()

    def truncation_bound(self) -> TruncationBound:
        # 1/2 * (length of [-1, 1]) * 1, approached by f_n but never attained
        return TruncationBound(HALF * 2, False, "f_n = make_fn(n), ||f_n*|| = 1 - 1/(2n)", make_fn)

    def _ideal_sup(self, g, c) -> Rational:
        return HALF * g.integral() + c

    def ideal_sup_witness(self, g, c, n: int):
        m = max(2, int(math.ceil(c * n / 2)) + 1)
        return (g + make_fn(m).scale(c)).pos()

    def model_points(self, rng, count, *elements) -> list:
        den = 10 ** 6
        pts = {Q(-1), Q(1)}
        while len(pts) < count:
            pts.add(Q(rng.randint(-den, den), den))
        return sorted(pts)

    def _random_support(self, rng, max_den):
        return Q(-1), Q(1)


class CompactSupportCarrier(_FunctionCarrier):
    kind = COMPACT_SUPPORT
    norm_kind = "sup"
    domain = REAL_LINE

    def norm(self, x) -> Rational:
        self.validate(x)
        return x.sup_abs()

    def truncation_bound(self) -> TruncationBound:
        return TruncationBound(ONE, True, "any bump with peak >= 1")

    def _ideal_sup(self, g, c) -> Rational:
        return max(g.max_value() + c, c)

    def ideal_sup_witness(self, g, c, n: int):
        left, right = g.support_hull() or (ZERO, ZERO)
        plateau = PLFunction(
            (left - 2, left - 1, right + 1, right + 2), (0, 1, 1, 0), REAL_LINE
        )
        return (g + plateau.scale(c)).pos()

    def model_points(self, rng, count, *elements) -> list:
        hulls = [e.support_hull() for e in elements if e.support_hull()]
        left = min((h[0] for h in hulls), default=ZERO) - 1
        right = max((h[1] for h in hulls), default=ZERO) + 1
        den = 10 ** 6
        span = int((right - left) * den)
        pts = {left, right}
        while len(pts) < count:
            pts.add(left + Q(rng.randint(0, span), den))
        return sorted(pts)

    def _random_support(self, rng, max_den):
        a = random_rational(rng, 3, max_den)
        width = Q(rng.randint(1, 4 * max_den), max_den)
        return a, a + width


def carrier_from_config(config: Any) -> Carrier:
    """Build a carrier from a name or from the wire config dict."""
    if isinstance(config, Carrier):
        return config
    if isinstance(config, str):
        config = {"kind": config}
    if not isinstance(config, dict) or "kind" not in config:
        raise ConfigurationError(f"malformed carrier config {config!r}")
    kind = config["kind"]
    if kind == COORDINATE:
        unit = config.get("unit")
        weights = config.get("weights")
        dim = config.get("dim", len(unit) if unit else 2)
        if unit is None and weights is None and dim == 2:
            weights = ["1/2", "1/2"]
        try:
            return CoordinateCarrier(dim, unit, weights)
        except InputError as exc:
            raise ConfigurationError(str(exc)) from exc
    if kind == INTERVAL_CARRIER:
        return IntervalCarrier()
    if kind == COMPACT_SUPPORT:
        return CompactSupportCarrier()
    raise ConfigurationError(f"unknown carrier kind {kind!r}")


def default_carriers() -> list:
    return [CoordinateCarrier(2, (1, 1), ("1/2", "1/2")), IntervalCarrier(), CompactSupportCarrier()]


# function-style surface ---------------------------------------------------

def lat_op(carrier: Carrier, a, b, op: str):
    carrier.validate(b)
    if op == "add":
        return carrier.add(a, b)
    if op == "meet":
        return carrier.meet(a, b)
    if op == "join":
        return carrier.join(a, b)
    raise InputError(f"unknown lattice operation {op!r}")


def lat_scale(carrier: Carrier, r, a):
    return carrier.scale(r, a)


def base_norm(carrier: Carrier, x) -> Rational:
    return carrier.norm(x)


def truncate(carrier: Carrier, x):
    return carrier.truncate(x)


def leq(carrier: Carrier, a, b) -> bool:
    carrier.validate(b)
    return carrier.leq(a, b)


def ideal_sup_norm(carrier: Carrier, g, c) -> Rational:
    return carrier.ideal_sup_norm(g, c)


def random_element(carrier: Carrier, seed, **params):
    return carrier.random_element(seed, **params)


def make_fn(n: int) -> PLFunction:
    """The plateau function ``f_n``: 0 at +-1, rising to 1 over a width of ``1/n``."""
    if not isinstance(n, int) or n < 2:
        raise InputError("make_fn needs an integer n >= 2")
    step = Q(1, n)
    return PLFunction((-1, -1 + step, 1 - step, 1), (0, 1, 1, 0), INTERVAL)


def support_extension_witness(f: PLFunction, a) -> PLFunction:
    """Extend ``0 <= f <= 1`` (supported in ``[-a, a]``) by a unit tent on ``[a, a + 2]``."""
    a = Q(a)
    if not isinstance(f, PLFunction) or f.domain != REAL_LINE:
        raise InputError("expected a compactly supported function")
    if a <= 0:
        raise InputError("a must be positive")
    hull = f.support_hull()
    if hull and (hull[0] < -a or hull[1] > a):
        raise InputError("support of f is not inside [-a, a]")
    if f.min_value() < 0 or f.max_value() > 1:
        raise InputError("f must satisfy 0 <= f <= 1")
    pts = [(t, v) for t, v in zip(f.breakpoints, f.values) if t < a]
    if not pts:
        pts = [(a, ZERO)]
    elif pts[-1][0] < a:
        pts.append((a, ZERO))
    pts += [(a + 1, ONE), (a + 2, ZERO)]
    return PLFunction(tuple(p[0] for p in pts), tuple(p[1] for p in pts), REAL_LINE)
