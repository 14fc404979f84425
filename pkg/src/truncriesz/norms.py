"""Norms on the unitization and the finite C0 representation.

``norm1`` is the largest unitization norm, ``norm0`` the smallest (a
seminorm when the carrier has a truncation unit), ``normC`` the classical
``||x|| + |alpha|`` used as a completeness reference, and ``gauge`` the
Minkowski functional of the order interval ``[-1, 1]``.  Extra unitization
norms go through :func:`register_custom_norm`; ``uL1`` on the interval
carrier is registered at import time.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Optional

from .carriers import COMPACT_SUPPORT, COORDINATE, INTERVAL_CARRIER, Carrier, make_fn
from .core import ONE, ZERO, InputError, NormLookupError, Q, Rational, UnsupportedCarrierError
from .plfunction import shifted_integral_abs
from .unitization import UnitizedElement, bracket, u_abs


@dataclass(frozen=True)
class NormKind:
    tag: str
    verified_lattice_norm: bool
    # ||1|| = 1 and agrees with the base norm on E
    unitization: bool = True
    description: str = ""


def norm1(carrier: Carrier, a: UnitizedElement) -> Rational:
    return carrier.norm(carrier.pos(bracket(carrier, a))) + abs(a.alpha)


def norm0(carrier: Carrier, a: UnitizedElement) -> Rational:
    e = carrier.truncation_unit
    if e is not None:
        # only a seminorm here: (e, -1) is a nonzero kernel element
        return carrier.norm(carrier.add(a.x, carrier.scale(a.alpha, e)))
    return carrier.ideal_sup_norm(bracket(carrier, a), abs(a.alpha))


def normC(carrier: Carrier, a: UnitizedElement) -> Rational:
    return carrier.norm(a.x) + abs(a.alpha)


def gauge_norm(carrier: Carrier, a: UnitizedElement) -> Rational:
    """``inf{lambda > 0 : |a| <= lambda}``, in closed form.

    With ``|a| = g + |alpha|``: the largest value of ``g + |alpha|`` over
    the concrete points, never below ``|alpha|`` (the point at infinity).
    """
    g, c = bracket(carrier, a), abs(a.alpha)
    if carrier.kind == COORDINATE:
        peak = max(gi / ei for gi, ei in zip(g.entries, carrier.unit.entries))
    elif carrier.kind in (INTERVAL_CARRIER, COMPACT_SUPPORT):
        peak = g.max_value()
    else:
        raise UnsupportedCarrierError(f"no gauge closed form for {carrier.kind}")
    return max(peak + c, c)


def uL1(carrier: Carrier, a: UnitizedElement) -> Rational:
    """``1/2 int_{-1}^{1} |f(s) + alpha| ds``."""
    return Q(1, 2) * shifted_integral_abs(a.x, a.alpha)


@dataclass(frozen=True)
class _Entry:
    kind: NormKind
    evaluator: Callable
    carriers: Optional[tuple]


_REGISTRY: dict = {}


def register_custom_norm(name: str, evaluator: Callable, carriers=None, *,
                         verified_lattice_norm: bool = True, unitization: bool = True,
                         description: str = "") -> NormKind:
    """Register ``evaluator(carrier, a) -> Rational`` under ``name``.

    Registration happens once, at startup; re-using a name is an error.
    ``carriers`` restricts the norm to the given carrier kinds.
    """
    if name in _REGISTRY:
        raise ValueError(f"norm {name!r} is already registered")
    kind = NormKind(name, verified_lattice_norm, unitization, description)
    _REGISTRY[name] = _Entry(kind, evaluator, tuple(carriers) if carriers else None)
    return kind


def norm_kind(name: str) -> NormKind:
    try:
        return _REGISTRY[name].kind
    except KeyError:
        raise NormLookupError(f"unknown norm {name!r}") from None


def applies(name: str, carrier: Carrier) -> bool:
    entry = _REGISTRY.get(name)
    if entry is None:
        raise NormLookupError(f"unknown norm {name!r}")
    return entry.carriers is None or carrier.kind in entry.carriers


def eval_custom(carrier: Carrier, name: str, a: UnitizedElement) -> Rational:
    if not applies(name, carrier):
        raise UnsupportedCarrierError(f"norm {name!r} is not defined on {carrier.kind}")
    return _REGISTRY[name].evaluator(carrier, a)


evaluate = eval_custom


def registered_norms(carrier: Optional[Carrier] = None) -> list:
    return [n for n in _REGISTRY if carrier is None or applies(n, carrier)]


def unitization_norms(carrier: Carrier) -> list:
    """Registered norms that extend the base norm and send 1 to 1."""
    return [n for n in registered_norms(carrier) if _REGISTRY[n].kind.unitization]


register_custom_norm("norm1", norm1, description="largest unitization norm")
register_custom_norm("norm0", norm0, description="smallest unitization norm (seminorm with a truncation unit)")
register_custom_norm("normC", normC, verified_lattice_norm=False, unitization=False,
                     description="||x|| + |alpha|, completeness reference")
register_custom_norm("gauge", gauge_norm, unitization=False,
                     description="Minkowski gauge of [-1, 1]; differs from the base norm on E")
register_custom_norm("uL1", uL1, carriers=(INTERVAL_CARRIER,), description="1/2 int |f + alpha|")


def lattice_norm_verified(name: str, carrier: Carrier) -> bool:
    if name == "norm0" and carrier.truncation_unit is not None:
        return False
    return norm_kind(name).verified_lattice_norm


# distance from 1 to E --------------------------------------------------------

@dataclass(frozen=True)
class DistanceBounds:
    lower_bound: Rational
    upper_bound: Rational
    witness: str
    certificate: str


def dist_one(carrier: Carrier, norm: str, budget: int = 64, seed: int = 0) -> DistanceBounds:
    """Certified bounds on ``inf{N(x - 1) : x in E}``.

    The upper bound comes from the best element of a named witness family,
    the lower bound from a per-norm argument that holds for every ``x``.
    """
    if not applies(norm, carrier):
        raise UnsupportedCarrierError(f"norm {norm!r} is not defined on {carrier.kind}")
    budget = max(int(budget), 2)

    def dist(x):
        return eval_custom(carrier, norm, UnitizedElement(x, -1))

    best, label = dist(carrier.zero()), "x = 0"
    if carrier.kind == INTERVAL_CARRIER:
        for n in range(2, budget + 1):
            d = dist(make_fn(n))
            if d < best:
                best, label = d, f"x = f_{n}"
    else:
        e = carrier.truncation_unit
        if e is not None and dist(e) < best:
            best, label = dist(e), "x = e"
        rng = random.Random(seed)
        for i in range(budget):
            y = carrier.truncate(carrier.random_element(rng, nonneg=True))
            d = dist(y)
            if d < best:
                best, label = d, f"x = truncated sample {i}: {y!r}"

    if norm == "norm1":
        lower, cert = ONE, "norm1(x - 1) = ||(|x-1| - 1)^+|| + 1 >= 1"
    elif norm == "normC":
        lower, cert = ONE, "normC(x - 1) = ||x|| + 1 >= 1"
    elif norm == "gauge":
        lower, cert = ONE, "|x - 1| takes the value 1 at the adjoined point"
    elif norm == "norm0" and carrier.kind == COMPACT_SUPPORT:
        lower, cert = ONE, "envelope |x - 1| equals 1 outside the support of x"
    else:
        lower, cert = ZERO, "none"
    return DistanceBounds(lower, best, label, cert)


# finite C0 representation ---------------------------------------------------

@dataclass(frozen=True)
class CoordinateRepresentation:
    """``(x, alpha) -> (x_1/e_1 + alpha, ..., x_n/e_n + alpha, alpha)``.

    Functions on ``n + 1`` points; ``E`` is exactly the set of functions
    vanishing at the last point.
    """

    carrier: Carrier

    @property
    def functionals(self) -> list:
        n = self.carrier.dim
        out = [f"p_{i + 1}(x, alpha) = x_{i + 1}/{self.carrier.unit.entries[i]} + alpha" for i in range(n)]
        out.append(f"p_{n + 1}(x, alpha) = alpha")
        return out

    def apply(self, a: UnitizedElement) -> tuple:
        return tuple(self.carrier.evaluate_model(a.x, a.alpha, range(self.carrier.dim + 1)))

    def inverse(self, image) -> UnitizedElement:
        image = [Q(v) for v in image]
        if len(image) != self.carrier.dim + 1:
            raise InputError("image has the wrong length")
        alpha = image[-1]
        xs = [(v - alpha) * e for v, e in zip(image, self.carrier.unit.entries)]
        return UnitizedElement(self.carrier.vector(*xs), alpha)

    def sup_norm(self, a: UnitizedElement) -> Rational:
        return max(abs(v) for v in self.apply(a))

    def check(self, a: UnitizedElement) -> dict:
        """Isometry, lattice and bijectivity checks on one element."""
        img = self.apply(a)
        img_abs = self.apply(u_abs(self.carrier, a))
        return {
            "image": img,
            "gauge": gauge_norm(self.carrier, a),
            "sup": self.sup_norm(a),
            "isometric": gauge_norm(self.carrier, a) == self.sup_norm(a),
            "lattice": img_abs == tuple(abs(v) for v in img),
            "bijective": self.inverse(img) == a,
        }


def coordinate_representation(carrier: Carrier) -> CoordinateRepresentation:
    if carrier.kind != COORDINATE:
        raise UnsupportedCarrierError("the explicit representation needs the coordinate carrier")
    return CoordinateRepresentation(carrier)
