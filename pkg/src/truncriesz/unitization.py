"""The unitization ``E + R`` of a truncated Riesz space.

Elements are pairs ``(x, alpha)`` standing for ``x + alpha*1``.  The order
is the non-standard one in which ``1 ^ x = x*`` for ``x >= 0``; everything
here is derived from a single absolute-value formula so there is exactly
one source of truth for that order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .core import ZERO, InputError, Q, Rational


@dataclass(frozen=True)
class UnitizedElement:
    x: Any
    alpha: Rational = ZERO

    def __post_init__(self):
        object.__setattr__(self, "alpha", Q(self.alpha))


def unit(carrier) -> UnitizedElement:
    """The adjoined constant ``1``."""
    return UnitizedElement(carrier.zero(), 1)


def embed(carrier, x) -> UnitizedElement:
    carrier.validate(x)
    return UnitizedElement(x, ZERO)


def u_add(carrier, a: UnitizedElement, b: UnitizedElement) -> UnitizedElement:
    return UnitizedElement(carrier.add(a.x, b.x), a.alpha + b.alpha)


def u_sub(carrier, a: UnitizedElement, b: UnitizedElement) -> UnitizedElement:
    return UnitizedElement(carrier.sub(a.x, b.x), a.alpha - b.alpha)


def u_neg(carrier, a: UnitizedElement) -> UnitizedElement:
    return UnitizedElement(carrier.neg(a.x), -a.alpha)


def u_scale(carrier, r, a: UnitizedElement) -> UnitizedElement:
    r = Q(r)
    return UnitizedElement(carrier.scale(r, a.x), r * a.alpha)


def u_abs(carrier, a: UnitizedElement) -> UnitizedElement:
    """``|x + alpha|``.

    For ``alpha != 0`` this is ``|x| - 2|alpha| v* + |alpha|`` with
    ``v = ((sgn alpha) x)^- / |alpha|``, a positive element, so the
    truncation applies to it.
    """
    x, alpha = a.x, a.alpha
    carrier.validate(x)
    if alpha == 0:
        return UnitizedElement(carrier.abs(x), ZERO)
    size = abs(alpha)
    signed = x if alpha > 0 else carrier.neg(x)
    v = carrier.scale(1 / size, carrier.neg_part(signed))
    part = carrier.sub(carrier.abs(x), carrier.scale(2 * size, carrier.truncate(v)))
    return UnitizedElement(part, size)


def u_join(carrier, a: UnitizedElement, b: UnitizedElement) -> UnitizedElement:
    d = u_sub(carrier, a, b)
    return u_add(carrier, b, u_scale(carrier, Q(1, 2), u_add(carrier, d, u_abs(carrier, d))))


def u_meet(carrier, a: UnitizedElement, b: UnitizedElement) -> UnitizedElement:
    return u_neg(carrier, u_join(carrier, u_neg(carrier, a), u_neg(carrier, b)))


def u_pos(carrier, a: UnitizedElement) -> UnitizedElement:
    return u_join(carrier, a, UnitizedElement(carrier.zero(), ZERO))


def u_negpart(carrier, a: UnitizedElement) -> UnitizedElement:
    return u_join(carrier, u_neg(carrier, a), UnitizedElement(carrier.zero(), ZERO))


def u_lattice(carrier, a: UnitizedElement, b: UnitizedElement = None, op: str = "join") -> UnitizedElement:
    if op in ("pos", "neg"):
        return u_pos(carrier, a) if op == "pos" else u_negpart(carrier, a)
    if b is None:
        raise InputError(f"{op} needs two operands")
    if op == "join":
        return u_join(carrier, a, b)
    if op == "meet":
        return u_meet(carrier, a, b)
    raise InputError(f"unknown lattice operation {op!r}")


def u_is_positive(carrier, a: UnitizedElement) -> bool:
    return u_abs(carrier, a) == a


def u_leq(carrier, a: UnitizedElement, b: UnitizedElement) -> bool:
    """``a <= b`` iff ``|b - a| == b - a``."""
    return u_is_positive(carrier, u_sub(carrier, b, a))


def bracket(carrier, a: UnitizedElement):
    """``|x + alpha| - |alpha|``, an element of ``E``."""
    return u_abs(carrier, a).x


def clip(carrier, c: UnitizedElement, b: UnitizedElement) -> UnitizedElement:
    """``(c v -|b|) ^ |b|``, which always satisfies ``|result| <= |b|``."""
    bound = u_abs(carrier, b)
    return u_meet(carrier, u_join(carrier, c, u_neg(carrier, bound)), bound)
