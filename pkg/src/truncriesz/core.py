"""Exact scalars, error types and the truncation contract.

Every scalar in the package is a :data:`Rational` (``gmpy2.mpq``), which is
kept in lowest terms with a positive denominator by construction.  The
checks in this module are written against the small duck-typed carrier
interface (``meet``, ``leq``, ``truncate``, ``norm``, ...) so they work on any
of the built-in carriers.
"""

from __future__ import annotations

from dataclasses import dataclass
from numbers import Rational as _AbstractRational
from typing import Any, Callable, Optional

import gmpy2

Rational = type(gmpy2.mpq(0))

ZERO = gmpy2.mpq(0)
ONE = gmpy2.mpq(1)
HALF = gmpy2.mpq(1, 2)


class InputError(ValueError):
    """An element or argument violates the documented preconditions."""


class CarrierMismatchError(InputError):
    """Two elements from different carriers were combined."""


class ConfigurationError(ValueError):
    """A run configuration or carrier config is malformed or incompatible."""


class UnsupportedCarrierError(ConfigurationError):
    """The operation is not defined for the given carrier."""


class NormLookupError(LookupError):
    """No norm is registered under the requested name."""


def Q(value: Any, den: Optional[int] = None) -> Rational:
    """Coerce ``value`` to an exact rational.

    Accepts ints, rationals (``Fraction``/``mpq``) and the wire form
    ``"p/q"`` or ``"p"``.  Floats are refused: they would smuggle rounding
    into an exact computation.
    """
    if den is not None:
        if den == 0:
            raise InputError("zero denominator")
        return gmpy2.mpq(int(value), int(den))
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise InputError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return gmpy2.mpq(value)
    if isinstance(value, _AbstractRational):
        return gmpy2.mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Rational:
    """Parse the wire form ``"p/q"`` or ``"p"`` (sign on the numerator only)."""
    s = text.strip()
    num, sep, den = s.partition("/")
    if not _is_int_literal(num, signed=True) or (sep and not _is_int_literal(den, signed=False)):
        raise InputError(f"malformed rational {text!r}")
    if sep and int(den) == 0:
        raise InputError(f"zero denominator in {text!r}")
    return gmpy2.mpq(int(num), int(den) if sep else 1)


def _is_int_literal(s: str, signed: bool) -> bool:
    if signed and s[:1] in "+-":
        s = s[1:]
    return s.isdigit() and s.isascii()


def format_rational(r: Rational, decimal: bool = False) -> str:
    """Canonical ``"p/q"`` text, or a 15-significant-digit rendering."""
    r = Q(r)
    if decimal:
        return f"{float(r):.15g}"
    if r.denominator == 1:
        return str(int(r.numerator))
    return f"{int(r.numerator)}/{int(r.denominator)}"


@dataclass(frozen=True)
class TruncationContract:
    """What a carrier promises about its truncation.

    ``bound`` is ``sup{||x*|| : x >= 0}`` after the carrier has rescaled
    its norm, so it is always exactly 1.
    """

    domain: str
    unit: Any = None
    bound: Rational = ONE


@dataclass(frozen=True)
class TruncationBound:
    bound: Rational
    attained: bool
    witness: str
    # n -> element whose truncated norm tends to ``bound``; None if attained
    family: Optional[Callable[[int], Any]] = None


def _require_positive(carrier, *xs) -> None:
    for x in xs:
        carrier.validate(x)
        if not carrier.leq(carrier.zero(), x):
            raise InputError("expected a positive element")


def axiom_check_truncation(carrier, x, y) -> bool:
    """Both forms of the truncation axiom for the pair ``x, y >= 0``.

    ``x ^ y* <= x* <= x`` and ``x* ^ y == x ^ y*``.
    """
    _require_positive(carrier, x, y)
    tx, ty = carrier.truncate(x), carrier.truncate(y)
    sandwich = carrier.leq(carrier.meet(x, ty), tx) and carrier.leq(tx, x)
    return sandwich and carrier.meet(tx, y) == carrier.meet(x, ty)


def truncation_bound(carrier) -> TruncationBound:
    return carrier.truncation_bound()


def in_E_star(carrier, x) -> bool:
    """True iff ``|x|`` is a fixed point of the truncation."""
    carrier.validate(x)
    ax = carrier.abs(x)
    return carrier.truncate(ax) == ax


def contraction_check(carrier, x, y) -> bool:
    """``||x* - y*|| <= ||x - y||`` for ``x, y >= 0``."""
    _require_positive(carrier, x, y)
    lhs = carrier.norm(carrier.sub(carrier.truncate(x), carrier.truncate(y)))
    return lhs <= carrier.norm(carrier.sub(x, y))
