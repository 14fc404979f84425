"""Continuous piecewise-linear functions with rational breakpoints.

A :class:`PLFunction` lives either on ``[-1, 1]`` and vanishes at both
endpoints (``domain="interval"``), or on the real line with compact support
(``domain="real_line"``), in which case it is identically zero outside its
first and last breakpoint.  Instances are always stored in canonical form:
collinear interior breakpoints are dropped, and real-line functions carry no
redundant zero segments at either end (the zero function has no breakpoints
at all).  Equality of functions is therefore equality of the stored tuples.

Meets, joins and truncations insert the exact rational crossing points, so
the class is closed under every Riesz-space operation.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .core import HALF, ONE, ZERO, InputError, Q, Rational, CarrierMismatchError

INTERVAL = "interval"
REAL_LINE = "real_line"
DOMAINS = (INTERVAL, REAL_LINE)


def _collinear(t0, v0, t1, v1, t2, v2) -> bool:
    return (v1 - v0) * (t2 - t1) == (v2 - v1) * (t1 - t0)


def _canonical(ts: list, vs: list, domain: str) -> tuple[list, list]:
    if domain == REAL_LINE:
        while len(vs) >= 2 and vs[1] == 0:
            ts, vs = ts[1:], vs[1:]
        while len(vs) >= 2 and vs[-2] == 0:
            ts, vs = ts[:-1], vs[:-1]
        if len(vs) < 2:
            return [], []
    out_t, out_v = [ts[0]], [vs[0]]
    for t, v in zip(ts[1:], vs[1:]):
        while len(out_t) >= 2 and _collinear(out_t[-2], out_v[-2], out_t[-1], out_v[-1], t, v):
            out_t.pop()
            out_v.pop()
        out_t.append(t)
        out_v.append(v)
    return out_t, out_v


@dataclass(frozen=True)
class PLFunction:
    breakpoints: tuple
    values: tuple
    domain: str = INTERVAL

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise InputError(f"unknown domain {self.domain!r}")
        ts = [Q(t) for t in self.breakpoints]
        vs = [Q(v) for v in self.values]
        if len(ts) != len(vs):
            raise InputError("breakpoints and values differ in length")
        if any(b <= a for a, b in zip(ts, ts[1:])):
            raise InputError("breakpoints must be strictly increasing")
        if self.domain == INTERVAL:
            if len(ts) < 2 or ts[0] != -1 or ts[-1] != 1:
                raise InputError("interval functions run from -1 to 1")
            if vs[0] != 0 or vs[-1] != 0:
                raise InputError("interval functions vanish at -1 and 1")
        elif ts:
            if len(ts) < 2:
                raise InputError("degenerate support: a single breakpoint")
            if vs[0] != 0 or vs[-1] != 0:
                raise InputError("compactly supported functions start and end at 0")
        ts, vs = _canonical(ts, vs, self.domain) if ts else ([], [])
        object.__setattr__(self, "breakpoints", tuple(ts))
        object.__setattr__(self, "values", tuple(vs))

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, domain: str = INTERVAL) -> "PLFunction":
        if domain == INTERVAL:
            return cls((-1, 1), (0, 0), INTERVAL)
        return cls((), (), REAL_LINE)

    @classmethod
    def hat(cls, peak, center=0, left=None, right=None, domain: str = INTERVAL) -> "PLFunction":
        """Tent with value ``peak`` at ``center`` falling to 0 at ``left``/``right``.

        On the interval the feet default to -1 and 1.
        """
        if domain == INTERVAL:
            left = -1 if left is None else left
            right = 1 if right is None else right
            ts = [-1, left, center, right, 1]
            vs = [0, 0, peak, 0, 0]
            pts = sorted(set(zip(ts, vs)), key=lambda p: Q(p[0]))
            return cls(tuple(p[0] for p in pts), tuple(p[1] for p in pts), INTERVAL)
        if left is None or right is None:
            raise InputError("real-line hats need explicit feet")
        return cls((left, center, right), (0, peak, 0), REAL_LINE)

    @classmethod
    def _raw(cls, ts, vs, domain) -> "PLFunction":
        # Skip rational coercion for data produced internally.
        obj = object.__new__(cls)
        if domain == REAL_LINE and not ts:
            pass
        else:
            ts, vs = _canonical(list(ts), list(vs), domain)
        object.__setattr__(obj, "breakpoints", tuple(ts))
        object.__setattr__(obj, "values", tuple(vs))
        object.__setattr__(obj, "domain", domain)
        return obj

    # evaluation ---------------------------------------------------------

    def __call__(self, t) -> Rational:
        t = Q(t)
        ts = self.breakpoints
        if self.domain == INTERVAL and not -1 <= t <= 1:
            raise InputError(f"{t} lies outside [-1, 1]")
        if not ts or t <= ts[0] or t >= ts[-1]:
            if ts and t == ts[0]:
                return self.values[0]
            if ts and t == ts[-1]:
                return self.values[-1]
            return ZERO
        i = bisect_right(ts, t) - 1
        t0, t1 = ts[i], ts[i + 1]
        v0, v1 = self.values[i], self.values[i + 1]
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0)

    def sample(self, points: Sequence) -> list:
        """Values at ascending ``points`` in one linear sweep."""
        ts, vs = self.breakpoints, self.values
        out = []
        n = len(ts)
        i = 0
        for t in points:
            if n == 0 or t <= ts[0]:
                out.append(vs[0] if n and t == ts[0] else ZERO)
                continue
            if t >= ts[-1]:
                out.append(vs[-1] if t == ts[-1] else ZERO)
                continue
            while ts[i + 1] <= t:
                i += 1
            if t == ts[i]:
                out.append(vs[i])
            else:
                out.append(vs[i] + (vs[i + 1] - vs[i]) * (t - ts[i]) / (ts[i + 1] - ts[i]))
        return out

    def support_hull(self) -> tuple:
        """``(first, last)`` breakpoint, or ``None`` for the zero real-line function."""
        if not self.breakpoints:
            return None
        return self.breakpoints[0], self.breakpoints[-1]

    # vector space -------------------------------------------------------

    def _check(self, other: "PLFunction") -> None:
        if not isinstance(other, PLFunction) or other.domain != self.domain:
            raise CarrierMismatchError("functions live on different domains")

    def __add__(self, other: "PLFunction") -> "PLFunction":
        return combine(self, other, lambda a, b: a + b, crossings=False)

    def __sub__(self, other: "PLFunction") -> "PLFunction":
        return combine(self, other, lambda a, b: a - b, crossings=False)

    def __neg__(self) -> "PLFunction":
        return PLFunction._raw(self.breakpoints, [-v for v in self.values], self.domain)

    def scale(self, r) -> "PLFunction":
        r = Q(r)
        if r == 0:
            return PLFunction.zero(self.domain)
        return PLFunction._raw(self.breakpoints, [r * v for v in self.values], self.domain)

    def __rmul__(self, r) -> "PLFunction":
        return self.scale(r)

    # lattice ------------------------------------------------------------

    def meet(self, other: "PLFunction") -> "PLFunction":
        return combine(self, other, min, crossings=True)

    def join(self, other: "PLFunction") -> "PLFunction":
        return combine(self, other, max, crossings=True)

    def abs(self) -> "PLFunction":
        return level_map(self, ZERO, abs)

    def pos(self) -> "PLFunction":
        return level_map(self, ZERO, lambda v: v if v > 0 else ZERO)

    def neg_part(self) -> "PLFunction":
        return level_map(self, ZERO, lambda v: -v if v < 0 else ZERO)

    def min_level(self, level) -> "PLFunction":
        """Pointwise ``min(level, f)``; only meaningful for ``f >= 0``, ``level >= 0``."""
        level = Q(level)
        return level_map(self, level, lambda v: v if v < level else level)

    def leq(self, other: "PLFunction") -> bool:
        self._check(other)
        grid = merged_grid(self, other)
        return all(a <= b for a, b in zip(self.sample(grid), other.sample(grid)))

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.values)

    def max_value(self) -> Rational:
        """Largest value, counting the zero outside the support."""
        m = max(self.values, default=ZERO)
        return m if self.domain == INTERVAL or m > 0 else max(m, ZERO)

    def min_value(self) -> Rational:
        m = min(self.values, default=ZERO)
        return m if self.domain == INTERVAL or m < 0 else min(m, ZERO)

    # integrals ----------------------------------------------------------

    def integral(self) -> Rational:
        """Signed integral, by the trapezoid rule (exact for PL data)."""
        ts, vs = self.breakpoints, self.values
        return sum(((vs[i] + vs[i + 1]) * (ts[i + 1] - ts[i]) for i in range(len(ts) - 1)), ZERO) * HALF

    def integral_abs(self) -> Rational:
        """Integral of ``|f|``: zero crossings are inserted, then trapezoids summed."""
        return self.abs().integral()

    def sup_abs(self) -> Rational:
        return max((abs(v) for v in self.values), default=ZERO)

    def __repr__(self) -> str:
        pts = ", ".join(f"{t}:{v}" for t, v in zip(self.breakpoints, self.values))
        return f"PLFunction[{self.domain}]({pts})"


def merged_grid(*fs: PLFunction) -> list:
    grid = set()
    for f in fs:
        grid.update(f.breakpoints)
    return sorted(grid)


def combine(f: PLFunction, g: PLFunction, op: Callable, crossings: bool) -> PLFunction:
    """Pointwise ``op(f, g)`` on the merged grid.

    With ``crossings`` the points where ``f - g`` changes sign strictly
    between grid nodes are added, which is what makes ``min``/``max`` exact.
    """
    f._check(g)
    grid = merged_grid(f, g)
    if not grid:
        return PLFunction.zero(f.domain)
    a, b = f.sample(grid), g.sample(grid)
    ts, vs = [grid[0]], [op(a[0], b[0])]
    for i in range(1, len(grid)):
        if crossings:
            d0, d1 = a[i - 1] - b[i - 1], a[i] - b[i]
            if (d0 < 0 < d1) or (d1 < 0 < d0):
                s = d0 / (d0 - d1)
                ts.append(grid[i - 1] + (grid[i] - grid[i - 1]) * s)
                vs.append(a[i - 1] + (a[i] - a[i - 1]) * s)
        ts.append(grid[i])
        vs.append(op(a[i], b[i]))
    return PLFunction._raw(ts, vs, f.domain)


def level_map(f: PLFunction, level: Rational, op: Callable) -> PLFunction:
    """Apply a scalar ``op`` that kinks only at ``level``, adding level crossings."""
    ts0, vs0 = f.breakpoints, f.values
    if not ts0:
        return f
    ts, vs = [ts0[0]], [op(vs0[0])]
    for i in range(1, len(ts0)):
        d0, d1 = vs0[i - 1] - level, vs0[i] - level
        if (d0 < 0 < d1) or (d1 < 0 < d0):
            ts.append(ts0[i - 1] + (ts0[i] - ts0[i - 1]) * d0 / (d0 - d1))
            vs.append(op(level))
        ts.append(ts0[i])
        vs.append(op(vs0[i]))
    return PLFunction._raw(ts, vs, f.domain)


def shifted_integral_abs(f: PLFunction, alpha) -> Rational:
    """``integral over [-1, 1] of |f(t) + alpha|`` for an interval function.

    Each segment is integrated in closed form (split at the zero crossing
    when the sign changes), independently of :func:`level_map`.
    """
    alpha = Q(alpha)
    if f.domain != INTERVAL:
        raise InputError("shifted integral needs an interval function")
    ts = f.breakpoints
    vs = [v + alpha for v in f.values]
    total = ZERO
    for i in range(len(ts) - 1):
        a, b, dt = vs[i], vs[i + 1], ts[i + 1] - ts[i]
        if a * b >= 0:
            total += (abs(a) + abs(b)) * dt * HALF
        else:
            total += (a * a + b * b) * dt / (2 * (abs(a) + abs(b)))
    return total


def from_points(points: Iterable[tuple], domain: str) -> PLFunction:
    pts = list(points)
    return PLFunction(tuple(p[0] for p in pts), tuple(p[1] for p in pts), domain)


__all__ = [
    "PLFunction",
    "INTERVAL",
    "REAL_LINE",
    "combine",
    "level_map",
    "merged_grid",
    "shifted_integral_abs",
    "from_points",
    "ONE",
]
