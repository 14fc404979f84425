"""Property catalogue and runner.

Each property draws inputs from a :class:`~truncriesz.generators.Sampler`
and checks one identity or inequality in exact arithmetic.  A check returns
``True`` (holds), ``False`` (counterexample) or ``None`` when the premise of
an implication did not hold for that draw; vacuous draws are counted but are
not failures.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import __version__
from .carriers import (
    COMPACT_SUPPORT,
    COORDINATE,
    INTERVAL_CARRIER,
    Carrier,
    carrier_from_config,
    default_carriers,
    make_fn,
    support_extension_witness,
)
from .core import ONE, ZERO, ConfigurationError, InputError, Q, axiom_check_truncation, contraction_check, in_E_star
from .formats import to_wire
from .generators import Sampler, shrink
from .norms import (
    applies,
    coordinate_representation,
    dist_one,
    eval_custom,
    gauge_norm,
    lattice_norm_verified,
    norm0,
    norm1,
    normC,
    uL1,
    unitization_norms,
)
from .plfunction import REAL_LINE, PLFunction
from .unitization import (
    UnitizedElement,
    clip,
    u_abs,
    u_add,
    u_is_positive,
    u_join,
    u_leq,
    u_meet,
    u_scale,
    unit,
)

ORACLE_POINTS = 1000


@dataclass
class PropertyReport:
    property_id: str
    carrier: str
    trials: int
    failures: int
    first_counterexample: Optional[dict] = None
    exact_values: list = field(default_factory=list)
    seed: int = 0
    elapsed: Optional[float] = None
    status: str = "pass"
    note: str = ""
    carrier_config: dict = field(default_factory=dict)
    version: str = __version__

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self, timings: bool = False) -> dict:
        return {
            "property_id": self.property_id,
            "carrier": self.carrier,
            "status": self.status,
            "trials": self.trials,
            "failures": self.failures,
            "first_counterexample": self.first_counterexample,
            "exact_values": [[label, to_wire(v)] for label, v in self.exact_values],
            "seed": self.seed,
            "elapsed": round(self.elapsed, 6) if timings and self.elapsed is not None else None,
            "note": self.note,
            "carrier_config": self.carrier_config,
            "version": self.version,
        }


@dataclass(frozen=True)
class Property:
    id: str
    claim: str
    generate: Callable
    check: Callable
    applies: Callable = lambda carrier: True
    once: Optional[Callable] = None
    exploratory: bool = False


def _embed(x) -> UnitizedElement:
    return UnitizedElement(x, ZERO)


# individual checks -----------------------------------------------------------

def _trunc_bound_once(c: Carrier):
    tb = c.truncation_bound()
    values = [("bound", tb.bound)]
    if tb.family is None:
        return tb.bound == ONE, values
    ok = tb.bound == ONE
    for n in range(2, 65):
        got = c.norm(c.truncate(tb.family(n)))
        ok &= got == 1 - Q(1, 2 * n) and got <= tb.bound
    final = c.norm(c.truncate(tb.family(64)))
    values.append(("witness n=64", final))
    return ok and final >= 1 - Q(1, 128), values


def _av_oracle(c: Carrier, a: UnitizedElement, point_seed: int):
    points = c.model_points(random.Random(point_seed), ORACLE_POINTS, a.x)
    expected = [abs(v) for v in c.evaluate_model(a.x, a.alpha, points)]
    got = u_abs(c, a)
    return c.evaluate_model(got.x, got.alpha, points) == expected


def _positivity_alpha(c, a):
    if not u_is_positive(c, a):
        return None
    return a.alpha >= 0


def _order_ideal(c, a, y):
    if not u_leq(c, u_abs(c, a), _embed(c.abs(y))):
        return None
    return a.alpha == 0


def _norm_domination(c, x, alpha):
    if alpha <= 0 or not u_leq(c, u_abs(c, _embed(x)), UnitizedElement(c.zero(), alpha)):
        return None
    return c.norm(x) <= alpha


def _lattice_norm(name: str):
    def check(c, a, b, d, r):
        N = lambda v: eval_custom(c, name, v)
        small = clip(c, d, b)
        if not u_leq(c, u_abs(c, small), u_abs(c, b)):
            return False
        na, nb = N(a), N(b)
        zero = UnitizedElement(c.zero(), ZERO)
        return (
            N(small) <= nb
            and N(u_add(c, a, b)) <= na + nb
            and N(u_scale(c, r, a)) == abs(r) * na
            and (na == 0) == (a == zero)
            and N(zero) == 0
            and N(unit(c)) == 1
        )

    return check


def _extremality(c, a):
    lo, hi = norm0(c, a), norm1(c, a)
    return all(lo <= eval_custom(c, n, a) <= hi for n in unitization_norms(c))


def _sandwich(c, a):
    ref = c.norm(a.x) + abs(a.alpha)
    n1 = norm1(c, a)
    return ref <= 3 * n1 and n1 <= 3 * ref


def _lemma_unit(c, x):
    e = c.truncation_unit
    gap = UnitizedElement(c.neg(e), ONE)
    zero = UnitizedElement(c.zero(), ZERO)
    ee = _embed(e)
    meet_zero = u_meet(c, u_abs(c, _embed(x)), gap) == zero
    strict = u_leq(c, zero, ee) and ee != zero and u_leq(c, ee, unit(c)) and ee != unit(c)
    return meet_zero and strict


def _seminorm_kernel(c, a):
    in_kernel = c.add(a.x, c.scale(a.alpha, c.truncation_unit)) == c.zero()
    return (norm0(c, a) == 0) == in_kernel


def _gauge_am(c, a, b):
    return gauge_norm(c, u_join(c, a, b)) == max(gauge_norm(c, a), gauge_norm(c, b))


def _repr_isometry(c, a):
    report = coordinate_representation(c).check(a)
    return report["isometric"] and report["lattice"] and report["bijective"]


def _ideal_sup_consistency(c, g_src: UnitizedElement, y, n: int):
    env = u_abs(c, g_src)
    g, cc = env.x, env.alpha
    value = c.ideal_sup_norm(g, cc)
    clipped = clip(c, _embed(y), env)
    if clipped.alpha != 0:
        return False
    witness = c.ideal_sup_witness(g, cc, n)
    inside = u_leq(c, u_abs(c, _embed(witness)), env)
    return c.norm(clipped.x) <= value and inside and value - Q(1, n) <= c.norm(witness) <= value


def _e_star_bridge(c, x):
    return in_E_star(c, x) == u_leq(c, u_abs(c, _embed(x)), unit(c))


def _normC_monotone(c, b, d):
    small = clip(c, d, b)
    return normC(c, small) <= normC(c, b)


def _dense_once(c):
    d = dist_one(c, "uL1", 64)
    return d.upper_bound <= Q(1, 64), [("dist_one uL1 upper", d.upper_bound)]


def _closed_once(c):
    d1 = dist_one(c, "norm1", 16)
    ok = d1.lower_bound == 1
    values = [("dist_one norm1 lower", d1.lower_bound)]
    if c.kind == COMPACT_SUPPORT:
        d0 = dist_one(c, "norm0", 16)
        ok &= d0.lower_bound == 1 and d0.lower_bound <= d0.upper_bound
        values.append(("dist_one norm0 lower", d0.lower_bound))
    return ok, values


def _has_unit(c):
    return c.truncation_unit is not None


def _is(kind):
    return lambda c: c.kind == kind


CATALOGUE: dict = {}


def _add(prop: Property) -> None:
    CATALOGUE[prop.id] = prop


_add(Property("truncation_axioms", "x ^ y* <= x* <= x and x* ^ y = x ^ y* on the positive cone",
              lambda s: (s.positive(), s.positive()), axiom_check_truncation))
_add(Property("truncation_bound", "||x*|| <= 1, and the supremum 1 is reached or approached",
              lambda s: (s.positive(),),
              lambda c, x: c.norm(c.truncate(x)) <= c.truncation_bound().bound,
              once=_trunc_bound_once))
_add(Property("birkhoff_contraction", "||x* - y*|| <= ||x - y||",
              lambda s: (s.positive(), s.positive()), contraction_check))
_add(Property("av_oracle", "closed-form |x + alpha| equals the pointwise absolute value",
              lambda s: (s.unitized(), s.rng.randrange(2 ** 31)), _av_oracle))
_add(Property("positivity_alpha", "x + alpha >= 0 implies alpha >= 0",
              lambda s: (s.positive_unitized() if s.rng.random() < 0.4 else s.unitized(),),
              _positivity_alpha))
_add(Property("order_ideal", "|x + alpha| <= |y| with y in E implies alpha = 0",
              lambda s: (lambda y: ((clip(s.carrier, s.unitized(), _embed(y)) if s.rng.random() < 0.7
                                     else s.unitized()), y))(s.element()),
              _order_ideal))
_add(Property("norm_domination", "|x| <= alpha in the unitization implies ||x|| <= alpha",
              lambda s: (lambda x: (x, gauge_norm(s.carrier, _embed(x))
                                    * s.rng.choice([ONE, ONE, Q(2), Q(1, 2), Q(3, 4), Q(5, 4)])))(s.element()),
              _norm_domination))
for _name in ("norm1", "norm0", "gauge", "uL1"):
    _add(Property(f"lattice_norm[{_name}]", f"{_name} is a lattice norm with ||1|| = 1",
                  lambda s: (s.unitized(), s.unitized(), s.unitized(), s.scalar()),
                  _lattice_norm(_name),
                  applies=(lambda n: lambda c: applies(n, c) and lattice_norm_verified(n, c))(_name)))
_add(Property("extremality", "norm0 <= N <= norm1 for every registered unitization norm N",
              lambda s: (s.unitized(),), _extremality))
_add(Property("sandwich_classic", "(||x|| + |alpha|)/3 <= norm1 <= 3(||x|| + |alpha|)",
              lambda s: (s.unitized(),), _sandwich))
_add(Property("lemma_unit", "|x| ^ (1 - e) = 0 and 0 < e < 1",
              lambda s: (s.element(),), _lemma_unit, applies=_has_unit))
_add(Property("norm1_closed_diag", "norm1(x - 1) >= 1 for all x in E",
              lambda s: (s.element(),), lambda c, x: norm1(c, UnitizedElement(x, -1)) >= 1,
              once=_closed_once))
_add(Property("dense_equality", "uL1 = norm0 on the interval carrier",
              lambda s: (s.unitized(),), lambda c, a: uL1(c, a) == norm0(c, a),
              applies=_is(INTERVAL_CARRIER), once=_dense_once))
_add(Property("seminorm_kernel", "norm0(x + alpha) = 0 iff x = -alpha e",
              lambda s: ((lambda r: UnitizedElement(s.carrier.scale(-r, s.carrier.truncation_unit), r))(s.scalar())
                         if s.rng.random() < 0.3 else s.unitized(),),
              _seminorm_kernel, applies=_has_unit))
_add(Property("gauge_am", "gauge(a v b) = max(gauge a, gauge b) for a, b >= 0",
              lambda s: (s.positive_unitized(), s.positive_unitized()), _gauge_am))
_add(Property("repr_isometry", "the n+1 point map is a lattice isometry for the gauge",
              lambda s: (s.unitized(),), _repr_isometry, applies=_is(COORDINATE)))
_add(Property("ideal_sup_consistency", "clipped samples stay below the closed-form supremum; witnesses reach it",
              lambda s: (s.unitized(), s.element(), s.rng.randint(1, 64)), _ideal_sup_consistency,
              applies=lambda c: not _has_unit(c)))
_add(Property("e_star_bridge", "|x|* = |x| iff |x| <= 1 in the unitization",
              lambda s: (s.element(),), _e_star_bridge))
_add(Property("normC_monotonicity_fuzz", "search for |a| <= |b| with normC(a) > normC(b)",
              lambda s: (s.unitized(), s.unitized()), _normC_monotone, exploratory=True))


# running -----------------------------------------------------------------------

def _outcome(prop: Property, carrier: Carrier, inputs: tuple):
    try:
        return prop.check(carrier, *inputs)
    except InputError:
        return "invalid"


def _seed_for(seed: int, property_id: str, carrier: Carrier) -> random.Random:
    return random.Random(f"{seed}/{property_id}/{carrier.kind}")


def run_property(property_id: str, carrier, trials: int = 1000, seed: int = 42,
                 shrink_failures: bool = True) -> PropertyReport:
    if property_id not in CATALOGUE:
        raise ConfigurationError(f"unknown property {property_id!r}")
    carrier = carrier_from_config(carrier)
    prop = CATALOGUE[property_id]
    if not prop.applies(carrier):
        raise ConfigurationError(f"{property_id} does not apply to the {carrier.kind} carrier")
    if trials < 0:
        raise ConfigurationError("trials must be non-negative")

    start = time.perf_counter()
    rng = _seed_for(seed, property_id, carrier)
    sampler = Sampler(carrier, rng)
    failures = vacuous = 0
    first = None
    for _ in range(trials):
        inputs = prop.generate(sampler)
        try:
            result = prop.check(carrier, *inputs)
        except Exception as exc:  # a crash on generated input is a counterexample too
            result = False
            error = f"{type(exc).__name__}: {exc}"
        else:
            error = None
        if result is None:
            vacuous += 1
        elif result is False:
            failures += 1
            if first is None:
                if shrink_failures and error is None:
                    inputs = shrink(lambda inp: _outcome(prop, carrier, inp) is False, inputs)
                first = {"inputs": to_wire(list(inputs))}
                if error:
                    first["error"] = error

    values = [("vacuous draws", Q(vacuous))] if vacuous else []
    notes = []
    if trials == 0:
        notes.append("no trials run")
    elif prop.once is not None:
        ok, extra = prop.once(carrier)
        values.extend(extra)
        if not ok:
            failures += 1
            notes.append("deterministic check failed")
    if prop.exploratory:
        status = "exploratory"
        notes.append("exploratory search; failures are findings, not defects")
    else:
        status = "pass" if failures == 0 else "fail"
    return PropertyReport(property_id, carrier.kind, trials, failures, first, values, seed,
                          time.perf_counter() - start, status, "; ".join(notes), carrier.config())


@dataclass
class RunConfig:
    carriers: list = field(default_factory=default_carriers)
    seed: int = 42
    trials: int = 1000
    properties: Optional[list] = None
    workers: int = 1

    @classmethod
    def from_dict(cls, data: dict) -> "RunConfig":
        if not isinstance(data, dict):
            raise ConfigurationError("config must be a mapping")
        unknown = set(data) - {"carriers", "seed", "trials", "properties", "workers"}
        if unknown:
            raise ConfigurationError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls()
        if "carriers" in data:
            cfg.carriers = [carrier_from_config(c) for c in data["carriers"]]
        for key in ("seed", "trials", "workers"):
            if key in data:
                if not isinstance(data[key], int) or isinstance(data[key], bool):
                    raise ConfigurationError(f"{key} must be an integer")
                setattr(cfg, key, data[key])
        if "properties" in data:
            cfg.properties = list(data["properties"])
        return cfg


def _skipped(pid: str, carrier: Carrier, seed: int) -> PropertyReport:
    return PropertyReport(pid, carrier.kind, 0, 0, None, [], seed, 0.0, "skipped",
                          f"not applicable to the {carrier.kind} carrier", carrier.config())


def _run_pair(args):
    pid, config, trials, seed = args
    return run_property(pid, carrier_from_config(config), trials, seed)


def run_all(config=None) -> list:
    """Run the catalogue over every configured carrier, in a fixed order."""
    if config is None:
        config = RunConfig()
    elif isinstance(config, dict):
        config = RunConfig.from_dict(config)
    if config.trials < 0:
        raise ConfigurationError("trials must be non-negative")
    pids = config.properties if config.properties is not None else list(CATALOGUE)
    for pid in pids:
        if pid not in CATALOGUE:
            raise ConfigurationError(f"unknown property {pid!r}")
    carriers = [carrier_from_config(c) for c in config.carriers]

    jobs, slots = [], []
    for pid in pids:
        for carrier in carriers:
            if CATALOGUE[pid].applies(carrier):
                slots.append(len(jobs))
                jobs.append((pid, carrier.config(), config.trials, config.seed))
            else:
                slots.append(_skipped(pid, carrier, config.seed))
    if config.workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(config.workers) as pool:
            done = list(pool.map(_run_pair, jobs))
    else:
        done = [_run_pair(j) for j in jobs]
    return [done[s] if isinstance(s, int) else s for s in slots]


def all_passed(reports: list) -> bool:
    return all(r.ok for r in reports)


# worked examples -------------------------------------------------------------

EXAMPLES = ("fn_sequence", "compact_support_witness", "unit_kernel")


def reproduce_example(example_id: str, n_max: int = 64, bumps: int = 20, seed: int = 42) -> PropertyReport:
    """Exact reproduction of one worked example."""
    example_id = example_id.replace("-", "_")
    if example_id == "compact_support":
        example_id = "compact_support_witness"
    start = time.perf_counter()
    if example_id == "fn_sequence":
        from .carriers import IntervalCarrier

        c = IntervalCarrier()
        values, failures, note = [], 0, ""
        for n in range(2, n_max + 1):
            a = UnitizedElement(make_fn(n), -1)
            u, n1 = uL1(c, a), norm1(c, a)
            values += [(f"n={n} uL1(f_n - 1)", u), (f"n={n} norm1(f_n - 1)", n1)]
            # u tends to 0 while norm1 stays at 1
            if not (u == Q(1, 2 * n) and u <= Q(1, n) and n1 == 1 and norm0(c, a) == u):
                failures += 1
        note = "uL1(f_n - 1) = 1/(2n) exactly, which is <= 1/n; norm1(f_n - 1) = 1"
        trials = n_max - 1
    elif example_id == "compact_support_witness":
        from .carriers import CompactSupportCarrier

        c = CompactSupportCarrier()
        rng = random.Random(seed)
        values, failures = [], 0
        fs = [PLFunction((0, 1, 2), (0, 1, 0), REAL_LINE)]
        while len(fs) < bumps:
            fs.append(c.truncate(c.abs(c.random_element(rng, max_breakpoints=5))))
        for i, f in enumerate(fs):
            hull = f.support_hull() or (ZERO, ZERO)
            a = max(abs(hull[0]), abs(hull[1]), ONE)
            g = support_extension_witness(f, a)
            one_minus_f = UnitizedElement(c.neg(f), 1)
            n0 = norm0(c, one_minus_f)
            # the tent g - f is the element that fits under 1 - f
            tent = c.sub(g, f)
            ok = (c.leq(f, g) and c.leq(g, c.truncate(g)) and c.norm(g) == 1 and n0 == 1
                  and c.norm(tent) == 1 and u_leq(c, u_abs(c, _embed(tent)), one_minus_f))
            failures += not ok
            values += [(f"bump {i} ||g||", c.norm(g)), (f"bump {i} norm0(1 - f)", n0)]
        note = "f <= g <= 1, ||g|| = 1, |g - f| <= 1 - f, norm0(1 - f) = 1"
        trials = len(fs)
    elif example_id == "unit_kernel":
        from .carriers import CoordinateCarrier

        c = CoordinateCarrier(2, (1, 1), ("1/2", "1/2"))
        a = UnitizedElement(c.truncation_unit, -1)
        n0 = norm0(c, a)
        nonzero = a != UnitizedElement(c.zero(), ZERO)
        values = [("norm0(e - 1)", n0), ("e - 1 != 0", Q(int(nonzero)))]
        failures = int(not (n0 == 0 and nonzero))
        note = "norm0 vanishes on the nonzero element e - 1"
        trials = 1
    else:
        raise LookupError(f"unknown example {example_id!r}")
    return PropertyReport(example_id, c.kind, trials, failures, None, values, seed,
                          time.perf_counter() - start, "pass" if failures == 0 else "fail", note, c.config())
