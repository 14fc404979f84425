"""Command-line front end.

Exit status: 0 when every executed check passes, 1 on a property failure,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .carriers import COORDINATE, CARRIER_KINDS, Carrier, carrier_from_config, default_carriers
from .core import ConfigurationError, InputError, NormLookupError, Q, format_rational
from .formats import infer_carrier, load_json, to_wire, unitized_from_wire
from .norms import applies, coordinate_representation, eval_custom, norm0, norm1, registered_norms
from .unitization import UnitizedElement
from .verifier import CATALOGUE, RunConfig, all_passed, reproduce_example, run_all

NORM_CHOICES = ("all", "norm1", "norm0", "normC", "gauge", "uL1")


class UsageError(Exception):
    pass


def _fmt(r, decimal: bool) -> str:
    return format_rational(r, decimal)


def _csv_rationals(text: Optional[str]) -> Optional[list]:
    if text is None:
        return None
    return [Q(v) for v in text.split(",")]


def _coordinate_carrier(dim, unit, weights) -> Carrier:
    unit = _csv_rationals(unit)
    weights = _csv_rationals(weights)
    if dim is None:
        dim = len(unit) if unit else (len(weights) if weights else 2)
    cfg = {"kind": COORDINATE, "dim": dim}
    if unit is not None:
        cfg["unit"] = unit
    if weights is not None:
        cfg["weights"] = weights
    return carrier_from_config(cfg)


def _resolve_carriers(args) -> list:
    if getattr(args, "carrier_config", None):
        return [carrier_from_config(load_json(args.carrier_config))]
    if args.carrier in (None, "all"):
        return default_carriers()
    if args.carrier == COORDINATE:
        return [_coordinate_carrier(args.dim, args.unit, args.weights)]
    return [carrier_from_config(args.carrier)]


# verify ----------------------------------------------------------------------

def _tsv_reports(reports, timings: bool) -> str:
    rows = ["id\tcarrier\ttrials\tfailures\telapsed\tstatus"]
    for r in reports:
        elapsed = f"{r.elapsed:.6f}" if timings and r.elapsed is not None else "-"
        rows.append(f"{r.property_id}\t{r.carrier}\t{r.trials}\t{r.failures}\t{elapsed}\t{r.status}")
    return "\n".join(rows) + "\n"


def cmd_verify(args) -> int:
    carriers = _resolve_carriers(args)
    properties = args.property or None
    if properties:
        for pid in properties:
            if pid not in CATALOGUE:
                raise UsageError(f"unknown property {pid!r}; choose from {', '.join(CATALOGUE)}")
    cfg = RunConfig(carriers=carriers, seed=args.seed, trials=args.trials,
                    properties=properties, workers=args.workers)
    reports = run_all(cfg)
    for r in reports:
        line = f"{r.status.upper():12s} {r.property_id:28s} {r.carrier:16s} trials={r.trials} failures={r.failures}"
        if args.timings:
            line += f" elapsed={r.elapsed:.3f}s"
        print(line)
        if r.status == "skipped":
            print(f"warning: {r.property_id} skipped on {r.carrier}: {r.note}", file=sys.stderr)

    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            if args.format == "tsv":
                fh.write(_tsv_reports(reports, args.timings))
            else:
                json.dump([r.to_dict(args.timings) for r in reports], fh, indent=2)
                fh.write("\n")

    if all_passed(reports):
        return 0
    failed = [r.to_dict(args.timings) for r in reports if r.status == "fail"]
    path = (args.report + ".counterexamples.json") if args.report else "truncriesz-counterexamples.json"
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(failed, fh, indent=2)
        fh.write("\n")
    print(f"{len(failed)} propert{'y' if len(failed) == 1 else 'ies'} failed; counterexamples in {path}",
          file=sys.stderr)
    return 1


# norms -----------------------------------------------------------------------

def cmd_norms(args) -> int:
    a = unitized_from_wire(load_json(args.input))
    if args.carrier_config:
        carrier = carrier_from_config(load_json(args.carrier_config))
    elif args.carrier == COORDINATE or (args.carrier is None and (args.unit or args.weights)):
        carrier = _coordinate_carrier(args.dim or len(a.x), args.unit, args.weights)
    elif args.carrier:
        carrier = carrier_from_config(args.carrier)
    else:
        carrier = infer_carrier(a.x)
    carrier.validate(a.x)

    names = [n for n in registered_norms(carrier)] if args.norm == "all" else [args.norm]
    for n in names:
        if not applies(n, carrier):
            raise UsageError(f"norm {n!r} is not defined on the {carrier.kind} carrier")
    values = {n: eval_custom(carrier, n, a) for n in names}

    rows = [{"norm": n, "value": _fmt(v, args.decimal), "carrier": carrier.config(), "element": to_wire(a)}
            for n, v in values.items()]
    if args.format == "tsv":
        sys.stdout.write("norm\tvalue\n" + "".join(f"{r['norm']}\t{r['value']}\n" for r in rows))
    else:
        print(json.dumps(rows, indent=2))

    if args.norm != "all":
        return 0
    lo, hi = norm0(carrier, a), norm1(carrier, a)
    ref = carrier.norm(a.x) + abs(a.alpha)
    checks = {"norm0 <= norm1": lo <= hi, "sandwich": ref <= 3 * hi and hi <= 3 * ref}
    for label, ok in checks.items():
        print(f"{'PASS' if ok else 'FAIL'} {label}", file=sys.stderr)
    return 0 if all(checks.values()) else 1


# example ---------------------------------------------------------------------

def cmd_example(args) -> int:
    report = reproduce_example(args.id, n_max=args.n_max)
    vals = dict(report.exact_values)
    d = args.decimal
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    elif report.property_id == "fn_sequence":
        print("n\t‖fₙ−1‖ᵤ\t‖fₙ−1‖₁")
        for n in range(2, args.n_max + 1):
            print(f"{n}\t{_fmt(vals[f'n={n} uL1(f_n - 1)'], d)}\t{_fmt(vals[f'n={n} norm1(f_n - 1)'], d)}")
    elif report.property_id == "unit_kernel":
        nonzero = vals["e - 1 != 0"] == 1
        print(f"‖e−1‖₀ = {_fmt(vals['norm0(e - 1)'], d)}, e−1 {'≠' if nonzero else '='} 0")
    else:
        bumps = sorted({k.split(" ")[1] for k in vals}, key=int)
        print("bump\t‖g‖\tnorm0(−f+1)")
        for i in bumps:
            print(f"{i}\t{_fmt(vals[f'bump {i} ||g||'], d)}\t{_fmt(vals[f'bump {i} norm0(1 - f)'], d)}")
        n0 = {vals[f"bump {i} norm0(1 - f)"] for i in bumps}
        if len(n0) == 1:
            print(f"norm0(−f+1) = {_fmt(n0.pop(), d)}")
    print(f"{report.status.upper()}: {report.note}", file=sys.stderr)
    return 0 if report.ok else 1


# repr ------------------------------------------------------------------------

def cmd_repr(args) -> int:
    carrier = _coordinate_carrier(args.dim, args.unit, args.weights)
    rep = coordinate_representation(carrier)
    a = unitized_from_wire(load_json(args.input)) if args.input else UnitizedElement(carrier.zero(), 1)
    carrier.validate(a.x)
    check = rep.check(a)
    d = args.decimal
    out = {
        "carrier": carrier.config(),
        "functionals": rep.functionals,
        "element": to_wire(a),
        "image": [_fmt(v, d) for v in check["image"]],
        "gauge": _fmt(check["gauge"], d),
        "sup_image": _fmt(check["sup"], d),
        "isometric": check["isometric"],
        "lattice": check["lattice"],
        "bijective": check["bijective"],
    }
    if args.format == "tsv":
        for f in out["functionals"]:
            print(f)
        print("image\t" + "\t".join(out["image"]))
        print(f"gauge\t{out['gauge']}\nsup_image\t{out['sup_image']}\nisometric\t{out['isometric']}")
    else:
        print(json.dumps(out, indent=2))
    return 0 if check["isometric"] and check["lattice"] and check["bijective"] else 1


# parser ----------------------------------------------------------------------

def _coordinate_flags(p) -> None:
    p.add_argument("--dim", type=int, help="coordinate carrier dimension")
    p.add_argument("--unit", help="truncation unit, comma separated rationals (e.g. 1,1)")
    p.add_argument("--weights", help="norm weights, comma separated rationals (e.g. 1/2,1/2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="truncriesz", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default="json"):
        p.add_argument("--format", choices=("json", "tsv"), default=fmt_default)
        p.add_argument("--decimal", action="store_true", help="render values with 15 significant digits")

    v = sub.add_parser("verify", help="run the property catalogue")
    v.add_argument("--carrier", choices=CARRIER_KINDS + ("all",), default="all")
    v.add_argument("--carrier-config", help="JSON carrier config file")
    _coordinate_flags(v)
    v.add_argument("--trials", type=int, default=1000)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--property", action="append", help="run only this property (repeatable)")
    v.add_argument("--report", help="write the report to this file")
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--timings", action="store_true", help="include elapsed times (breaks byte-identical reports)")
    v.add_argument("--format", choices=("json", "tsv"), default="json")
    v.set_defaults(func=cmd_verify)

    n = sub.add_parser("norms", help="evaluate norms of one element")
    n.add_argument("--carrier", choices=CARRIER_KINDS)
    n.add_argument("--carrier-config", help="JSON carrier config file")
    _coordinate_flags(n)
    n.add_argument("--input", required=True, help="element file")
    n.add_argument("--norm", choices=NORM_CHOICES, default="all")
    common(n)
    n.set_defaults(func=cmd_norms)

    e = sub.add_parser("example", help="reproduce a worked example")
    e.add_argument("id", choices=("fn-sequence", "compact-support", "unit-kernel"))
    e.add_argument("--n-max", type=int, default=64)
    common(e, "tsv")
    e.set_defaults(func=cmd_example)

    r = sub.add_parser("repr", help="finite C0 representation of the coordinate unitization")
    _coordinate_flags(r)
    r.add_argument("--input", help="element file (default: the unit 1)")
    common(r)
    r.set_defaults(func=cmd_repr)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trials", 0) < 0 or (getattr(args, "n_max", 2) or 2) < 2:
        parser.error("trials must be >= 0 and --n-max >= 2")
    try:
        return args.func(args)
    except (UsageError, InputError, ConfigurationError, NormLookupError) as exc:
        print(f"truncriesz: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
