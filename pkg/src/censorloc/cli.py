"""Command-line entry point (``censorloc``).

Exit codes: 0 success, 1 usage or parse error, 2 inconsistent observation,
3 oracle resolution failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from . import __version__
from .errors import InvalidConfig, InvalidInput, InvalidObservation, OracleResolutionError
from .estimators import ALL_ESTIMATORS, EstimatorId, estimate, parse_ids
from .oracle import DEFAULT_H_FACTOR, grid_for, oracle_area_centroid
from .region import region_area, region_centroid
from .report import load_instance, read_sweep_csv, render_svg, write_sweep_csv
from .simulation import (
    DEFAULT_COUNTEREXAMPLE,
    DEFAULT_COUNTEREXAMPLE_RADII,
    RNG_FAMILY,
    ScenarioConfig,
    counterexample_report,
    run_sweep,
)
from .stats import Observation, minimal_sufficient_statistic


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def fmt(v: float) -> str:
    """Human-readable number at picometer resolution."""
    return "%.12g" % (round(v, 12) + 0.0)


def fmt_exact(v: float) -> str:
    return "%.17g" % v


def _floats(values: list[str]) -> list[float]:
    out = []
    for v in values:
        for part in v.split(","):
            if part.strip():
                try:
                    out.append(float(part))
                except ValueError:
                    raise UsageError(f"not a number: {part!r}") from None
    return out


def _radius(args, inst) -> float | None:
    return args.radius if args.radius is not None else inst.radius


def cmd_estimate(args) -> int:
    inst = load_instance(args.instance)
    R = _radius(args, inst)
    ids = parse_ids(args.estimator) if args.estimator else tuple(
        e for e in ALL_ESTIMATORS if R is not None or not e.needs_radius)
    missing = [e.value for e in ids if e.needs_radius and R is None]
    if missing:
        raise UsageError(f"{', '.join(missing)} need a detection radius (--radius or in the file)")
    obs = Observation(inst.sensors, R)
    f = fmt_exact if args.csv else fmt
    if args.csv:
        print("estimator,x,y")
    for est in estimate(obs, ids):
        print(f"{est.estimator.value},{f(est.point.x)},{f(est.point.y)}")
    return 0


def sweep_meta(base: ScenarioConfig, variable: str, values: list[float]) -> list[str]:
    fixed = f"density={base.density!r}" if variable == "radius" else f"radius={base.radius!r}"
    if variable == "radius" and base.n_sensors is not None:
        fixed = f"n_sensors={base.n_sensors}"
    return [
        f"censorloc {__version__} sweep",
        f"variable={variable} values={','.join(repr(v) for v in values)} {fixed}",
        f"trials={base.trials} master_seed={base.master_seed} half_width={base.half_width!r}",
        f"target={'random' if base.random_target else base.target}",
        f"rng={RNG_FAMILY}",
        "MER_CENTER=center of the axis-aligned bounding box",
        "STEINER=exterior-angle-weighted average of hull corners",
        "mse averages squared error over trials with at least one detection",
    ]


def diagnostics_meta(records) -> list[str]:
    seen = {}
    for r in records:
        seen.setdefault(r.value, r.diagnostics)
    lines = []
    for v in sorted(seen):
        d = seen[v]
        if d:
            lines.append(
                f"diagnostics value={v!r} mean_n={d['mean_n']:.6g} mean_mss_size={d['mean_mss_size']:.6g} "
                f"mean_hull_corners={d['mean_hull_corners']:.6g} "
                f"all_corners_contributing={d['all_corners_contributing']:.6g}")
    return lines


def cmd_sweep(args) -> int:
    values = _floats(args.values)
    if not values:
        raise UsageError("--values needs at least one number")
    kwargs = dict(
        radius=args.radius, half_width=args.half_width, trials=args.trials,
        master_seed=args.seed, random_target=args.random_target,
        estimators=parse_ids(args.estimator) if args.estimator else ALL_ESTIMATORS,
    )
    if args.n_sensors is not None:
        kwargs.update(density=None, n_sensors=args.n_sensors)
    else:
        kwargs.update(density=args.density)
    base = ScenarioConfig(**kwargs)
    records = run_sweep(base, args.variable, values, workers=args.workers)
    meta = [] if args.no_meta else sweep_meta(base, args.variable, values) + diagnostics_meta(records)
    if args.out == "-":
        write_sweep_csv(records, sys.stdout, meta)
    else:
        with open(args.out, "w", newline="") as fh:
            write_sweep_csv(records, fh, meta)
    return 0


def cmd_counterexample(args) -> int:
    sensors = load_instance(args.instance).sensors if args.instance else DEFAULT_COUNTEREXAMPLE
    radii = _floats([args.radii])
    if len(radii) != 2:
        raise UsageError("--radii takes exactly two values, e.g. 1.05,1.6")
    a, b, sep = counterexample_report(sensors, (radii[0], radii[1]))
    print(f"R={fmt(radii[0])} CM_MVU,{fmt(a.x)},{fmt(a.y)}")
    print(f"R={fmt(radii[1])} CM_MVU,{fmt(b.x)},{fmt(b.y)}")
    print(f"separation,{fmt(sep)}")
    if args.oracle_h is not None:
        ga = oracle_area_centroid(sensors, radii[0], grid_for(sensors, radii[0], args.oracle_h)).centroid
        gb = oracle_area_centroid(sensors, radii[1], grid_for(sensors, radii[1], args.oracle_h)).centroid
        print(f"grid_separation,{fmt(math.hypot(ga.x - gb.x, ga.y - gb.y))}")
    return 0


def cmd_mss(args) -> int:
    inst = load_instance(args.instance)
    R = _radius(args, inst)
    if R is None:
        raise UsageError("mss needs a detection radius (--radius or in the file)")
    res = minimal_sufficient_statistic(Observation(inst.sensors, R))
    T = res.region
    c = region_centroid(T)
    print(",".join(str(i) for i in res.indices))
    print(f"kind,{T.kind.value}")
    print(f"vertices,{len(T.vertices)}")
    print(f"area,{fmt(region_area(T))}")
    print(f"centroid,{fmt(c.x)},{fmt(c.y)}")
    return 0


def cmd_oracle_check(args) -> int:
    inst = load_instance(args.instance)
    R = _radius(args, inst)
    if R is None:
        raise UsageError("oracle-check needs a detection radius (--radius or in the file)")
    obs = Observation(inst.sensors, R)
    res = minimal_sufficient_statistic(obs)
    area, cen = region_area(res.region), region_centroid(res.region)
    h = args.h if args.h is not None else DEFAULT_H_FACTOR * R
    grid = oracle_area_centroid(inst.sensors, R, grid_for(inst.sensors, R, h))
    d_area = abs(area - grid.area)
    d_cen = math.hypot(cen.x - grid.centroid.x, cen.y - grid.centroid.y)
    print(f"h,{fmt(h)}")
    print(f"cells,{grid.cells}")
    print(f"analytic_area,{fmt(area)}")
    print(f"grid_area,{fmt(grid.area)}")
    print(f"delta_area,{fmt(d_area)}")
    print(f"area_error_bound,{fmt(grid.error_bound)}")
    print(f"analytic_centroid,{fmt(cen.x)},{fmt(cen.y)}")
    print(f"grid_centroid,{fmt(grid.centroid.x)},{fmt(grid.centroid.y)}")
    print(f"delta_centroid,{fmt(d_cen)}")
    print("status," + ("within_bound" if d_area <= grid.error_bound else "exceeds_bound"))
    return 0


def cmd_plot(args) -> int:
    try:
        text = Path(args.csv_file).read_text()
    except OSError as exc:
        raise InvalidInput(str(exc)) from None
    svg = render_svg(read_sweep_csv(text), title=args.title)
    Path(args.out).write_text(svg)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="censorloc", description="Target localization from censored binary detectors.")
    p.add_argument("--version", action="version", version=f"censorloc {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    est_help = "estimator id (repeatable): " + ", ".join(e.value for e in EstimatorId)

    e = sub.add_parser("estimate", help="estimate the target location for one instance")
    e.add_argument("instance")
    e.add_argument("--estimator", action="append", metavar="ID", help=est_help)
    e.add_argument("--radius", type=float)
    e.add_argument("--csv", action="store_true", help="header plus full-precision numbers")
    e.set_defaults(func=cmd_estimate)

    s = sub.add_parser("sweep", help="Monte Carlo MSE sweep over density or radius")
    s.add_argument("--variable", choices=("density", "radius"), required=True)
    s.add_argument("--values", nargs="+", required=True, help="comma or space separated")
    s.add_argument("--radius", type=float, default=1.0, help="fixed radius for density sweeps")
    s.add_argument("--density", type=float, default=1.0, help="fixed density for radius sweeps")
    s.add_argument("--n-sensors", type=int, help="fixed sensor count instead of a density")
    s.add_argument("--half-width", type=float, default=50.0)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--estimator", action="append", metavar="ID", help=est_help)
    s.add_argument("--random-target", action="store_true")
    s.add_argument("--workers", type=int, help="worker processes (default: $CENSORLOC_THREADS or 1)")
    s.add_argument("--out", default="-", help="CSV path, '-' for stdout")
    s.add_argument("--no-meta", action="store_true", help="omit '#' metadata lines")
    s.set_defaults(func=cmd_sweep)

    c = sub.add_parser("counterexample", help="CM of one instance under two radii")
    c.add_argument("--instance", help="instance file (default: built-in asymmetric triangle)")
    c.add_argument("--radii", default=",".join(str(r) for r in DEFAULT_COUNTEREXAMPLE_RADII))
    c.add_argument("--oracle-h", type=float, help="also report the grid-oracle separation at this step")
    c.set_defaults(func=cmd_counterexample)

    m = sub.add_parser("mss", help="minimal sufficient statistic of an instance")
    m.add_argument("instance")
    m.add_argument("--radius", type=float)
    m.set_defaults(func=cmd_mss)

    o = sub.add_parser("oracle-check", help="compare analytic region moments with the grid oracle")
    o.add_argument("instance")
    o.add_argument("--radius", type=float)
    o.add_argument("--h", type=float, help=f"grid step (default {DEFAULT_H_FACTOR}*R)")
    o.set_defaults(func=cmd_oracle_check)

    pl = sub.add_parser("plot", help="render a sweep CSV as an SVG line chart")
    pl.add_argument("csv_file")
    pl.add_argument("--out", required=True)
    pl.add_argument("--title")
    pl.set_defaults(func=cmd_plot)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidObservation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OracleResolutionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (UsageError, InvalidInput, InvalidConfig, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
