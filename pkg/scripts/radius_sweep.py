"""MSE of every estimator versus detection radius at a fixed density.

Writes ``radius_sweep.csv`` and ``radius_sweep.svg`` into ``--out-dir``.
"""

import argparse
from pathlib import Path

from censorloc.cli import diagnostics_meta, sweep_meta
from censorloc.report import read_sweep_csv, render_svg, sweep_csv_text
from censorloc.simulation import DEFAULT_RADII, ScenarioConfig, run_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--density", type=float, default=1.0)
    ap.add_argument("--radii", type=float, nargs="+", default=list(DEFAULT_RADII))
    ap.add_argument("--trials", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int)
    ap.add_argument("--out-dir", type=Path, default=Path("results"))
    args = ap.parse_args()

    base = ScenarioConfig(density=args.density, trials=args.trials, master_seed=args.seed)
    records = run_sweep(base, "radius", args.radii, workers=args.workers)
    text = sweep_csv_text(records, sweep_meta(base, "radius", args.radii) + diagnostics_meta(records))

    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "radius_sweep.csv").write_text(text)
    svg = render_svg(read_sweep_csv(text), title=f"MSE versus radius, density = {args.density:g} per m^2")
    (args.out_dir / "radius_sweep.svg").write_text(svg)
    for r in records:
        mse = "n/a" if r.mse is None else f"{r.mse:.4g}"
        print(f"R={r.value:<4g} {r.estimator.value:<12} mse={mse}")


if __name__ == "__main__":
    main()
