"""MSE of every estimator versus sensor density at a fixed detection radius.

Writes ``density_sweep.csv`` and ``density_sweep.svg`` into ``--out-dir``.
The default of 8000 trials per density takes a few minutes on one core;
pass ``--trials 500`` for a quick look.
"""

import argparse
from pathlib import Path

from censorloc.cli import diagnostics_meta, sweep_meta
from censorloc.report import read_sweep_csv, render_svg, sweep_csv_text
from censorloc.simulation import DEFAULT_DENSITIES, ScenarioConfig, run_sweep


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--radius", type=float, default=1.0)
    ap.add_argument("--densities", type=float, nargs="+", default=list(DEFAULT_DENSITIES))
    ap.add_argument("--trials", type=int, default=8000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int)
    ap.add_argument("--out-dir", type=Path, default=Path("results"))
    args = ap.parse_args()

    base = ScenarioConfig(radius=args.radius, trials=args.trials, master_seed=args.seed)
    records = run_sweep(base, "density", args.densities, workers=args.workers)
    text = sweep_csv_text(records, sweep_meta(base, "density", args.densities) + diagnostics_meta(records))

    args.out_dir.mkdir(parents=True, exist_ok=True)
    (args.out_dir / "density_sweep.csv").write_text(text)
    svg = render_svg(read_sweep_csv(text), title=f"MSE versus density, R = {args.radius:g} m")
    (args.out_dir / "density_sweep.svg").write_text(svg)
    for r in records:
        mse = "n/a" if r.mse is None else f"{r.mse:.4g}"
        print(f"density={r.value:<5g} {r.estimator.value:<12} mse={mse}")


if __name__ == "__main__":
    main()
