"""Show that the center-of-mass estimate of one fixed observation moves with R.

Prints the CM at each radius in ``--radii`` together with the grid-oracle
centroid, so the shift is confirmed by two independent computations.
"""

import argparse
import math

from censorloc.estimators import estimate_cm
from censorloc.oracle import grid_for, oracle_area_centroid
from censorloc.simulation import DEFAULT_COUNTEREXAMPLE
from censorloc.stats import Observation


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--radii", type=float, nargs="+", default=[1.05, 1.2, 1.4, 1.6, 2.0])
    ap.add_argument("--h", type=float, default=0.002, help="grid step of the oracle")
    args = ap.parse_args()

    obs = Observation(DEFAULT_COUNTEREXAMPLE)
    ref = None
    print("R,cm_x,cm_y,grid_x,grid_y,shift_from_first")
    for R in args.radii:
        cm = estimate_cm(obs, R)
        g = oracle_area_centroid(obs.sensors, R, grid_for(obs.sensors, R, args.h)).centroid
        ref = ref or cm
        print(f"{R:g},{cm.x:.6f},{cm.y:.6f},{g.x:.6f},{g.y:.6f},{math.hypot(cm.x - ref.x, cm.y - ref.y):.6f}")


if __name__ == "__main__":
    main()
