"""Peak time against sqrt(N) for Paley graphs at gamma_c1.

Fits t_peak = c * sqrt(N) over the largest sizes and writes the table to
results/runtime_scaling.csv.
"""

import argparse
import csv
import math
from pathlib import Path

import numpy as np

from srgwalk.experiments import RunConfig, run_simulation
from srgwalk.srg import GraphFamily


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, nargs="+", default=[13, 29, 53, 101, 173, 229, 401, 1009])
    ap.add_argument("--fit-last", type=int, default=3, help="number of largest sizes used in the fit")
    ap.add_argument("--engine", choices=["reduced", "full"], default="reduced")
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    args = ap.parse_args()

    rows = []
    for q in sorted(args.q):
        res = run_simulation(RunConfig(GraphFamily("paley", q=q), gamma="c1", samples=2000, engine=args.engine))
        rows.append((q, res.gamma, res.peak.t, res.peak.p, res.peak.t / math.sqrt(q)))

    roots = np.sqrt([r[0] for r in rows[-args.fit_last:]])
    ts = np.array([r[2] for r in rows[-args.fit_last:]])
    c = float(ts @ roots / (roots @ roots))

    args.outdir.mkdir(parents=True, exist_ok=True)
    with open(args.outdir / "runtime_scaling.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["N", "gamma", "t_peak", "p_peak", "t_peak_over_sqrtN"])
        w.writerows(rows)
    for row in rows:
        print("N=%d t_peak=%.4f p_peak=%.5f ratio=%.4f" % (row[0], row[2], row[3], row[4]))
    print(f"fit c = {c:.4f} (pi/2 = {math.pi / 2:.4f})")


if __name__ == "__main__":
    main()
