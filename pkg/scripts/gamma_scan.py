"""Peak success probability against gamma around the critical value.

Log-spaced grid over [gamma_c/4, 4 gamma_c] on a Paley graph by default.
"""

import argparse
from pathlib import Path

from srgwalk.experiments import RunConfig, format_scan_csv, scan_gamma
from srgwalk.srg import GraphFamily


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--q", type=int, default=101)
    ap.add_argument("--policy", choices=["c1", "c2"], default="c1")
    ap.add_argument("--steps", type=int, default=17)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--outdir", type=Path, default=Path("results"))
    args = ap.parse_args()

    cfg = RunConfig(GraphFamily("paley", q=args.q), gamma=args.policy, samples=2000)
    gc = cfg.resolved_gamma()
    rows = scan_gamma(cfg, gc / 4, 4 * gc, args.steps, spacing="log", workers=args.workers)
    args.outdir.mkdir(parents=True, exist_ok=True)
    (args.outdir / "gamma_scan.csv").write_text(format_scan_csv(rows))
    best = max(rows, key=lambda r: r.p_peak)
    print(f"gamma_c={gc:.6g} best gamma={best.gamma:.6g} p_peak={best.p_peak:.5f}")


if __name__ == "__main__":
    main()
