"""Command-line interface: ``srgwalk {gen,simulate,scan-gamma,predict}``.

Flagless reproductions of the two reference runs:

    srgwalk simulate --family paley --q 101 --gamma c1 --engine both
    srgwalk simulate --family latin --t 50 --d 3

Errors are reported as a single ``srgwalk: error: ...`` line on stderr;
usage errors exit with status 2, failures during a run with status 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .dynamics import IntegratorAccuracyError, Laplacian
from .experiments import RunConfig, format_scan_csv, run_simulation, scan_gamma
from .graphs import NotRegularError, NotStronglyRegularError, build_family, format_edge_list, verify_srg
from .srg import GraphFamily, ParameterError
from .theory import Case, complete_graph_reference, predict

PROG = "srgwalk"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _gamma_arg(text: str):
    if text in ("c1", "c2"):
        return text
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected c1, c2 or a positive number, got {text!r}")
    if not value > 0:
        raise argparse.ArgumentTypeError(f"gamma must be positive, got {text}")
    return value


def _add_family(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("graph family")
    g.add_argument("--family", required=True, choices=["complete", "paley", "latin", "triangular"])
    g.add_argument("--n", type=int, help="vertex count (complete)")
    g.add_argument("--q", type=int, help="field order, a prime power = 1 mod 4 (paley)")
    g.add_argument("--t", type=int, help="side length (latin)")
    g.add_argument("--d", type=int, help="2 = rook's graph, 3 = with symbols (latin)")
    g.add_argument("--m", type=int, help="ground set size (triangular)")


def _add_run(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gamma", type=_gamma_arg, default="c2", help="c1, c2 or a value (default c2)")
    p.add_argument("--marked", type=int, default=0)
    p.add_argument("--tmax", type=float, default=None, help="default pi*sqrt(N)")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--engine", choices=["full", "reduced", "both"], default=None,
                   help="default reduced (full for the complete graph)")
    p.add_argument("--laplacian", choices=["adjacency", "full"], default="adjacency")
    p.add_argument("--out", type=Path, default=None)
    p.add_argument("--format", choices=["csv", "json"], default="csv")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog=PROG, description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("gen", help="build a graph, verify it, write its edge list")
    _add_family(gen)
    gen.add_argument("--out", type=Path, default=None, help="edge-list file (default: stdout)")

    sim = sub.add_parser("simulate", help="evolve the search and report the success peak")
    _add_family(sim)
    _add_run(sim)

    scan = sub.add_parser("scan-gamma", help="peak success probability over a gamma grid")
    _add_family(scan)
    _add_run(scan)
    scan.add_argument("--gamma-min", type=float, required=True)
    scan.add_argument("--gamma-max", type=float, required=True)
    scan.add_argument("--steps", type=int, required=True)
    scan.add_argument("--spacing", choices=["linear", "log"], default="linear")
    scan.add_argument("--workers", type=int, default=1)

    pred = sub.add_parser("predict", help="perturbation-theory predictions")
    _add_family(pred)
    pred.add_argument("--case", type=int, choices=[1, 2], default=2)
    pred.add_argument("--out", type=Path, default=None)
    return parser


def _family(args) -> GraphFamily:
    return GraphFamily(args.family, n=args.n, q=args.q, t=args.t, d=args.d, m=args.m)


def _config(args) -> RunConfig:
    return RunConfig(
        family=_family(args),
        gamma=args.gamma,
        marked=args.marked,
        t_max=args.tmax,
        samples=args.samples,
        engine=args.engine,
        laplacian=Laplacian(args.laplacian),
    )


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_gen(args) -> int:
    family = _family(args)
    graph = build_family(family)
    params = None
    if not family.is_complete:
        params = verify_srg(graph)
        expected = family.params()
        if params != expected:
            raise RuntimeError(f"built graph has parameters {params}, expected {expected}")
    text = format_edge_list(graph, params)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text)
        print(text.splitlines()[0])
    return 0


def cmd_simulate(args) -> int:
    config = _config(args)
    result = run_simulation(config)
    if args.out is not None:
        if args.format == "csv":
            result.trace.to_csv(args.out)
        else:
            result.trace.to_json(args.out)
    print(f"t_peak={result.peak.t:.12g} p_peak={result.peak.p:.12g} gamma={result.gamma:.12g}")
    if result.max_deviation is not None:
        print(f"max_deviation={result.max_deviation:.6e}")
    return 0


def cmd_scan_gamma(args) -> int:
    config = _config(args)
    rows = scan_gamma(config, args.gamma_min, args.gamma_max, args.steps, args.spacing, args.workers)
    if args.format == "csv":
        text = format_scan_csv(rows)
    else:
        doc = {
            "metadata": {"family": config.family.label(), "spacing": args.spacing},
            "gamma": [r.gamma for r in rows],
            "t_peak": [r.t_peak for r in rows],
            "p_peak": [r.p_peak for r in rows],
        }
        text = json.dumps(doc, indent=1) + "\n"
    _emit(text, args.out)
    return 0


def cmd_predict(args) -> int:
    family = _family(args)
    if family.is_complete:
        (e_low, e_high), t_star = complete_graph_reference(family.n)
        record = {"N": family.n, "gamma_c": 1 / family.n, "E_minus": e_low, "E_plus": e_high, "t_star": t_star}
        text = json.dumps(record, indent=1) + "\n"
    else:
        text = predict(family.params(), Case(args.case)).to_json()
    _emit(text, args.out)
    return 0


COMMANDS = {
    "gen": cmd_gen,
    "simulate": cmd_simulate,
    "scan-gamma": cmd_scan_gamma,
    "predict": cmd_predict,
}


def _fail(kind: str, exc: BaseException, status: int) -> int:
    message = " ".join(str(exc).split())
    print(f"{PROG}: error: {kind}: {message}", file=sys.stderr)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail("usage", exc, 2)
    try:
        return COMMANDS[args.command](args)
    except ParameterError as exc:
        return _fail("usage", exc, 2)
    except IntegratorAccuracyError as exc:
        return _fail("integrator", exc, 1)
    except (NotRegularError, NotStronglyRegularError) as exc:
        return _fail("graph", exc, 1)
    except (OSError, ValueError, RuntimeError) as exc:
        return _fail(type(exc).__name__, exc, 1)


if __name__ == "__main__":
    sys.exit(main())
