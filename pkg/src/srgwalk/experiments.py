"""Run configurations and the simulate / gamma-scan drivers behind the CLI."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Union

import numpy as np

from .dynamics import (
    Basis,
    EvolutionTrace,
    HamiltonianSpec,
    Laplacian,
    Peak,
    evolve,
    find_peak,
    initial_state,
)
from .graphs import Graph, build_family
from .srg import GraphFamily, ParameterError
from .theory import Case, critical_gamma

ENGINES = ("full", "reduced", "both")


@dataclass(frozen=True)
class RunConfig:
    """One simulation. ``gamma`` is "c1", "c2" or an explicit positive float.

    ``t_max`` defaults to pi sqrt(N), twice the expected search time, and
    ``engine`` to "reduced" (or "full" for the complete graph, which has no
    reduced form here).
    """

    family: GraphFamily
    gamma: Union[str, float] = "c2"
    marked: int = 0
    t_max: Optional[float] = None
    samples: int = 1000
    engine: Optional[str] = None
    laplacian: Laplacian = Laplacian.ADJACENCY
    step_factor: float = 1.0

    def __post_init__(self):
        if isinstance(self.gamma, str):
            if self.gamma not in ("c1", "c2"):
                raise ParameterError(f"gamma policy must be c1, c2 or a number, got {self.gamma!r}")
        elif not self.gamma > 0:
            raise ParameterError(f"gamma must be positive, got {self.gamma}")
        if self.samples < 10:
            raise ParameterError(f"need at least 10 samples, got {self.samples}")
        if self.t_max is not None and not self.t_max > 0:
            raise ParameterError(f"t_max must be positive, got {self.t_max}")
        if self.engine is not None and self.engine not in ENGINES:
            raise ParameterError(f"engine must be one of {ENGINES}, got {self.engine!r}")
        if self.family.is_complete and self.engine in ("reduced", "both"):
            raise ParameterError("the complete graph only supports --engine full")
        if not 0 <= self.marked < self.family.num_vertices:
            raise ParameterError(f"marked vertex {self.marked} outside [0, {self.family.num_vertices})")

    @property
    def N(self) -> int:
        return self.family.num_vertices

    @property
    def resolved_engine(self) -> str:
        if self.engine is not None:
            return self.engine
        return "full" if self.family.is_complete else "reduced"

    @property
    def resolved_t_max(self) -> float:
        return self.t_max if self.t_max is not None else math.pi * math.sqrt(self.N)

    def resolved_gamma(self) -> float:
        return resolve_gamma(self.family, self.gamma)


def resolve_gamma(family: GraphFamily, policy: Union[str, float]) -> float:
    """Critical coupling for a policy; the complete graph uses 1/N for both."""
    if not isinstance(policy, str):
        return float(policy)
    if family.is_complete:
        return 1 / family.n
    return critical_gamma(family.params(), Case.CASE1 if policy == "c1" else Case.CASE2)


@dataclass
class SimulationResult:
    trace: EvolutionTrace
    peak: Peak
    gamma: float
    reduced: Optional[EvolutionTrace] = None
    max_deviation: Optional[float] = None


def run_simulation(config: RunConfig, graph: Optional[Graph] = None) -> SimulationResult:
    """Evolve |s> under the configured Hamiltonian.

    With engine "both" the returned trace is the full-space one and
    ``reduced``/``max_deviation`` hold the reduced trace and the largest
    pointwise disagreement between them.
    """
    family = config.family
    engine = config.resolved_engine
    gamma = config.resolved_gamma()
    params = None if family.is_complete else family.params()
    if engine in ("full", "both") and graph is None:
        graph = build_family(family)
    spec = HamiltonianSpec(
        gamma,
        marked=config.marked,
        laplacian=config.laplacian,
        graph=graph if engine != "reduced" else None,
        params=params,
    )
    t_max = config.resolved_t_max
    dt = t_max / config.samples
    meta = {
        "family": family.label(),
        "gamma_policy": config.gamma if isinstance(config.gamma, str) else "explicit",
        "t_max": float(t_max),
        "samples": config.samples,
    }

    reduced = full = None
    if engine in ("reduced", "both"):
        reduced = evolve(spec, initial_state(Basis.WAB, params), t_max, dt)
        reduced.metadata.update(meta)
    if engine in ("full", "both"):
        full = evolve(
            spec,
            initial_state(Basis.FULL, graph.N),
            t_max,
            dt,
            step_factor=config.step_factor,
        )
        full.metadata.update(meta)
        full.metadata["step_factor"] = config.step_factor

    trace = full if full is not None else reduced
    result = SimulationResult(trace, find_peak(trace), gamma)
    if engine == "both":
        result.reduced = reduced
        result.max_deviation = full.max_deviation(reduced)
    return result


@dataclass(frozen=True)
class ScanRow:
    gamma: float
    t_peak: float
    p_peak: float


def gamma_grid(gamma_min: float, gamma_max: float, steps: int, spacing: str = "linear") -> np.ndarray:
    if not 0 < gamma_min < gamma_max:
        raise ParameterError(f"need 0 < gamma_min < gamma_max, got {gamma_min}, {gamma_max}")
    if steps < 3:
        raise ParameterError(f"need at least 3 steps, got {steps}")
    if spacing == "linear":
        return np.linspace(gamma_min, gamma_max, steps)
    if spacing == "log":
        return np.geomspace(gamma_min, gamma_max, steps)
    raise ParameterError(f"spacing must be linear or log, got {spacing!r}")


def _scan_point(args) -> ScanRow:
    config, graph, gamma = args
    res = run_simulation(replace(config, gamma=float(gamma)), graph)
    return ScanRow(float(gamma), res.peak.t, res.peak.p)


def scan_gamma(
    config: RunConfig,
    gamma_min: float,
    gamma_max: float,
    steps: int,
    spacing: str = "linear",
    workers: int = 1,
) -> list[ScanRow]:
    """One simulation per grid value of gamma, rows in ascending gamma order."""
    grid = gamma_grid(gamma_min, gamma_max, steps, spacing)
    graph = None
    if config.resolved_engine != "reduced":
        graph = build_family(config.family)
    jobs = [(config, graph, g) for g in grid]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_scan_point, jobs))
    else:
        rows = [_scan_point(job) for job in jobs]
    return rows


def format_scan_csv(rows: list[ScanRow]) -> str:
    lines = ["gamma,t_peak,p_peak"]
    lines += [f"{r.gamma:.15e},{r.t_peak:.15e},{r.p_peak:.15e}" for r in rows]
    return "\n".join(lines) + "\n"
