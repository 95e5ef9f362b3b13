"""Search Hamiltonian and Schrödinger evolution, full and reduced.

The full engine works on the N vertex amplitudes with fixed-step RK4 and a
neighbour-list matrix-vector product. The reduced engine works in the
three-dimensional span of

    |w>  the marked vertex,
    |a>  the uniform superposition of its k neighbours,
    |b>  the uniform superposition of the N - k - 1 other vertices,

(or the rotated basis |w>, |r>, |e3>) and evolves exactly through a Jacobi
eigendecomposition of the 3x3 Hamiltonian. For a strongly regular graph the
two engines must agree; that agreement is the main cross-check.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, TextIO, Union

import numpy as np

from .graphs import Graph, verify_srg
from .srg import SrgParams, require_feasible

FULL_NORM_TOL = 1e-6
REDUCED_NORM_TOL = 1e-9
# RK4 step satisfies h * (2 gamma k + 1) <= STEP_BOUND. 0.1 is the loosest
# allowed value; at 0.1 step halving still moves small-graph traces by ~1e-8.
STEP_BOUND = 0.05


class Basis(enum.Enum):
    FULL = "full"
    WAB = "wab"
    WRE3 = "wre3"


class Laplacian(enum.Enum):
    ADJACENCY = "adjacency"
    FULL = "full"


class BasisMismatchError(ValueError):
    pass


class IntegratorAccuracyError(ArithmeticError):
    pass


@dataclass(frozen=True)
class HamiltonianSpec:
    """H = -gamma * L - |w><w| with L = A (default) or L = A - kI.

    ``graph`` is needed by the full engine, ``params`` by the reduced one;
    if only the graph is given the parameters are recovered with
    ``verify_srg``.
    """

    gamma: float
    marked: int = 0
    laplacian: Laplacian = Laplacian.ADJACENCY
    graph: Optional[Graph] = None
    params: Optional[SrgParams] = None

    def __post_init__(self):
        if not self.gamma > 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if self.graph is None and self.params is None:
            raise ValueError("need a graph or SRG parameters")
        n = self.graph.N if self.graph is not None else self.params.N
        if not 0 <= self.marked < n:
            raise ValueError(f"marked vertex {self.marked} outside [0, {n})")

    @property
    def degree(self) -> int:
        return self.graph.k if self.graph is not None else self.params.k

    def srg_params(self) -> SrgParams:
        if self.params is not None:
            return self.params
        return verify_srg(self.graph)


@dataclass
class QuantumState:
    basis: Basis
    amplitudes: np.ndarray

    def __post_init__(self):
        self.amplitudes = np.asarray(self.amplitudes, dtype=complex)
        if self.basis is not Basis.FULL and self.amplitudes.shape != (3,):
            raise ValueError(f"reduced states have 3 amplitudes, got {self.amplitudes.shape}")

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def initial_state(basis: Basis, params: Union[SrgParams, int]) -> QuantumState:
    """Uniform superposition |s> over all vertices, written in ``basis``.

    ``params`` may be a plain vertex count for the full basis (useful for
    the complete graph).
    """
    if basis is Basis.FULL:
        n = params if isinstance(params, int) else params.N
        return QuantumState(basis, np.full(n, 1 / math.sqrt(n), dtype=complex))
    N, k = params.N, params.k
    if basis is Basis.WAB:
        amps = np.array([1.0, math.sqrt(k), math.sqrt(N - k - 1)]) / math.sqrt(N)
    else:
        amps = np.array([1.0, math.sqrt(N - 1), 0.0]) / math.sqrt(N)
    return QuantumState(basis, amps)


def lift_basis(graph: Graph, marked: int) -> np.ndarray:
    """(N, 3) isometry whose columns are |w>, |a>, |b> as vertex vectors.

    The |b> column is zero when every vertex is adjacent to the marked one.
    """
    q = np.zeros((graph.N, 3))
    q[marked, 0] = 1.0
    nbr = graph.adjacency[marked]
    rest = ~nbr
    rest[marked] = False
    q[nbr, 1] = 1 / math.sqrt(nbr.sum())
    if rest.any():
        q[rest, 2] = 1 / math.sqrt(rest.sum())
    return q


# -- full space ---------------------------------------------------------------

def _hamiltonian_action(nbrs: np.ndarray, gamma: float, marked: int, diag: float, x: np.ndarray) -> np.ndarray:
    # diag collects gamma*k (full Laplacian) and any energy shift.
    y = -gamma * x[nbrs].sum(axis=1)
    if diag:
        y += diag * x
    y[marked] -= x[marked]
    return y


def _diagonal_term(spec: HamiltonianSpec) -> float:
    return spec.gamma * spec.degree if spec.laplacian is Laplacian.FULL else 0.0


def apply_hamiltonian(spec: HamiltonianSpec, state: Union[QuantumState, np.ndarray]) -> np.ndarray:
    """H applied to a full-space vector, at O(N k) cost."""
    if isinstance(state, QuantumState):
        if state.basis is not Basis.FULL:
            raise BasisMismatchError(f"apply_hamiltonian needs a full-space state, got {state.basis}")
        state = state.amplitudes
    if spec.graph is None:
        raise ValueError("full-space action needs spec.graph")
    x = np.asarray(state)
    if x.shape != (spec.graph.N,):
        raise BasisMismatchError(f"vector of shape {x.shape} for N={spec.graph.N}")
    return _hamiltonian_action(spec.graph.neighbors, spec.gamma, spec.marked, _diagonal_term(spec), x)


def subspace_leakage(spec: HamiltonianSpec) -> float:
    """Largest norm of H|v> outside span{|w>,|a>,|b>} over v in {w, a, b}."""
    q = lift_basis(spec.graph, spec.marked)
    worst = 0.0
    for j in range(3):
        if not q[:, j].any():
            continue
        hv = apply_hamiltonian(spec, q[:, j].astype(complex))
        resid = hv - q @ (q.T @ hv)
        worst = max(worst, float(np.linalg.norm(resid)))
    return worst


# -- reduced space ------------------------------------------------------------

@dataclass(frozen=True)
class ReducedHamiltonian3:
    matrix: np.ndarray
    basis: Basis


def reduced_hamiltonian_wab(
    params: SrgParams, gamma: float, laplacian: Laplacian = Laplacian.ADJACENCY
) -> ReducedHamiltonian3:
    """H restricted to span{|w>, |a>, |b>}."""
    require_feasible(params)
    N, k, lam, mu = params.astuple()
    cross = math.sqrt(mu) * math.sqrt(k - lam - 1)
    a = np.array(
        [
            [0.0, math.sqrt(k), 0.0],
            [math.sqrt(k), lam, cross],
            [0.0, cross, k - mu],
        ]
    )
    h = -gamma * a
    h[0, 0] -= 1.0
    if laplacian is Laplacian.FULL:
        h += gamma * k * np.eye(3)
    return ReducedHamiltonian3(h, Basis.WAB)


def wre3_transform(params: SrgParams) -> np.ndarray:
    """Orthogonal T with columns |w>, |r>, |e3> written in the WAB basis."""
    N, k = params.N, params.k
    x = math.sqrt(k / (N - 1))
    y = math.sqrt((N - k - 1) / (N - 1))
    return np.array([[1.0, 0.0, 0.0], [0.0, x, y], [0.0, y, -x]])


def transform_wre3(h: ReducedHamiltonian3, params: SrgParams) -> ReducedHamiltonian3:
    if h.basis is not Basis.WAB:
        raise BasisMismatchError(f"expected a WAB Hamiltonian, got {h.basis}")
    t = wre3_transform(params)
    return ReducedHamiltonian3(t.T @ h.matrix @ t, Basis.WRE3)


def reduced_hamiltonian(spec: HamiltonianSpec, basis: Basis) -> ReducedHamiltonian3:
    params = spec.srg_params()
    h = reduced_hamiltonian_wab(params, spec.gamma, spec.laplacian)
    if basis is Basis.WRE3:
        h = transform_wre3(h, params)
    return h


def jacobi_eigh(a: np.ndarray, tol: float = 1e-15, max_sweeps: int = 100) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a small real symmetric matrix by cyclic Jacobi.

    Eigenvalues come back ascending. Each eigenvector is signed so its
    largest-magnitude component is positive (first such index on ties).
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if a.shape != (n, n) or not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(np.abs(a).max(), 1.0)):
        raise ValueError("jacobi_eigh needs a square symmetric matrix")
    a = 0.5 * (a + a.T)
    v = np.eye(n)
    scale = np.linalg.norm(a)
    for _ in range(max_sweeps):
        off = np.linalg.norm(a - np.diag(np.diag(a)))
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(a[p, q]) < 1e-30 * abs(diff):
                    t = a[p, q] / diff
                else:
                    tau = diff / (2 * a[p, q])
                    t = math.copysign(1.0, tau) / (abs(tau) + math.hypot(1.0, tau))
                c = 1 / math.hypot(1.0, t)
                s = t * c
                rot = np.eye(n)
                rot[p, p] = rot[q, q] = c
                rot[p, q] = s
                rot[q, p] = -s
                a = rot.T @ a @ rot
                a[p, q] = a[q, p] = 0.0
                v = v @ rot
    else:
        raise RuntimeError("Jacobi iteration did not converge")
    evals = np.diag(a).copy()
    order = np.argsort(evals, kind="stable")
    evals, v = evals[order], v[:, order]
    lead = np.abs(v).argmax(axis=0)
    v = v * np.sign(v[lead, np.arange(n)])
    return evals, v


# -- traces -------------------------------------------------------------------

@dataclass
class EvolutionTrace:
    times: np.ndarray
    p_w: np.ndarray
    p_a: np.ndarray
    p_b: np.ndarray
    norm_drift: float = 0.0
    metadata: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.times)

    def total(self) -> np.ndarray:
        return self.p_w + self.p_a + self.p_b

    def max_deviation(self, other: "EvolutionTrace") -> float:
        """Largest pointwise gap over p_w, p_a and p_b on a shared time grid."""
        if len(self) != len(other) or not np.allclose(self.times, other.times, rtol=1e-12, atol=1e-12):
            raise ValueError("traces are sampled on different grids")
        return float(
            max(np.abs(getattr(self, c) - getattr(other, c)).max() for c in ("p_w", "p_a", "p_b"))
        )

    def to_csv(self, dest: Union[str, Path, TextIO, None] = None) -> str:
        """CSV with a "#"-prefixed metadata preamble and columns t,p_w,p_a,p_b."""
        buf = io.StringIO()
        for key, value in self.metadata.items():
            buf.write(f"# {key}={_fmt_meta(value)}\n")
        buf.write(f"# norm_drift={self.norm_drift:.6e}\n")
        buf.write("t,p_w,p_a,p_b\n")
        for row in zip(self.times, self.p_w, self.p_a, self.p_b):
            buf.write(",".join(f"{x:.15e}" for x in row) + "\n")
        text = buf.getvalue()
        _write(dest, text)
        return text

    def to_json(self, dest: Union[str, Path, TextIO, None] = None) -> str:
        doc = {
            "metadata": {**self.metadata, "norm_drift": self.norm_drift},
            "t": self.times.tolist(),
            "p_w": self.p_w.tolist(),
            "p_a": self.p_a.tolist(),
            "p_b": self.p_b.tolist(),
        }
        text = json.dumps(doc, indent=1, default=_fmt_meta) + "\n"
        _write(dest, text)
        return text

    @classmethod
    def read_csv(cls, src: Union[str, Path, TextIO]) -> "EvolutionTrace":
        text = Path(src).read_text() if isinstance(src, (str, Path)) else src.read()
        meta, rows = {}, []
        for line in text.splitlines():
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                meta[key] = value
            else:
                rows.append(line)
        data = list(csv.reader(rows))
        if data[0] != ["t", "p_w", "p_a", "p_b"]:
            raise ValueError(f"unexpected header {data[0]}")
        arr = np.array(data[1:], dtype=float)
        drift = float(meta.pop("norm_drift", 0.0))
        return cls(arr[:, 0], arr[:, 1], arr[:, 2], arr[:, 3], drift, meta)


def _fmt_meta(value):
    if isinstance(value, enum.Enum):
        return value.value
    if isinstance(value, SrgParams):
        return " ".join(map(str, value.astuple()))
    if isinstance(value, float):
        return repr(value)
    return value if isinstance(value, (str, int)) else str(value)


def _write(dest, text: str) -> None:
    if dest is None:
        return
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text)
    else:
        dest.write(text)


def sample_times(t_max: float, dt_sample: Optional[float] = None) -> np.ndarray:
    """Uniform grid 0..t_max; dt_sample defaults to t_max/1000 and is rounded to divide t_max."""
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}")
    dt = t_max / 1000 if dt_sample is None else dt_sample
    if not dt > 0:
        raise ValueError(f"dt_sample must be positive, got {dt_sample}")
    n = max(1, round(t_max / dt))
    return np.linspace(0.0, t_max, n + 1)


def evolve(
    spec: HamiltonianSpec,
    state0: QuantumState,
    t_max: float,
    dt_sample: Optional[float] = None,
    *,
    step_factor: float = 1.0,
) -> EvolutionTrace:
    """Integrate i d|psi>/dt = H|psi> and record p_w, p_a, p_b on a uniform grid.

    The engine follows the basis of ``state0``: full-space states go through
    RK4, reduced states are propagated exactly. ``step_factor`` scales the
    RK4 step bound (0.5 halves the internal step).
    """
    times = sample_times(t_max, dt_sample)
    if abs(state0.norm - 1) > REDUCED_NORM_TOL:
        raise ValueError(f"initial state not normalized (norm {state0.norm!r})")
    if state0.basis is Basis.FULL:
        return _evolve_full(spec, state0.amplitudes, times, step_factor)
    return _evolve_reduced(spec, state0, times)


def _base_metadata(spec: HamiltonianSpec, engine: str) -> dict:
    meta = {
        "engine": engine,
        "gamma": float(spec.gamma),
        "marked": spec.marked,
        "laplacian": spec.laplacian,
    }
    if spec.graph is not None and spec.graph.name:
        meta["graph"] = spec.graph.name
    if spec.params is not None:
        meta["params"] = spec.params
    return meta


def _evolve_full(spec: HamiltonianSpec, psi0: np.ndarray, times: np.ndarray, step_factor: float) -> EvolutionTrace:
    g = spec.graph
    if g is None:
        raise ValueError("full-space evolution needs spec.graph")
    if psi0.shape != (g.N,):
        raise BasisMismatchError(f"state of length {psi0.shape[0]} for N={g.N}")
    nbrs, k, gamma, w = g.neighbors, g.k, spec.gamma, spec.marked
    basis = lift_basis(g, w)
    a_mask, b_mask = basis[:, 1] > 0, basis[:, 2] > 0

    psi = psi0.astype(complex).copy()
    diag = _diagonal_term(spec)
    # Shifting the energy zero to <psi0|H|psi0> only changes a global phase,
    # but keeps the RK4 phase error of the dominant eigenmodes small.
    e_ref = float(np.vdot(psi, _hamiltonian_action(nbrs, gamma, w, diag, psi)).real)
    diag -= e_ref

    def deriv(x):
        return -1j * _hamiltonian_action(nbrs, gamma, w, diag, x)

    h_max = step_factor * STEP_BOUND / (2 * gamma * k + 1)
    n = len(times)
    p = np.empty((3, n))
    drift = 0.0
    for i in range(n):
        if i:
            dt = times[i] - times[i - 1]
            m = max(1, math.ceil(dt / h_max - 1e-12))
            h = dt / m
            for _ in range(m):
                k1 = deriv(psi)
                k2 = deriv(psi + 0.5 * h * k1)
                k3 = deriv(psi + 0.5 * h * k2)
                k4 = deriv(psi + h * k3)
                psi = psi + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)
            drift = max(drift, abs(float(np.linalg.norm(psi)) - 1))
            if drift > FULL_NORM_TOL:
                raise IntegratorAccuracyError(
                    f"norm drift {drift:.3e} exceeds {FULL_NORM_TOL:g} at t={times[i]:.6g}"
                )
        p[0, i] = abs(psi[w]) ** 2
        p[1, i] = abs(psi[a_mask].sum()) ** 2 / max(a_mask.sum(), 1)
        p[2, i] = abs(psi[b_mask].sum()) ** 2 / b_mask.sum() if b_mask.any() else 0.0

    meta = _base_metadata(spec, "full")
    meta.update(h_max=h_max, energy_ref=e_ref)
    return EvolutionTrace(times, p[0], p[1], p[2], drift, meta)


def _evolve_reduced(spec: HamiltonianSpec, state0: QuantumState, times: np.ndarray) -> EvolutionTrace:
    h = reduced_hamiltonian(spec, state0.basis)
    evals, vecs = jacobi_eigh(h.matrix)
    coeffs = vecs.T @ state0.amplitudes
    psi = vecs @ (np.exp(-1j * np.outer(evals, times)) * coeffs[:, None])
    if state0.basis is Basis.WRE3:
        psi = wre3_transform(spec.srg_params()) @ psi
    probs = np.abs(psi) ** 2
    drift = float(np.abs(np.sqrt(probs.sum(axis=0)) - 1).max())
    if drift > REDUCED_NORM_TOL:
        raise IntegratorAccuracyError(f"reduced norm drift {drift:.3e} exceeds {REDUCED_NORM_TOL:g}")
    meta = _base_metadata(spec, f"reduced-{state0.basis.value}")
    return EvolutionTrace(times, probs[0], probs[1], probs[2], drift, meta)


# -- peaks --------------------------------------------------------------------

@dataclass(frozen=True)
class Peak:
    t: float
    p: float
    index: int
    at_boundary: bool = False


def find_peak(trace: EvolutionTrace) -> Peak:
    """Maximum of p_w, refined by a parabola through the neighbouring samples.

    The earliest sample wins ties. A maximum on the first or last sample is
    returned unrefined with ``at_boundary`` set.
    """
    p = np.asarray(trace.p_w)
    t = np.asarray(trace.times)
    if len(p) < 3:
        raise ValueError("need at least 3 samples to locate a peak")
    i = int(np.argmax(p))
    if i == 0 or i == len(p) - 1:
        return Peak(float(t[i]), float(p[i]), i, at_boundary=True)
    y0, y1, y2 = p[i - 1], p[i], p[i + 1]
    curv = y0 - 2 * y1 + y2
    if curv >= 0:
        return Peak(float(t[i]), float(y1), i)
    delta = 0.5 * (y0 - y2) / curv
    step = 0.5 * (t[i + 1] - t[i - 1])
    return Peak(float(t[i] + delta * step), float(y1 - 0.25 * (y0 - y2) * delta), i)
