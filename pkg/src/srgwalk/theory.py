"""Perturbative predictions for search on strongly regular graphs.

Two regimes are distinguished. When k grows like N, the marked state |w>
and the near-uniform state |r> become degenerate at gamma = 1/k. When k
grows more slowly, |r> has to be matched against a mixture |c> of |w> and
|e3> instead, which moves the critical coupling to

    1/k + 1/((N - 1) mu)

and gives a success probability

    (C mu N / k^1.5)^2 * sin^2(C mu sqrt(N) t / k^1.5)

with C the normalisation of |c>. Everything here is closed form; the
measured counterparts come from ``srgwalk.dynamics``.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .srg import SrgParams, require_feasible


class Case(enum.IntEnum):
    CASE1 = 1  # k = Theta(N)
    CASE2 = 2  # k = o(N)


def critical_gamma(params: SrgParams, case: Case) -> float:
    require_feasible(params)
    N, k, _, mu = params.astuple()
    if Case(case) is Case.CASE1:
        return 1 / k
    return 1 / k + 1 / ((N - 1) * mu)


def k_lambda_mu(params: SrgParams) -> int:
    return params.k - params.lam + params.mu


def klm_identity_holds(params: SrgParams) -> bool:
    """k - lambda + mu == (N - k - 1) mu / k + mu + 1, in exact rationals."""
    N, k, lam, mu = params.astuple()
    return Fraction(k - lam + mu) == Fraction((N - k - 1) * mu, k) + mu + 1


def case2_vector_c(params: SrgParams) -> tuple[float, np.ndarray]:
    """Normalisation C and the unit vector |c> in the (w, r, e3) basis."""
    require_feasible(params)
    k = params.k
    klm = k_lambda_mu(params)
    c_exact = (1 + klm * klm / k) ** -0.5
    vec = c_exact * np.array([klm / math.sqrt(k), 0.0, 1.0])
    return c_exact, vec


def c_approx(params: SrgParams) -> float:
    """Large-N form k^1.5 / (mu N), valid while k <= (mu N)^(2/3)."""
    return params.k**1.5 / (params.mu * params.N)


def hamiltonian_wre3(params: SrgParams, gamma: float) -> np.ndarray:
    """Closed-form search Hamiltonian in the (w, r, e3) basis.

    Written out entry by entry so it can be compared against the numerical
    rotation of the (w, a, b) matrix.
    """
    N, k, lam, mu = params.astuple()
    x = math.sqrt(k) * math.sqrt(N - k - 1)
    m = np.array(
        [
            [1 / gamma, k / math.sqrt(N - 1), x / math.sqrt(N - 1)],
            [k / math.sqrt(N - 1), k * (N - 2) / (N - 1), -x / (N - 1)],
            [x / math.sqrt(N - 1), -x / (N - 1), ((lam - mu) * (N - 1) + k) / (N - 1)],
        ]
    )
    return -gamma * m


def case1_leading_order(params: SrgParams, gamma: float) -> tuple[np.ndarray, np.ndarray]:
    """(H0, H1) for k = Theta(N): diagonal part plus the w-row couplings."""
    N, k, lam, mu = params.astuple()
    h0 = -gamma * np.diag([1 / gamma, k, lam - mu])
    h1 = np.zeros((3, 3))
    h1[0, 1] = h1[1, 0] = k / math.sqrt(N)
    h1[0, 2] = h1[2, 0] = math.sqrt(k)
    return h0, -gamma * h1


def case2_leading_order(params: SrgParams, gamma: float) -> tuple[np.ndarray, np.ndarray]:
    """(H0, H1) for k = o(N): H0 keeps the w-e3 coupling, H1 the w-r one."""
    N, k, lam, mu = params.astuple()
    h0 = -gamma * np.array(
        [
            [1 / gamma, 0.0, math.sqrt(k)],
            [0.0, k, 0.0],
            [math.sqrt(k), 0.0, lam - mu],
        ]
    )
    h1 = np.zeros((3, 3))
    h1[0, 1] = h1[1, 0] = 1.0
    return h0, (-gamma * k / math.sqrt(N)) * h1


def case1_pair_hamiltonian(params: SrgParams, gamma: float) -> np.ndarray:
    """Degenerate 2x2 block on {|w>, |r>} for k = Theta(N).

    The coupling is taken from the rotated Hamiltonian, -gamma k / sqrt(N - 1),
    so at gamma = 1/k the splitting is 2/sqrt(N - 1), about 2/sqrt(N).
    """
    N, k = params.N, params.k
    off = -gamma * k / math.sqrt(N - 1)
    return np.array([[-1.0, off], [off, -gamma * k]])


def case2_pair_hamiltonian(params: SrgParams, gamma: float) -> np.ndarray:
    """Degenerate 2x2 block on {|r>, |c>} for k = o(N)."""
    N, k, _, mu = params.astuple()
    c, _ = case2_vector_c(params)
    off = -gamma * c * math.sqrt(N / k) * mu
    return np.array([[-gamma * k, off], [off, -gamma * k]])


@dataclass(frozen=True)
class PredictionReport:
    """Theory-side numbers for one parameter set.

    The predicted success curve is
    ``predicted_peak_probability * sin(frequency * t)**2``;
    ``t_star`` is where that curve first peaks and ``t_star_asymptotic`` is
    pi sqrt(N) / 2.
    """

    N: int
    k: int
    lam: int
    mu: int
    case: int
    gamma: float
    gamma_c1: float
    gamma_c2: float
    k_lm: int
    C_exact: float
    C_approx: float
    frequency: float
    predicted_peak_probability: float
    t_star: float
    t_star_asymptotic: float
    energy_gap: float

    def curve(self, t):
        return self.predicted_peak_probability * np.sin(self.frequency * np.asarray(t)) ** 2

    def to_record(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_record(), indent=1) + "\n"


def predict(params: SrgParams, case: Case = Case.CASE2) -> PredictionReport:
    require_feasible(params)
    case = Case(case)
    N, k, lam, mu = params.astuple()
    g1 = critical_gamma(params, Case.CASE1)
    g2 = critical_gamma(params, Case.CASE2)
    c_exact, _ = case2_vector_c(params)
    if case is Case.CASE1:
        gamma = g1
        freq = gamma * k / math.sqrt(N - 1)
        peak = 1.0
    else:
        gamma = g2
        freq = c_exact * mu * math.sqrt(N) / k**1.5
        peak = min(max((c_exact * mu * N / k**1.5) ** 2, 0.0), 1.0)
    return PredictionReport(
        N=N,
        k=k,
        lam=lam,
        mu=mu,
        case=int(case),
        gamma=gamma,
        gamma_c1=g1,
        gamma_c2=g2,
        k_lm=k_lambda_mu(params),
        C_exact=c_exact,
        C_approx=c_approx(params),
        frequency=freq,
        predicted_peak_probability=peak,
        t_star=math.pi / (2 * freq),
        t_star_asymptotic=math.pi * math.sqrt(N) / 2,
        energy_gap=2 * freq,
    )


def complete_graph_hamiltonian_2d(N: int, gamma: float) -> np.ndarray:
    """-gamma N |s><s| - |w><w| on {|w>, |r>}.

    This is the complete-graph search Hamiltonian -gamma L - |w><w| with the
    energy zero moved by gamma N; with L = A instead it differs by gamma I.
    """
    r = math.sqrt(N - 1)
    return -gamma * np.array([[1.0, r], [r, N - 1.0]]) - np.diag([1.0, 0.0])


def complete_graph_reference(N: int) -> tuple[tuple[float, float], float]:
    """Eigenvalues -1 -/+ 1/sqrt(N) (ascending) at gamma = 1/N, and t* = pi sqrt(N)/2.

    These are the eigenvalues of -|s><s| - |w><w|, i.e. of
    ``complete_graph_hamiltonian_2d(N, 1/N)``.
    """
    if N < 2:
        raise ValueError(f"need N >= 2, got {N}")
    gap = 1 / math.sqrt(N)
    return (-1 - gap, -1 + gap), math.pi / (2 * gap)
