"""Continuous-time quantum-walk search on strongly regular graphs."""

from .srg import (
    GraphFamily,
    SrgParams,
    check_feasibility,
    latin_params,
    paley_params,
    triangular_params,
)
from .gf import GaloisField, FieldElement
from .graphs import (
    Graph,
    build_complete,
    build_family,
    build_latin,
    build_paley,
    build_triangular,
    verify_srg,
)
from .dynamics import (
    Basis,
    EvolutionTrace,
    HamiltonianSpec,
    Laplacian,
    QuantumState,
    apply_hamiltonian,
    evolve,
    find_peak,
    initial_state,
    reduced_hamiltonian_wab,
    transform_wre3,
)
from .theory import Case, PredictionReport, critical_gamma, predict

__version__ = "0.1.0"
