"""Spectral toolbox: Hamiltonian I/O, ground-space solving, overlap boosting."""

from .filters import BoostResult, FilterSpec, boost_filter, filter_weights
from .io import dump_state, load_hamiltonian, load_state
from .model import Hamiltonian, StateVector, basis_state, max_dim
from .solve import (
    DEFAULT_DEGENERACY_TOL,
    DENSE_DIM_LIMIT,
    SpectralResult,
    ground_state,
    overlap,
    reference_overlap,
)

__all__ = [
    "BoostResult",
    "FilterSpec",
    "boost_filter",
    "filter_weights",
    "dump_state",
    "load_hamiltonian",
    "load_state",
    "Hamiltonian",
    "StateVector",
    "basis_state",
    "max_dim",
    "DEFAULT_DEGENERACY_TOL",
    "DENSE_DIM_LIMIT",
    "SpectralResult",
    "ground_state",
    "overlap",
    "reference_overlap",
]
