"""Ground-space extraction and overlap measurements.

Two solver routes: direct dense diagonalization up to ``DENSE_DIM_LIMIT``,
and a matrix-vector-product Krylov solver (ARPACK via scipy) above it.
The dense route doubles as the accuracy oracle for the iterative one in
the test suite, so both must stay independently correct.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse.linalg

from ..errors import ConvergenceError, DomainError, ResourceLimitError
from .model import Hamiltonian, StateVector, basis_state

#: Largest dimension solved by full dense diagonalization under method="auto".
DENSE_DIM_LIMIT = 1024

#: Eigenvalues within this of the lowest count as part of the ground space.
DEFAULT_DEGENERACY_TOL = 1e-8

# The iterative route needs room for restarts; below this it is slower and
# flakier than just diagonalizing, so it quietly delegates.
_ITERATIVE_MIN_DIM = 8

# Largest ground-space multiplicity the iterative route will chase before
# giving up (each doubling of the Krylov block restarts the solve).
_MULTIPLICITY_CAP = 128


@dataclass(frozen=True)
class SpectralResult:
    """Ground energy, gap above the ground space, and an orthonormal basis of it.

    ``ground_subspace`` has one column per (near-)degenerate ground vector.
    ``gap`` is 0.0 when every computed eigenvalue sits inside the
    degeneracy window (fully degenerate spectrum).
    """

    e0: float
    gap: float
    ground_subspace: np.ndarray = field(repr=False)
    degeneracy_tol: float = DEFAULT_DEGENERACY_TOL

    @property
    def degeneracy(self) -> int:
        return self.ground_subspace.shape[1]


def ground_state(
    hamiltonian: Hamiltonian,
    degeneracy_tol: float = DEFAULT_DEGENERACY_TOL,
    method: str = "auto",
) -> SpectralResult:
    """Solve for the ground space of ``hamiltonian``.

    ``method`` is one of ``auto`` (dense up to :data:`DENSE_DIM_LIMIT`,
    iterative above), ``dense``, or ``iterative``.
    """
    if degeneracy_tol < 0:
        raise DomainError(f"degeneracy_tol must be >= 0, got {degeneracy_tol}")
    if method not in ("auto", "dense", "iterative"):
        raise DomainError(f"unknown solver method {method!r}")

    if method == "auto":
        method = "dense" if hamiltonian.dim <= DENSE_DIM_LIMIT else "iterative"
    if method == "iterative" and hamiltonian.dim < _ITERATIVE_MIN_DIM:
        method = "dense"

    if method == "dense":
        return _ground_state_dense(hamiltonian, degeneracy_tol)
    return _ground_state_iterative(hamiltonian, degeneracy_tol)


def _ground_state_dense(hamiltonian: Hamiltonian, tol: float) -> SpectralResult:
    evals, evecs = np.linalg.eigh(hamiltonian.to_dense())
    inside = evals < evals[0] + tol
    count = int(np.count_nonzero(inside))
    gap = float(evals[count] - evals[0]) if count < len(evals) else 0.0
    return SpectralResult(
        e0=float(evals[0]),
        gap=gap,
        ground_subspace=np.ascontiguousarray(evecs[:, :count]),
        degeneracy_tol=tol,
    )


def _ground_state_iterative(hamiltonian: Hamiltonian, tol: float) -> SpectralResult:
    dim = hamiltonian.dim
    operator = scipy.sparse.linalg.aslinearoperator(hamiltonian.to_sparse())
    # Deterministic start vector: ARPACK would otherwise seed from global
    # random state and results would wobble between runs.
    v0 = np.random.default_rng(0x5EED).standard_normal(dim)

    k = min(6, dim - 1)
    while True:
        try:
            evals, evecs = scipy.sparse.linalg.eigsh(
                operator, k=k, which="SA", v0=v0
            )
        except scipy.sparse.linalg.ArpackNoConvergence as exc:
            raise ConvergenceError(
                f"iterative eigensolver did not converge at dim {dim} (k={k})"
            ) from exc
        order = np.argsort(evals)
        evals = evals[order]
        evecs = evecs[:, order]

        inside = evals < evals[0] + tol
        count = int(np.count_nonzero(inside))
        if count < k:
            return SpectralResult(
                e0=float(evals[0]),
                gap=float(evals[count] - evals[0]),
                ground_subspace=np.ascontiguousarray(evecs[:, :count]),
                degeneracy_tol=tol,
            )
        # Every computed eigenvalue is inside the window; widen the block
        # until something above the window shows up.
        if k >= dim - 1 or k >= _MULTIPLICITY_CAP:
            if dim <= 4 * DENSE_DIM_LIMIT:
                return _ground_state_dense(hamiltonian, tol)
            raise ResourceLimitError(
                f"ground-space multiplicity exceeds {k} at dim {dim}; "
                "no spectral gap found within the solver's block cap"
            )
        k = min(dim - 1, 2 * k)


def overlap(prepared: StateVector, spectral: SpectralResult) -> tuple[float, float]:
    """Overlap of ``prepared`` with the ground space: amplitude and probability.

    Returns ``(gamma, eta)`` where ``gamma`` is the norm of the projection
    onto the ground space and ``eta = gamma**2``.
    """
    subspace = spectral.ground_subspace
    if prepared.dim != subspace.shape[0]:
        raise DomainError(
            f"state dimension {prepared.dim} does not match the solved "
            f"Hamiltonian dimension {subspace.shape[0]}"
        )
    gamma = min(1.0, float(np.linalg.norm(subspace.conj().T @ prepared.amplitudes)))
    return gamma, gamma * gamma


def reference_overlap(
    hamiltonian: Hamiltonian,
    basis_index: int,
    degeneracy_tol: float = DEFAULT_DEGENERACY_TOL,
    method: str = "auto",
) -> float:
    """Ground-space overlap amplitude of one computational basis state."""
    spectral = ground_state(hamiltonian, degeneracy_tol=degeneracy_tol, method=method)
    gamma, _ = overlap(basis_state(hamiltonian.dim, basis_index), spectral)
    return gamma
