"""Shared builders, independent oracles, and the acceptance-line registry."""

from __future__ import annotations

import numpy as np

from gspgate.spectral import Hamiltonian, StateVector

# Filled in by test_acceptance and replayed by the terminal-summary hook in
# conftest, so every run ends with one visible line per criterion.
ACCEPTANCE_LINES: dict[int, tuple[str, bool]] = {}


def record_criterion(number: int, description: str, passed: bool) -> str:
    status = "PASS" if passed else "FAIL"
    line = f"criterion {number}: {status} - {description}"
    ACCEPTANCE_LINES[number] = (description, passed)
    print(line)
    return line


_PAULI_1Q = {
    "I": np.eye(2, dtype=np.complex128),
    "X": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128),
    "Y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=np.complex128),
    "Z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=np.complex128),
}


def pauli_term_dense(coefficient: complex, factors, qubits: int) -> np.ndarray:
    """Kronecker-product oracle for one operator string.

    Qubit 0 addresses the least significant bit of the basis index, so the
    product is built with the highest qubit on the left.
    """
    axes = ["I"] * qubits
    for qubit, axis in factors:
        axes[qubit] = axis
    matrix = np.eye(1, dtype=np.complex128)
    for qubit in reversed(range(qubits)):
        matrix = np.kron(matrix, _PAULI_1Q[axes[qubit]])
    return coefficient * matrix


def random_hamiltonian(
    rng: np.random.Generator,
    dim: int,
    density: float = 0.25,
    complex_entries: bool = True,
) -> Hamiltonian:
    """Random Hermitian operator: full random diagonal plus sparse off-diagonals."""
    entries: list[tuple[int, int, complex]] = [
        (i, i, complex(rng.standard_normal())) for i in range(dim)
    ]
    target = int(density * dim * (dim - 1) / 2)
    if target:
        picks_r = rng.integers(0, dim, size=4 * target)
        picks_c = rng.integers(0, dim, size=4 * target)
        seen: set[tuple[int, int]] = set()
        for row, col in zip(picks_r, picks_c):
            row, col = int(row), int(col)
            if row == col:
                continue
            if row > col:
                row, col = col, row
            if (row, col) in seen:
                continue
            seen.add((row, col))
            if complex_entries:
                value = complex(rng.standard_normal(), rng.standard_normal())
            else:
                value = complex(rng.standard_normal())
            entries.append((row, col, value))
            if len(seen) >= target:
                break
    return Hamiltonian(dim=dim, entries=tuple(entries))


def random_state(rng: np.random.Generator, dim: int) -> StateVector:
    amplitudes = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return StateVector.normalized(amplitudes)
