"""Sparse Hermitian Hamiltonians and state vectors.

Hamiltonians store only the upper triangle (row <= col); the lower triangle
is implied by conjugation, so Hermiticity holds exactly by construction.
The dimension cap defaults to 16384 and can be raised or lowered through
the ``GSPGATE_MAX_DIM`` environment variable.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field

import numpy as np
import scipy.sparse

from ..errors import DomainError, ResourceLimitError
from ..units import DEFAULT_ENERGY_UNIT

_MAX_DIM_ENV = "GSPGATE_MAX_DIM"
_MAX_DIM_DEFAULT = 16384

#: Norm deviation below which a state is accepted as normalized.
NORM_TOL = 1e-10


def max_dim() -> int:
    """Current Hamiltonian dimension cap."""
    raw = os.environ.get(_MAX_DIM_ENV)
    if raw is None:
        return _MAX_DIM_DEFAULT
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{_MAX_DIM_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"{_MAX_DIM_ENV} must be positive, got {value}")
    return value


def check_dim(dim: int) -> int:
    cap = max_dim()
    if dim > cap:
        raise ResourceLimitError(
            f"dimension {dim} exceeds the cap of {cap} "
            f"(override with {_MAX_DIM_ENV})"
        )
    if dim < 1:
        raise DomainError(f"dimension must be positive, got {dim}")
    return dim


@dataclass(frozen=True)
class Hamiltonian:
    """Hermitian operator given by its upper-triangle entries.

    ``entries`` holds ``(row, col, value)`` triples with ``row <= col``,
    unique positions, and real diagonal values.
    """

    dim: int
    entries: tuple[tuple[int, int, complex], ...]
    energy_unit: str = DEFAULT_ENERGY_UNIT

    def __post_init__(self) -> None:
        check_dim(self.dim)
        normalized: list[tuple[int, int, complex]] = []
        seen: set[tuple[int, int]] = set()
        for raw_row, raw_col, raw_value in self.entries:
            row, col, value = int(raw_row), int(raw_col), complex(raw_value)
            if not 0 <= row < self.dim or not 0 <= col < self.dim:
                raise DomainError(
                    f"entry ({row}, {col}) outside dimension {self.dim}"
                )
            if row > col:
                raise DomainError(
                    f"entry ({row}, {col}) lies below the diagonal; "
                    "store the upper triangle only"
                )
            if row == col and value.imag != 0.0:
                raise DomainError(
                    f"diagonal entry ({row}, {row}) must be real, got {value}"
                )
            if (row, col) in seen:
                raise DomainError(f"duplicate entry at ({row}, {col})")
            seen.add((row, col))
            normalized.append((row, col, value))
        normalized.sort(key=lambda e: (e[0], e[1]))
        object.__setattr__(self, "entries", tuple(normalized))

    @property
    def is_real(self) -> bool:
        """True when every stored entry has zero imaginary part."""
        return all(v.imag == 0.0 for _, _, v in self.entries)

    def to_dense(self) -> np.ndarray:
        """Full matrix; complex128, or float64 when all entries are real."""
        if self.is_real:
            m = np.zeros((self.dim, self.dim), dtype=np.float64)
            for row, col, value in self.entries:
                m[row, col] = value.real
                m[col, row] = value.real
            return m
        m = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for row, col, value in self.entries:
            m[row, col] = value
            m[col, row] = np.conj(value)
        return m

    def to_sparse(self) -> scipy.sparse.csr_matrix:
        """CSR form of the full (conjugate-completed) matrix."""
        rows: list[int] = []
        cols: list[int] = []
        vals: list[complex] = []
        for row, col, value in self.entries:
            rows.append(row)
            cols.append(col)
            vals.append(value)
            if row != col:
                rows.append(col)
                cols.append(row)
                vals.append(complex(value).conjugate())
        data = np.asarray(vals, dtype=np.complex128)
        if self.is_real:
            data = data.real
        return scipy.sparse.csr_matrix(
            (data, (rows, cols)), shape=(self.dim, self.dim)
        )


@dataclass(frozen=True)
class StateVector:
    """Normalized complex vector over the same basis as a Hamiltonian."""

    dim: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        amp = np.asarray(self.amplitudes, dtype=np.complex128)
        if amp.shape != (self.dim,):
            raise DomainError(
                f"amplitudes shape {amp.shape} does not match dim {self.dim}"
            )
        norm = float(np.linalg.norm(amp))
        if abs(norm - 1.0) > NORM_TOL:
            raise DomainError(
                f"state is not normalized (norm {norm!r}); "
                "use StateVector.normalized to renormalize"
            )
        amp = amp.copy()
        amp.flags.writeable = False
        object.__setattr__(self, "amplitudes", amp)

    @classmethod
    def normalized(cls, amplitudes: np.ndarray | list[complex]) -> StateVector:
        """Build a state from unnormalized amplitudes."""
        amp = np.asarray(amplitudes, dtype=np.complex128)
        norm = float(np.linalg.norm(amp))
        if norm == 0.0:
            raise DomainError("cannot normalize a zero vector")
        return cls(dim=amp.shape[0], amplitudes=amp / norm)


def basis_state(dim: int, index: int) -> StateVector:
    """Computational basis vector ``|index>``."""
    if not 0 <= index < dim:
        raise DomainError(f"basis index {index} outside dimension {dim}")
    amp = np.zeros(dim, dtype=np.complex128)
    amp[index] = 1.0
    return StateVector(dim=dim, amplitudes=amp)
