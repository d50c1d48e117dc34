"""Expansion of Pauli-string sums into sparse Hermitian entries.

A term is a coefficient times a product of single-qubit operators drawn
from {I, X, Y, Z}.  Qubit ``q`` addresses bit ``q`` of the basis index
(qubit 0 is the least significant bit), so ``Z0`` on one qubit is
``diag(1, -1)``.

Each term touches exactly one column per row: column ``row ^ xmask`` where
``xmask`` has a bit set for every X or Y factor.  The amplitude picks up a
sign from the Z-like factors and a global ``(-i)**n_y`` phase from the Y
factors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse

from ..errors import ParseError

_HERMITICITY_TOL = 1e-12


@dataclass(frozen=True)
class PauliTerm:
    """One summand: ``coefficient * prod(axis_q on qubit q)``."""

    coefficient: complex
    factors: tuple[tuple[int, str], ...]  # (qubit, axis) with axis in XYZ

    def masks(self) -> tuple[int, int, int]:
        """(xmask, sign_mask, n_y): flip bits, sign bits, Y count."""
        xmask = 0
        sign_mask = 0
        n_y = 0
        for qubit, axis in self.factors:
            bit = 1 << qubit
            if axis in ("X", "Y"):
                xmask |= bit
            if axis in ("Z", "Y"):
                sign_mask |= bit
            if axis == "Y":
                n_y += 1
        return xmask, sign_mask, n_y


def parse_pauli_factors(tokens: list[str], qubits: int, line: int) -> tuple[tuple[int, str], ...]:
    """Parse factor tokens like ``X0 Z3`` (or a bare ``I`` for identity)."""
    if tokens == ["I"]:
        return ()
    factors: list[tuple[int, str]] = []
    used: set[int] = set()
    for token in tokens:
        axis = token[:1].upper()
        if axis not in ("X", "Y", "Z", "I") or len(token) < 2:
            raise ParseError(
                f"bad operator token {token!r}; expected like X0, Y2, Z5", line=line
            )
        try:
            qubit = int(token[1:])
        except ValueError:
            raise ParseError(
                f"bad qubit index in token {token!r}", line=line
            ) from None
        if not 0 <= qubit < qubits:
            raise ParseError(
                f"qubit {qubit} outside the declared {qubits} qubits", line=line
            )
        if qubit in used:
            raise ParseError(f"qubit {qubit} repeated within one term", line=line)
        used.add(qubit)
        if axis != "I":
            factors.append((qubit, axis))
    factors.sort()
    return tuple(factors)


def _parity(values: np.ndarray) -> np.ndarray:
    """Bitwise population parity of each value (values fit in 14 bits)."""
    acc = values.copy()
    for shift in (8, 4, 2, 1):
        acc ^= acc >> shift
    return acc & 1


def expand_terms(
    terms: list[PauliTerm], qubits: int
) -> tuple[tuple[int, int, complex], ...]:
    """Sum the terms into upper-triangle entries of a ``2**qubits`` matrix.

    The summed operator must be Hermitian; complex coefficients are allowed
    only if conjugate contributions cancel, otherwise a :class:`ParseError`
    is raised.
    """
    dim = 2**qubits
    rows = np.arange(dim, dtype=np.int64)
    acc = scipy.sparse.csr_matrix((dim, dim), dtype=np.complex128)
    for term in terms:
        xmask, sign_mask, n_y = term.masks()
        cols = rows ^ xmask
        signs = 1.0 - 2.0 * _parity(rows & sign_mask).astype(np.float64)
        values = (term.coefficient * (-1j) ** n_y) * signs
        acc = acc + scipy.sparse.csr_matrix(
            (values, (rows, cols)), shape=(dim, dim)
        )

    deviation = abs(acc - acc.conjugate().transpose())
    scale = max(1.0, abs(acc).max() if acc.nnz else 1.0)
    if deviation.nnz and deviation.max() > _HERMITICITY_TOL * scale:
        raise ParseError(
            "term sum is not Hermitian; complex coefficients must come in "
            "conjugate pairs"
        )

    upper = scipy.sparse.triu(acc, k=0).tocoo()
    entries = []
    for row, col, value in zip(upper.row, upper.col, upper.data):
        if value == 0:
            continue
        if row == col:
            value = complex(value.real, 0.0)
        entries.append((int(row), int(col), complex(value)))
    return tuple(entries)
