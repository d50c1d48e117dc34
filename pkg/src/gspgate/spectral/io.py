"""Text formats for Hamiltonians and states.

Three line-oriented formats, all allowing ``#`` comments and blank lines:

* ``hamx 1 dim=<n> unit=<tag>`` header, then ``<row> <col> <re> [<im>]``
  entry lines for the upper triangle (``row <= col``).
* ``pauli 1 qubits=<k> unit=<tag>`` header, then one term per line:
  ``<coef-re> [<coef-im>] <P><q> ...`` with factors like ``X0 Z3``, or a
  bare ``I`` for the identity term.
* ``state 1 dim=<n>`` header, then ``<index> <re> [<im>]`` amplitude
  lines; unlisted amplitudes are zero.

States are renormalized on load; a deviation beyond 1e-6 triggers a
:class:`NormalizationWarning` rather than an error.
"""

from __future__ import annotations

import warnings as _warnings

import numpy as np

from ..errors import NormalizationWarning, ParseError
from .model import Hamiltonian, StateVector, check_dim
from .pauli import PauliTerm, expand_terms, parse_pauli_factors

_QUIET_NORM_DEVIATION = 1e-6


def _content_lines(text: str) -> list[tuple[int, str]]:
    """(1-based line number, stripped content) for non-blank, non-comment lines."""
    out = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((number, line))
    return out


def _parse_header(line: str, number: int, keyword: str, fields: tuple[str, ...]) -> dict[str, str]:
    tokens = line.split()
    if not tokens or tokens[0] != keyword:
        raise ParseError(f"expected a {keyword!r} header, got {line!r}", line=number)
    if len(tokens) < 2 or tokens[1] != "1":
        raise ParseError(
            f"unsupported {keyword} version {tokens[1] if len(tokens) > 1 else '?'!r}",
            line=number,
        )
    values: dict[str, str] = {}
    for token in tokens[2:]:
        key, sep, value = token.partition("=")
        if not sep or not value or key not in fields:
            raise ParseError(f"bad header field {token!r}", line=number)
        values[key] = value
    for name in fields:
        if name not in values:
            raise ParseError(f"header is missing {name}=", line=number)
    return values


def _parse_scalar(token: str, number: int, what: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"bad {what} {token!r}", line=number) from None


def _parse_index(token: str, number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"bad {what} {token!r}", line=number) from None


def load_hamiltonian(text: str) -> Hamiltonian:
    """Parse HAMX or PAULI text into a :class:`Hamiltonian`."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input; expected a hamx or pauli header")
    keyword = lines[0][1].split()[0]
    if keyword == "hamx":
        return _load_hamx(lines)
    if keyword == "pauli":
        return _load_pauli(lines)
    raise ParseError(
        f"unknown format {keyword!r}; expected hamx or pauli", line=lines[0][0]
    )


def _load_hamx(lines: list[tuple[int, str]]) -> Hamiltonian:
    number, header = lines[0]
    fields = _parse_header(header, number, "hamx", ("dim", "unit"))
    dim = check_dim(_parse_index(fields["dim"], number, "dimension"))

    entries: list[tuple[int, int, complex]] = []
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) not in (3, 4):
            raise ParseError(
                f"expected 'row col re [im]', got {line!r}", line=number
            )
        row = _parse_index(tokens[0], number, "row index")
        col = _parse_index(tokens[1], number, "column index")
        re_part = _parse_scalar(tokens[2], number, "real part")
        im_part = _parse_scalar(tokens[3], number, "imaginary part") if len(tokens) == 4 else 0.0
        if row > col:
            raise ParseError(
                f"entry ({row}, {col}) lies below the diagonal; the format "
                "stores the upper triangle only",
                line=number,
            )
        if row == col and im_part != 0.0:
            raise ParseError(
                f"diagonal entry ({row}, {row}) must be real", line=number
            )
        entries.append((row, col, complex(re_part, im_part)))

    try:
        return Hamiltonian(dim=dim, entries=tuple(entries), energy_unit=fields["unit"])
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def _load_pauli(lines: list[tuple[int, str]]) -> Hamiltonian:
    number, header = lines[0]
    fields = _parse_header(header, number, "pauli", ("qubits", "unit"))
    qubits = _parse_index(fields["qubits"], number, "qubit count")
    if qubits < 1:
        raise ParseError(f"qubit count must be positive, got {qubits}", line=number)
    dim = check_dim(2**qubits)

    terms: list[PauliTerm] = []
    for number, line in lines[1:]:
        tokens = line.split()
        coef_re = _parse_scalar(tokens[0], number, "coefficient")
        rest = tokens[1:]
        coef_im = 0.0
        if rest and _is_number(rest[0]):
            coef_im = _parse_scalar(rest[0], number, "coefficient")
            rest = rest[1:]
        if not rest:
            raise ParseError(
                "term has no operators; use a bare I for the identity",
                line=number,
            )
        factors = parse_pauli_factors(rest, qubits, number)
        terms.append(PauliTerm(complex(coef_re, coef_im), factors))

    entries = expand_terms(terms, qubits)
    return Hamiltonian(dim=dim, entries=entries, energy_unit=fields["unit"])


def _is_number(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def load_state(text: str) -> StateVector:
    """Parse STATE text; renormalizes, warning when the input norm is off."""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty input; expected a state header")
    number, header = lines[0]
    fields = _parse_header(header, number, "state", ("dim",))
    dim = check_dim(_parse_index(fields["dim"], number, "dimension"))

    amplitudes = np.zeros(dim, dtype=np.complex128)
    seen: set[int] = set()
    for number, line in lines[1:]:
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise ParseError(
                f"expected 'index re [im]', got {line!r}", line=number
            )
        index = _parse_index(tokens[0], number, "basis index")
        if not 0 <= index < dim:
            raise ParseError(
                f"basis index {index} outside dimension {dim}", line=number
            )
        if index in seen:
            raise ParseError(f"duplicate amplitude for index {index}", line=number)
        seen.add(index)
        re_part = _parse_scalar(tokens[1], number, "real part")
        im_part = _parse_scalar(tokens[2], number, "imaginary part") if len(tokens) == 3 else 0.0
        amplitudes[index] = complex(re_part, im_part)

    norm = float(np.linalg.norm(amplitudes))
    if norm == 0.0:
        raise ParseError("state has zero norm")
    if abs(norm - 1.0) > _QUIET_NORM_DEVIATION:
        _warnings.warn(
            f"state norm was {norm!r}; renormalizing",
            NormalizationWarning,
            stacklevel=2,
        )
    return StateVector(dim=dim, amplitudes=amplitudes / norm)


def dump_state(state: StateVector) -> str:
    """Serialize a state back to STATE text (nonzero amplitudes only)."""
    lines = [f"state 1 dim={state.dim}"]
    for index, value in enumerate(state.amplitudes):
        if value != 0:
            lines.append(f"{index} {float(value.real)!r} {float(value.imag)!r}")
    return "\n".join(lines) + "\n"
