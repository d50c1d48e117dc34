"""Operator-string expansion checked against a Kronecker-product oracle."""

import numpy as np
import pytest

from gspgate.errors import ParseError
from gspgate.spectral import Hamiltonian
from gspgate.spectral.pauli import PauliTerm, expand_terms, parse_pauli_factors

from helpers import pauli_term_dense

ORACLE_TOL = 1e-12


def _expanded_dense(terms, qubits):
    entries = expand_terms(terms, qubits)
    return Hamiltonian(dim=2**qubits, entries=entries).to_dense().astype(np.complex128)


def _oracle_dense(terms, qubits):
    total = np.zeros((2**qubits, 2**qubits), dtype=np.complex128)
    for term in terms:
        total += pauli_term_dense(term.coefficient, term.factors, qubits)
    return total


# ---------------------------------------------------------------------------
# masks and factor parsing


def test_masks_for_each_axis():
    assert PauliTerm(1.0, ((0, "X"),)).masks() == (1, 0, 0)
    assert PauliTerm(1.0, ((1, "Y"),)).masks() == (2, 2, 1)
    assert PauliTerm(1.0, ((2, "Z"),)).masks() == (0, 4, 0)
    assert PauliTerm(1.0, ((0, "X"), (1, "Y"), (2, "Z"))).masks() == (3, 6, 1)


def test_parse_factors_sorts_by_qubit():
    assert parse_pauli_factors(["Z3", "X0"], qubits=4, line=1) == ((0, "X"), (3, "Z"))


def test_parse_factors_identity_and_explicit_identity_qubits():
    assert parse_pauli_factors(["I"], qubits=2, line=1) == ()
    assert parse_pauli_factors(["I0", "X1"], qubits=2, line=1) == ((1, "X"),)


@pytest.mark.parametrize(
    "tokens, message",
    [
        (["Q0"], "bad operator token"),
        (["X"], "bad operator token"),
        (["Xq"], "bad qubit index"),
        (["X5"], "outside the declared"),
        (["X0", "Z0"], "repeated"),
    ],
)
def test_parse_factors_errors_carry_the_line_number(tokens, message):
    with pytest.raises(ParseError, match=message) as excinfo:
        parse_pauli_factors(tokens, qubits=2, line=7)
    assert "line 7:" in str(excinfo.value)


# ---------------------------------------------------------------------------
# expansion against the oracle


def test_single_axis_expansions_match_the_oracle():
    for axis in ("X", "Y", "Z"):
        terms = [PauliTerm(1.0, ((0, axis),))]
        assert np.allclose(
            _expanded_dense(terms, 1), _oracle_dense(terms, 1), atol=ORACLE_TOL
        )


def test_y_expansion_has_the_expected_entry():
    entries = expand_terms([PauliTerm(1.0, ((0, "Y"),))], qubits=1)
    assert entries == ((0, 1, -1j),)


def test_two_qubit_sum_matches_the_oracle():
    terms = [
        PauliTerm(0.5, ((0, "X"), (1, "X"))),
        PauliTerm(0.5, ((0, "Z"),)),
        PauliTerm(-0.25, ()),
    ]
    assert np.allclose(
        _expanded_dense(terms, 2), _oracle_dense(terms, 2), atol=ORACLE_TOL
    )


def test_random_sums_match_the_oracle():
    rng = np.random.default_rng(7)
    axes = np.array(["X", "Y", "Z"])
    for _ in range(40):
        qubits = int(rng.integers(1, 6))
        terms = []
        for _ in range(int(rng.integers(1, 8))):
            count = int(rng.integers(0, qubits + 1))
            chosen = rng.choice(qubits, size=count, replace=False)
            factors = tuple(
                sorted((int(q), str(rng.choice(axes))) for q in chosen)
            )
            terms.append(PauliTerm(float(rng.standard_normal()), factors))
        assert np.allclose(
            _expanded_dense(terms, qubits), _oracle_dense(terms, qubits), atol=ORACLE_TOL
        )


def test_cancelling_terms_collapse_to_no_entries():
    terms = [PauliTerm(0.75, ((0, "X"),)), PauliTerm(-0.75, ((0, "X"),))]
    assert expand_terms(terms, qubits=1) == ()


def test_conjugate_coefficients_cancel_into_a_hermitian_sum():
    terms = [
        PauliTerm(1.0 + 2.0j, ((0, "X"), (1, "Z"))),
        PauliTerm(1.0 - 2.0j, ((0, "X"), (1, "Z"))),
    ]
    expanded = _expanded_dense(terms, 2)
    oracle = _oracle_dense(terms, 2)
    assert np.allclose(expanded, oracle, atol=ORACLE_TOL)
    assert np.allclose(expanded, expanded.conj().T, atol=ORACLE_TOL)


def test_non_hermitian_sums_are_rejected():
    with pytest.raises(ParseError, match="not Hermitian"):
        expand_terms([PauliTerm(1.0j, ((0, "Z"),))], qubits=1)


def test_diagonal_entries_come_out_exactly_real():
    entries = expand_terms([PauliTerm(0.5, ((0, "Z"),))], qubits=1)
    assert entries == ((0, 0, 0.5 + 0j), (1, 1, -0.5 + 0j))
    assert all(v.imag == 0.0 for r, c, v in entries if r == c)
