"""Runtime model: the catalog, the kernel arithmetic, and its identities."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gspgate.errors import DomainError, UnitMismatchError
from gspgate.runtime_model import (
    LT20,
    QPE,
    Accuracy,
    GseeModel,
    GspCandidate,
    Reference,
    catalog,
    catalog_model,
    gsee_depth,
    repetitions,
    runtime_reference,
    runtime_total,
    runtime_with_reps,
)

gammas = st.floats(min_value=0.01, max_value=1.0)
epsilons = st.floats(min_value=1e-6, max_value=1e-2)
depths = st.floats(min_value=0.0, max_value=1e9)
exponents = st.floats(min_value=0.0, max_value=4.0)
shrinkers = st.floats(min_value=0.1, max_value=0.999)


# ---------------------------------------------------------------------------
# catalog and input validation


def test_catalog_lists_both_builtin_models_in_order():
    assert [m.name for m in catalog()] == ["qpe", "lt20"]
    assert (QPE.alpha, QPE.beta) == (2.0, 2.0)
    assert (LT20.alpha, LT20.beta) == (0.0, 1.0)


def test_catalog_model_lookup_and_unit_retag():
    model = catalog_model("lt20")
    assert model is LT20
    retagged = catalog_model("lt20", depth_unit="t-count")
    assert retagged.depth_unit == "t-count"
    assert (retagged.alpha, retagged.beta) == (LT20.alpha, LT20.beta)
    assert LT20.depth_unit == "circuit-layers"


def test_catalog_model_unknown_name():
    with pytest.raises(DomainError, match="unknown model"):
        catalog_model("grover")


@pytest.mark.parametrize(
    "kwargs",
    [
        {"alpha": -1.0, "beta": 1.0},
        {"alpha": 0.0, "beta": -0.5},
        {"alpha": 2.0, "beta": 2.0, "prefactor": 0.0},
        {"alpha": 2.0, "beta": 2.0, "prefactor": -3.0},
    ],
)
def test_model_rejects_bad_exponents_and_prefactor(kwargs):
    with pytest.raises(DomainError):
        GseeModel(name="bad", **kwargs)


def test_model_rejects_unknown_depth_unit():
    with pytest.raises(UnitMismatchError):
        GseeModel(name="bad", alpha=0.0, beta=1.0, depth_unit="seconds")


def test_custom_depth_unit_is_accepted():
    model = GseeModel(name="ok", alpha=0.0, beta=1.0, depth_unit="custom:toffoli")
    assert model.depth_unit == "custom:toffoli"


@pytest.mark.parametrize(
    "kwargs",
    [
        {"depth": -1.0, "gamma": 0.5},
        {"depth": 1.0, "gamma": 0.0},
        {"depth": 1.0, "gamma": 1.5},
        {"depth": 1.0, "gamma": 0.5, "p_succ": 0.0},
        {"depth": 1.0, "gamma": 0.5, "p_succ": 1.5},
    ],
)
def test_candidate_rejects_out_of_domain_values(kwargs):
    with pytest.raises(DomainError):
        GspCandidate(name="bad", **kwargs)


def test_reference_is_zero_depth():
    assert Reference(0.72).depth == 0.0
    with pytest.raises(DomainError):
        Reference(0.0)
    with pytest.raises(DomainError):
        Reference(1.2)


def test_accuracy_must_be_positive():
    with pytest.raises(DomainError):
        Accuracy(0.0)


def test_exponent_sum():
    assert QPE.exponent_sum == 4.0
    assert LT20.exponent_sum == 1.0


# ---------------------------------------------------------------------------
# frozen kernel values


def test_gsee_depth_frozen():
    assert gsee_depth(QPE, Accuracy(1e-3), 0.72) == pytest.approx(
        1929.0123456790122, rel=1e-15
    )
    assert gsee_depth(LT20, Accuracy(5e-5), 1.0) == pytest.approx(20000.0, rel=1e-15)
    flat = GseeModel(name="flat-depth", alpha=2.0, beta=0.0)
    assert gsee_depth(flat, Accuracy(0.0016), 0.3) == pytest.approx(625.0, rel=1e-15)


def test_repetitions_frozen():
    assert repetitions(QPE, 0.5) == 4.0
    assert repetitions(LT20, 0.3) == 1.0


def test_runtime_total_frozen():
    candidate = GspCandidate(name="c", depth=1e3, gamma=0.72)
    assert runtime_total(QPE, candidate, Accuracy(1e-3)) == pytest.approx(
        5650.100975461059, rel=1e-15
    )


def test_runtime_reference_frozen():
    assert runtime_reference(QPE, Reference(0.5), Accuracy(1e-3)) == pytest.approx(
        16000.0, rel=1e-15
    )
    assert runtime_reference(LT20, Reference(0.72), Accuracy(5e-5)) == pytest.approx(
        27777.777777777777, rel=1e-15
    )


def test_runtime_with_reps_amplifies_only_the_depth_term():
    accuracy = Accuracy(5e-5)
    whole = GspCandidate(name="c", depth=1e3, gamma=1.0, p_succ=1.0)
    half = GspCandidate(name="c", depth=1e3, gamma=1.0, p_succ=0.5)
    assert runtime_with_reps(LT20, whole, accuracy) == pytest.approx(21000.0)
    assert runtime_with_reps(LT20, half, accuracy) == pytest.approx(22000.0)


def test_runtime_total_ignores_success_probability():
    accuracy = Accuracy(1e-3)
    half = GspCandidate(name="c", depth=50.0, gamma=0.8, p_succ=0.5)
    whole = GspCandidate(name="c", depth=50.0, gamma=0.8, p_succ=1.0)
    assert runtime_total(LT20, half, accuracy) == runtime_total(LT20, whole, accuracy)


def test_prefactor_scales_runtimes():
    single = GseeModel(name="one", alpha=2.0, beta=2.0)
    double = GseeModel(name="two", alpha=2.0, beta=2.0, prefactor=2.0)
    candidate = GspCandidate(name="c", depth=123.0, gamma=0.7)
    accuracy = Accuracy(1e-3)
    assert runtime_total(double, candidate, accuracy) == 2.0 * runtime_total(
        single, candidate, accuracy
    )


def test_runtime_rejects_unit_mismatch():
    model = catalog_model("lt20", depth_unit="t-count")
    candidate = GspCandidate(name="c", depth=1.0, gamma=0.5)
    with pytest.raises(UnitMismatchError):
        runtime_total(model, candidate, Accuracy(1e-3))
    with pytest.raises(UnitMismatchError):
        runtime_with_reps(model, candidate, Accuracy(1e-3))


def test_gsee_depth_rejects_gamma_out_of_domain():
    with pytest.raises(DomainError):
        gsee_depth(QPE, Accuracy(1e-3), 0.0)
    with pytest.raises(DomainError):
        repetitions(QPE, 1.0001)


# ---------------------------------------------------------------------------
# identities and monotonicity


@given(gamma=gammas, epsilon=epsilons, alpha=exponents, beta=exponents)
def test_zero_depth_candidate_matches_reference_bit_for_bit(gamma, epsilon, alpha, beta):
    model = GseeModel(name="m", alpha=alpha, beta=beta)
    accuracy = Accuracy(epsilon)
    candidate = GspCandidate(name="c", depth=0.0, gamma=gamma)
    assert runtime_total(model, candidate, accuracy) == runtime_reference(
        model, Reference(gamma), accuracy
    )


@given(gamma=gammas, epsilon=epsilons, depth=depths, alpha=exponents, beta=exponents)
def test_full_success_probability_matches_repetition_free_form(
    gamma, epsilon, depth, alpha, beta
):
    model = GseeModel(name="m", alpha=alpha, beta=beta)
    accuracy = Accuracy(epsilon)
    candidate = GspCandidate(name="c", depth=depth, gamma=gamma, p_succ=1.0)
    assert runtime_with_reps(model, candidate, accuracy) == runtime_total(
        model, candidate, accuracy
    )


@given(gamma=gammas, shrink=shrinkers, epsilon=epsilons, depth=depths)
def test_runtime_never_grows_with_overlap(gamma, shrink, epsilon, depth):
    accuracy = Accuracy(epsilon)
    low = GspCandidate(name="c", depth=depth, gamma=gamma * shrink)
    high = GspCandidate(name="c", depth=depth, gamma=gamma)
    assert runtime_total(QPE, low, accuracy) >= runtime_total(QPE, high, accuracy)


@given(gamma=gammas, shrink=shrinkers, epsilon=epsilons, depth=depths)
def test_runtime_never_shrinks_as_success_probability_drops(gamma, shrink, epsilon, depth):
    accuracy = Accuracy(epsilon)
    harder = GspCandidate(name="c", depth=depth, gamma=gamma, p_succ=shrink)
    easier = GspCandidate(name="c", depth=depth, gamma=gamma, p_succ=1.0)
    assert runtime_with_reps(QPE, harder, accuracy) >= runtime_with_reps(
        QPE, easier, accuracy
    )


@given(gamma=gammas, epsilon=epsilons, depth=depths, alpha=exponents, beta=exponents)
def test_runtimes_are_strictly_positive(gamma, epsilon, depth, alpha, beta):
    model = GseeModel(name="m", alpha=alpha, beta=beta)
    accuracy = Accuracy(epsilon)
    assert runtime_total(model, GspCandidate(name="c", depth=depth, gamma=gamma), accuracy) > 0
    assert runtime_reference(model, Reference(gamma), accuracy) > 0


@given(gamma=gammas, epsilon=epsilons)
def test_zero_depth_runtime_factors_into_repetitions_times_depth(gamma, epsilon):
    accuracy = Accuracy(epsilon)
    candidate = GspCandidate(name="c", depth=0.0, gamma=gamma)
    assert runtime_total(QPE, candidate, accuracy) == repetitions(
        QPE, gamma
    ) * gsee_depth(QPE, accuracy, gamma)
