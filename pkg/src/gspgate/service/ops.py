"""Request handlers shared by the HTTP routes and the local CLI client.

Each function turns one request model into one response model, delegating
all arithmetic and validation to the core package.  Warnings raised along
the way are captured into the response rather than leaking to the caller's
warning filters.
"""

from __future__ import annotations

import warnings as _warnings
from contextlib import contextmanager

from .. import criteria, fixtures, runtime_model, scenario, spectral
from ..errors import DomainError
from ..runtime_model import Accuracy, GseeModel, GspCandidate, Reference
from ..spectral.filters import FilterSpec
from . import schemas


@contextmanager
def _collect_warnings(into: list[str]):
    with _warnings.catch_warnings(record=True) as caught:
        _warnings.simplefilter("always")
        yield
    into.extend(str(w.message) for w in caught)


def resolve_model(
    gsee: str | None, alpha: float | None, beta: float | None, unit: str
) -> GseeModel:
    """A catalog model by name, or a custom one from explicit exponents."""
    if gsee is not None:
        if alpha is not None or beta is not None:
            raise DomainError("give either a catalog model name or explicit exponents, not both")
        return runtime_model.catalog_model(gsee, depth_unit=unit)
    if alpha is None or beta is None:
        raise DomainError("a model needs a catalog name or both alpha and beta")
    return GseeModel(name=f"custom(alpha={alpha:g},beta={beta:g})", alpha=alpha, beta=beta, depth_unit=unit)


def evaluate_verdict(request: schemas.VerdictRequest) -> schemas.VerdictResponse:
    model = resolve_model(request.gsee, request.alpha, request.beta, request.unit)
    candidate = GspCandidate(
        name="candidate",
        depth=request.depth,
        gamma=request.gamma,
        p_succ=request.p_succ,
        depth_unit=request.unit,
    )
    reference = Reference(request.gamma0)
    accuracy = Accuracy(request.epsilon)

    if request.regime == "simplified":
        negligibility = (
            request.negligibility
            if request.negligibility is not None
            else criteria.DEFAULT_NEGLIGIBILITY
        )
        verdict = criteria.verdict_simplified(
            model, candidate, reference, accuracy, negligibility=negligibility
        )
    elif request.regime == "general":
        verdict = criteria.verdict_general(model, candidate, reference, accuracy)
    else:
        # "auto" and "with-repetitions" both amortize retries; at p_succ = 1
        # that is already the general criterion.
        verdict = criteria.verdict_with_reps(model, candidate, reference, accuracy)

    return schemas.VerdictResponse(
        accepted=verdict.accepted,
        lhs=verdict.lhs,
        rhs=verdict.rhs,
        margin=verdict.margin,
        regime=verdict.regime,
        runtime=verdict.details.get("runtime_lhs"),
        runtime_reference=verdict.details.get("runtime_rhs"),
        gsee_depth=verdict.details.get("gsee_depth"),
        warnings=list(verdict.warnings),
    )


def evaluate_max_depth(request: schemas.MaxDepthRequest) -> schemas.MaxDepthResponse:
    has_model = (
        request.gsee is not None
        or request.alpha is not None
        or request.beta is not None
    )
    warnings: list[str] = []

    if not has_model:
        if request.d_gsee is None:
            raise DomainError(
                "give d_gsee for the overlap-gain form, or a model plus "
                "epsilon for the accuracy-derived form"
            )
        if request.p_succ != 1.0:
            raise DomainError(
                "the overlap-gain form does not amortize retries; "
                "pass a model (and epsilon or d_gsee) to use p_succ"
            )
        with _collect_warnings(warnings):
            bound = criteria.max_depth_strict(
                request.gamma, request.gamma0, request.d_gsee
            )
        return schemas.MaxDepthResponse(
            max_depth=bound,
            form="overlap-gain",
            gsee_depth=request.d_gsee,
            multiplier=(request.gamma - request.gamma0) / request.gamma0,
            overlap_gain=request.gamma - request.gamma0,
            reference_overlap=request.gamma0,
            p_succ=1.0,
            warnings=warnings,
        )

    model = resolve_model(request.gsee, request.alpha, request.beta, request.unit)
    reference = Reference(request.gamma0)
    if request.d_gsee is not None:
        if request.epsilon is not None:
            raise DomainError("give epsilon or d_gsee, not both")
        accuracy = Accuracy(1.0 / (request.d_gsee * request.gamma**model.beta))
    elif request.epsilon is not None:
        accuracy = Accuracy(request.epsilon)
    else:
        raise DomainError("the accuracy-derived form needs epsilon or d_gsee")

    with _collect_warnings(warnings):
        bound = criteria.max_depth(
            model, request.gamma, reference, accuracy, p_succ=request.p_succ
        )
    estimation_depth = runtime_model.gsee_depth(model, accuracy, request.gamma)
    return schemas.MaxDepthResponse(
        max_depth=bound,
        form="accuracy-derived",
        gsee_depth=estimation_depth,
        multiplier=(request.gamma / request.gamma0) ** model.exponent_sum - 1.0,
        overlap_gain=request.gamma - request.gamma0,
        reference_overlap=request.gamma0,
        p_succ=request.p_succ,
        warnings=warnings,
    )


def evaluate_runtime(request: schemas.RuntimeRequest) -> schemas.RuntimeResponse:
    model = resolve_model(request.gsee, request.alpha, request.beta, request.unit)
    candidate = GspCandidate(
        name="candidate",
        depth=request.depth,
        gamma=request.gamma,
        p_succ=request.p_succ,
        depth_unit=request.unit,
    )
    accuracy = Accuracy(request.epsilon)
    reference_runtime = None
    if request.gamma0 is not None:
        reference_runtime = runtime_model.runtime_reference(
            model, Reference(request.gamma0), accuracy
        )
    return schemas.RuntimeResponse(
        runtime=runtime_model.runtime_with_reps(model, candidate, accuracy),
        runtime_reference=reference_runtime,
        gsee_depth=runtime_model.gsee_depth(model, accuracy, request.gamma),
        repetitions=runtime_model.repetitions(model, request.gamma),
        unit=model.depth_unit,
    )


def _row_model(row: scenario.ReportRow) -> schemas.ReportRowModel:
    return schemas.ReportRowModel(
        scenario=row.scenario,
        variable=row.variable,
        lhs=row.lhs,
        rhs=row.rhs,
        margin=row.margin,
        accepted=row.accepted,
        max_depth=row.max_depth,
        runtime=row.runtime,
        runtime_reference=row.runtime_reference,
        warnings=list(row.warnings),
    )


def _error_models(errors: list[scenario.RowError]) -> list[schemas.RowErrorModel]:
    return [schemas.RowErrorModel(row=e.row, message=e.message) for e in errors]


def evaluate_scenarios(request: schemas.ScenariosRequest) -> schemas.SweepResponse:
    rows, errors = scenario.run_scenarios(request.table)
    return schemas.SweepResponse(
        kind="report", rows=[_row_model(r) for r in rows], errors=_error_models(errors)
    )


def _scenario_from_spec(spec: schemas.ScenarioSpec) -> scenario.Scenario:
    model = resolve_model(spec.gsee, spec.alpha, spec.beta, spec.unit)
    return scenario.Scenario(
        name=spec.name,
        gsee=model,
        candidate=GspCandidate(
            name=spec.name,
            depth=spec.depth,
            gamma=spec.gamma,
            p_succ=spec.p_succ,
            depth_unit=spec.unit,
        ),
        reference=Reference(spec.gamma0),
        accuracy=Accuracy(spec.epsilon) if spec.epsilon is not None else None,
        d_gsee_override=spec.d_gsee,
    )


def evaluate_sweep(request: schemas.SweepRequest) -> schemas.SweepResponse:
    sources = [
        request.fixture is not None,
        request.table is not None,
        request.variable is not None,
    ]
    if sum(sources) != 1:
        raise DomainError(
            "give exactly one sweep source: a fixture name, a sweep table, "
            "or a variable with values and a base scenario"
        )

    if request.fixture is not None:
        text = fixtures.fixture_text(request.fixture)
        kind = scenario.table_kind(text)
        if kind == "scenarios":
            rows, errors = scenario.run_scenarios(text)
            return schemas.SweepResponse(
                kind="report",
                rows=[_row_model(r) for r in rows],
                errors=_error_models(errors),
            )
        if kind == "sweep":
            rows, errors = scenario.sweep(scenario.parse_sweep_table(text))
            return schemas.SweepResponse(
                kind="report",
                rows=[_row_model(r) for r in rows],
                errors=_error_models(errors),
            )
        gamma, d_gsee, grid = scenario.parse_curve_table(text)
        points, errors = scenario.max_depth_curve(gamma, d_gsee, grid)
        return schemas.SweepResponse(
            kind="curve",
            points=[
                schemas.CurvePointModel(gamma0=p.gamma0, max_depth=p.max_depth)
                for p in points
            ],
            errors=_error_models(errors),
        )

    if request.table is not None:
        rows, errors = scenario.sweep(scenario.parse_sweep_table(request.table))
        return schemas.SweepResponse(
            kind="report",
            rows=[_row_model(r) for r in rows],
            errors=_error_models(errors),
        )

    if not request.values:
        raise DomainError("a parametric sweep needs a non-empty values grid")
    if request.scenario is None:
        raise DomainError("a parametric sweep needs a base scenario")
    spec = scenario.SweepSpec(
        base=_scenario_from_spec(request.scenario),
        variable=request.variable,
        values=tuple(request.values),
    )
    rows, errors = scenario.sweep(spec)
    return schemas.SweepResponse(
        kind="report", rows=[_row_model(r) for r in rows], errors=_error_models(errors)
    )


def evaluate_curve(request: schemas.CurveRequest) -> schemas.CurveResponse:
    points, errors = scenario.max_depth_curve(
        request.gamma, request.d_gsee, request.gamma0_grid
    )
    return schemas.CurveResponse(
        points=[
            schemas.CurvePointModel(gamma0=p.gamma0, max_depth=p.max_depth)
            for p in points
        ],
        errors=_error_models(errors),
    )


def evaluate_spectral(request: schemas.SpectralRequest) -> schemas.SpectralResponse:
    warnings: list[str] = []
    with _collect_warnings(warnings):
        hamiltonian = spectral.load_hamiltonian(request.hamiltonian)
        result = spectral.ground_state(
            hamiltonian, degeneracy_tol=request.degeneracy_tol, method=request.method
        )
        gamma = eta = None
        if request.state is not None and request.basis_index is not None:
            raise DomainError("give a state or a basis index, not both")
        if request.state is not None:
            gamma, eta = spectral.overlap(spectral.load_state(request.state), result)
        elif request.basis_index is not None:
            gamma, eta = spectral.overlap(
                spectral.basis_state(hamiltonian.dim, request.basis_index), result
            )
    return schemas.SpectralResponse(
        dim=hamiltonian.dim,
        energy_unit=hamiltonian.energy_unit,
        e0=result.e0,
        gap=result.gap,
        degeneracy=result.degeneracy,
        gamma=gamma,
        eta=eta,
        warnings=warnings,
    )


def evaluate_boost(request: schemas.BoostRequest) -> schemas.BoostResponse:
    spec = FilterSpec(
        kind=request.kind,
        center=request.center,
        width=request.width,
        pivot=request.pivot,
        rate=request.rate,
        cutoff=request.cutoff,
    )
    warnings: list[str] = []
    with _collect_warnings(warnings):
        hamiltonian = spectral.load_hamiltonian(request.hamiltonian)
        prepared = spectral.load_state(request.state)
        result = spectral.boost_filter(
            hamiltonian, prepared, spec, degeneracy_tol=request.degeneracy_tol
        )
    return schemas.BoostResponse(
        gamma_before=result.gamma_before,
        gamma_after=result.gamma_after,
        eta_before=result.gamma_before**2,
        eta_after=result.gamma_after**2,
        state=spectral.dump_state(result.boosted) if request.include_state else None,
        warnings=warnings,
    )


def get_catalog() -> schemas.CatalogResponse:
    return schemas.CatalogResponse(
        models=[
            schemas.CatalogModelEntry(
                name=m.name,
                alpha=m.alpha,
                beta=m.beta,
                depth_unit=m.depth_unit,
                prefactor=m.prefactor,
            )
            for m in runtime_model.catalog()
        ],
        fixtures=[
            schemas.FixtureEntry(name=name, kind=kind)
            for name, kind in fixtures.list_fixtures()
        ],
    )
