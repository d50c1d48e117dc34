"""Request and response bodies for the HTTP service.

These stay flat: every field is a scalar or a list of scalars, so CSV and
JSON renderings of the same result line up column for column.  Domain
validation lives in the core package; schemas only shape the payloads.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel

from ..units import DEFAULT_DEPTH_UNIT

Regime = Literal["auto", "general", "with-repetitions", "simplified"]
SolverMethod = Literal["auto", "dense", "iterative"]


class VerdictRequest(BaseModel):
    gsee: str | None = None
    alpha: float | None = None
    beta: float | None = None
    epsilon: float
    gamma: float
    gamma0: float
    depth: float = 0.0
    p_succ: float = 1.0
    unit: str = DEFAULT_DEPTH_UNIT
    regime: Regime = "auto"
    negligibility: float | None = None


class VerdictResponse(BaseModel):
    accepted: bool
    lhs: float
    rhs: float
    margin: float
    regime: str
    runtime: float | None = None
    runtime_reference: float | None = None
    gsee_depth: float | None = None
    warnings: list[str] = []


class MaxDepthRequest(BaseModel):
    gamma: float
    gamma0: float
    gsee: str | None = None
    alpha: float | None = None
    beta: float | None = None
    epsilon: float | None = None
    d_gsee: float | None = None
    p_succ: float = 1.0
    unit: str = DEFAULT_DEPTH_UNIT


class MaxDepthResponse(BaseModel):
    max_depth: float
    form: Literal["overlap-gain", "accuracy-derived"]
    gsee_depth: float
    multiplier: float
    overlap_gain: float
    reference_overlap: float
    p_succ: float
    warnings: list[str] = []


class RuntimeRequest(BaseModel):
    gsee: str | None = None
    alpha: float | None = None
    beta: float | None = None
    epsilon: float
    gamma: float
    gamma0: float | None = None
    depth: float = 0.0
    p_succ: float = 1.0
    unit: str = DEFAULT_DEPTH_UNIT


class RuntimeResponse(BaseModel):
    runtime: float
    runtime_reference: float | None = None
    gsee_depth: float
    repetitions: float
    unit: str


class ScenarioSpec(BaseModel):
    """Inline scenario for parametric sweeps."""

    name: str = "scenario"
    gsee: str | None = None
    alpha: float | None = None
    beta: float | None = None
    epsilon: float | None = None
    gamma: float
    gamma0: float
    depth: float = 0.0
    p_succ: float = 1.0
    unit: str = DEFAULT_DEPTH_UNIT
    d_gsee: float | None = None


class ScenariosRequest(BaseModel):
    table: str


class ReportRowModel(BaseModel):
    scenario: str
    variable: str
    lhs: float
    rhs: float
    margin: float
    accepted: bool
    max_depth: float
    runtime: float
    runtime_reference: float
    warnings: list[str] = []


class RowErrorModel(BaseModel):
    row: int
    message: str


class SweepRequest(BaseModel):
    """Exactly one source: a bundled fixture, table text, or a parametric grid."""

    fixture: str | None = None
    table: str | None = None
    variable: str | None = None
    values: list[float] | None = None
    scenario: ScenarioSpec | None = None


class SweepResponse(BaseModel):
    kind: Literal["report", "curve"]
    rows: list[ReportRowModel] = []
    points: list[CurvePointModel] = []
    errors: list[RowErrorModel] = []


class CurveRequest(BaseModel):
    gamma: float
    d_gsee: float
    gamma0_grid: list[float]


class CurvePointModel(BaseModel):
    gamma0: float
    max_depth: float


class CurveResponse(BaseModel):
    points: list[CurvePointModel] = []
    errors: list[RowErrorModel] = []


class SpectralRequest(BaseModel):
    hamiltonian: str
    state: str | None = None
    basis_index: int | None = None
    degeneracy_tol: float = 1e-8
    method: SolverMethod = "auto"


class SpectralResponse(BaseModel):
    dim: int
    energy_unit: str
    e0: float
    gap: float
    degeneracy: int
    gamma: float | None = None
    eta: float | None = None
    warnings: list[str] = []


class BoostRequest(BaseModel):
    hamiltonian: str
    state: str
    kind: Literal["gaussian", "exponential", "step"]
    center: float | None = None
    width: float | None = None
    pivot: float | None = None
    rate: float | None = None
    cutoff: float | None = None
    degeneracy_tol: float = 1e-8
    include_state: bool = False


class BoostResponse(BaseModel):
    gamma_before: float
    gamma_after: float
    eta_before: float
    eta_after: float
    state: str | None = None
    warnings: list[str] = []


class CatalogModelEntry(BaseModel):
    name: str
    alpha: float
    beta: float
    depth_unit: str
    prefactor: float


class FixtureEntry(BaseModel):
    name: str
    kind: str


class CatalogResponse(BaseModel):
    models: list[CatalogModelEntry]
    fixtures: list[FixtureEntry]


SweepResponse.model_rebuild()
