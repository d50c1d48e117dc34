"""Batch evaluation: scenario tables, parameter sweeps, depth-bound curves.

Tables are plain CSV with ``#`` comments.  A scenario table has the columns

    name,alpha,beta,epsilon,gamma,gamma0,depth,p_succ,unit,d_gsee

where ``epsilon`` may be blank when ``d_gsee`` is given (the estimation
depth then stands in for the accuracy target), ``p_succ`` defaults to 1
and ``unit`` to circuit-layers.  A sweep table carries a base scenario in
``# key: value`` comment lines followed by ``label,gamma,gamma0`` rows,
one overlap pair per sweep point.  A curve table carries ``gamma``
and ``d_gsee`` in the comment block and a single ``gamma0`` column.

Evaluation never aborts on a bad row: failures are collected as
:class:`RowError` values alongside the rows that did evaluate.
"""

from __future__ import annotations

import csv
import io
import warnings as _warnings
from dataclasses import dataclass, replace

from . import criteria
from .errors import DomainError, GspGateError, ParseError
from .runtime_model import Accuracy, GseeModel, GspCandidate, Reference
from .units import DEFAULT_DEPTH_UNIT

SCENARIO_COLUMNS = (
    "name",
    "alpha",
    "beta",
    "epsilon",
    "gamma",
    "gamma0",
    "depth",
    "p_succ",
    "unit",
    "d_gsee",
)

SWEEP_VARIABLES = ("gamma0", "gamma", "depth", "epsilon", "p_succ", "bond-label")

REPORT_COLUMNS = (
    "scenario",
    "variable",
    "lhs",
    "rhs",
    "margin",
    "accepted",
    "max_depth",
    "runtime",
    "runtime_reference",
    "warnings",
)


@dataclass(frozen=True)
class Scenario:
    """One named acceptability question, ready to evaluate.

    ``d_gsee_override`` supplies the estimation depth directly (a measured
    or quoted circuit depth); when present it takes precedence over
    ``accuracy``, which then may be None.
    """

    name: str
    gsee: GseeModel
    candidate: GspCandidate
    reference: Reference
    accuracy: Accuracy | None = None
    d_gsee_override: float | None = None

    def __post_init__(self) -> None:
        if not self.name:
            raise DomainError("scenario needs a non-empty name")
        if self.accuracy is None and self.d_gsee_override is None:
            raise DomainError(
                f"scenario {self.name!r} needs either epsilon or d_gsee"
            )
        if self.d_gsee_override is not None and self.d_gsee_override <= 0:
            raise DomainError(
                f"scenario {self.name!r}: d_gsee must be positive, "
                f"got {self.d_gsee_override}"
            )

    def effective_accuracy(self) -> Accuracy:
        """The accuracy actually used: given, or implied by ``d_gsee_override``."""
        if self.d_gsee_override is not None:
            epsilon = 1.0 / (
                self.d_gsee_override * self.candidate.gamma**self.gsee.beta
            )
            return Accuracy(epsilon)
        return self.accuracy


@dataclass(frozen=True)
class ReportRow:
    scenario: str
    variable: str
    lhs: float
    rhs: float
    margin: float
    accepted: bool
    max_depth: float
    runtime: float
    runtime_reference: float
    warnings: tuple[str, ...] = ()


@dataclass(frozen=True)
class RowError:
    row: int
    message: str


@dataclass(frozen=True)
class LabeledPoint:
    """One sweep point carrying its own overlap pair."""

    label: str
    gamma: float
    gamma0: float


@dataclass(frozen=True)
class SweepSpec:
    """A base scenario plus the variable and grid to scan.

    ``values`` carries numeric grids; ``points`` carries labeled overlap
    pairs and is only used with ``variable="bond-label"``.
    """

    base: Scenario
    variable: str
    values: tuple[float, ...] = ()
    points: tuple[LabeledPoint, ...] = ()

    def __post_init__(self) -> None:
        if self.variable not in SWEEP_VARIABLES:
            raise DomainError(
                f"unknown sweep variable {self.variable!r}; "
                f"expected one of {SWEEP_VARIABLES}"
            )
        if self.variable == "bond-label":
            if not self.points or self.values:
                raise DomainError("bond-label sweeps take labeled points only")
        else:
            if not self.values or self.points:
                raise DomainError(
                    f"sweep over {self.variable!r} takes a numeric grid only"
                )


@dataclass(frozen=True)
class CurvePoint:
    gamma0: float
    max_depth: float


def evaluate_scenario(scenario: Scenario, variable: str = "") -> ReportRow:
    """Evaluate one scenario into a report row.

    The verdict uses the repetition-aware criterion (which reduces to the
    general one at ``p_succ = 1``); the depth bound uses the same inputs so
    the row is internally consistent.
    """
    accuracy = scenario.effective_accuracy()
    verdict = criteria.verdict_with_reps(
        scenario.gsee, scenario.candidate, scenario.reference, accuracy
    )
    with _warnings.catch_warnings(record=True) as caught:
        _warnings.simplefilter("always")
        bound = criteria.max_depth(
            scenario.gsee,
            scenario.candidate.gamma,
            scenario.reference,
            accuracy,
            p_succ=scenario.candidate.p_succ,
        )
    notes = verdict.warnings + tuple(
        str(w.message) for w in caught if w.message not in verdict.warnings
    )
    return ReportRow(
        scenario=scenario.name,
        variable=variable,
        lhs=verdict.lhs,
        rhs=verdict.rhs,
        margin=verdict.margin,
        accepted=verdict.accepted,
        max_depth=bound,
        runtime=verdict.details["runtime_lhs"],
        runtime_reference=verdict.details["runtime_rhs"],
        warnings=notes,
    )


def run_scenarios(table_text: str) -> tuple[list[ReportRow], list[RowError]]:
    """Evaluate every row of a scenario table, isolating per-row failures."""
    header_line, header, rows = _csv_rows(table_text)
    _require_columns(header, SCENARIO_COLUMNS, header_line)
    index = {name: position for position, name in enumerate(header)}

    reports: list[ReportRow] = []
    errors: list[RowError] = []
    for line, cells in rows:
        try:
            scenario = _scenario_from_cells(cells, index, line)
            reports.append(evaluate_scenario(scenario))
        except GspGateError as exc:
            errors.append(RowError(row=line, message=str(exc)))
    return reports, errors


def sweep(spec: SweepSpec) -> tuple[list[ReportRow], list[RowError]]:
    """Evaluate the base scenario across the grid, isolating per-point failures."""
    reports: list[ReportRow] = []
    errors: list[RowError] = []
    if spec.variable == "bond-label":
        grid: list[tuple[str, object]] = [(p.label, p) for p in spec.points]
    else:
        grid = [(format_number(v), v) for v in spec.values]

    for position, (label, value) in enumerate(grid, start=1):
        try:
            varied = _apply_variable(spec.base, spec.variable, value)
            reports.append(evaluate_scenario(varied, variable=label))
        except GspGateError as exc:
            errors.append(RowError(row=position, message=str(exc)))
    return reports, errors


def max_depth_curve(
    gamma: float, d_gsee: float, gamma0_grid: list[float] | tuple[float, ...]
) -> tuple[list[CurvePoint], list[RowError]]:
    """Largest acceptable depth against the reference overlap, pointwise.

    Uses the linear-overlap depth bound with the estimation depth given
    directly.  Grid points outside ``(0, gamma]`` are reported as errors
    and skipped.
    """
    points: list[CurvePoint] = []
    errors: list[RowError] = []
    for position, gamma0 in enumerate(gamma0_grid, start=1):
        try:
            if gamma0 > gamma:
                raise DomainError(
                    f"gamma0={gamma0} exceeds the candidate overlap gamma={gamma}"
                )
            value = criteria.max_depth_strict(gamma, gamma0, d_gsee)
            points.append(CurvePoint(gamma0=gamma0, max_depth=value))
        except GspGateError as exc:
            errors.append(RowError(row=position, message=str(exc)))
    return points, errors


def _apply_variable(base: Scenario, variable: str, value) -> Scenario:
    if variable == "bond-label":
        point: LabeledPoint = value
        candidate = replace(base.candidate, gamma=point.gamma)
        return replace(
            base, candidate=candidate, reference=Reference(point.gamma0)
        )
    if variable == "gamma":
        return replace(base, candidate=replace(base.candidate, gamma=value))
    if variable == "gamma0":
        return replace(base, reference=Reference(value))
    if variable == "depth":
        return replace(base, candidate=replace(base.candidate, depth=value))
    if variable == "p_succ":
        return replace(base, candidate=replace(base.candidate, p_succ=value))
    # epsilon: an estimation-depth override would pin the quantity being
    # swept, so it is dropped for this scan.
    return replace(base, accuracy=Accuracy(value), d_gsee_override=None)


# ---------------------------------------------------------------------------
# table parsing


def _csv_rows(text: str) -> tuple[int, list[str], list[tuple[int, list[str]]]]:
    """Split CSV text into (header line number, header, numbered data rows)."""
    header: list[str] | None = None
    header_line = 0
    rows: list[tuple[int, list[str]]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        cells = next(csv.reader(io.StringIO(raw)))
        cells = [cell.strip() for cell in cells]
        if header is None:
            header, header_line = cells, number
        else:
            rows.append((number, cells))
    if header is None:
        raise ParseError("no header row found")
    return header_line, header, rows


def _require_columns(header: list[str], expected: tuple[str, ...], line: int) -> None:
    if sorted(header) != sorted(expected):
        raise ParseError(
            f"bad header {header!r}; expected columns {', '.join(expected)}",
            line=line,
        )


def _cell(cells: list[str], index: dict[str, int], name: str, line: int) -> str:
    position = index[name]
    if position >= len(cells):
        raise ParseError(f"row is missing the {name!r} column", line=line)
    return cells[position]


def _float_cell(
    cells: list[str],
    index: dict[str, int],
    name: str,
    line: int,
    default: float | None = None,
) -> float | None:
    raw = _cell(cells, index, name, line)
    if raw == "":
        return default
    try:
        return float(raw)
    except ValueError:
        raise ParseError(f"bad number {raw!r} in column {name!r}", line=line) from None


def _scenario_from_cells(
    cells: list[str], index: dict[str, int], line: int
) -> Scenario:
    name = _cell(cells, index, "name", line)
    alpha = _float_cell(cells, index, "alpha", line)
    beta = _float_cell(cells, index, "beta", line)
    epsilon = _float_cell(cells, index, "epsilon", line)
    gamma = _float_cell(cells, index, "gamma", line)
    gamma0 = _float_cell(cells, index, "gamma0", line)
    depth = _float_cell(cells, index, "depth", line)
    p_succ = _float_cell(cells, index, "p_succ", line, default=1.0)
    unit = _cell(cells, index, "unit", line) or DEFAULT_DEPTH_UNIT
    d_gsee = _float_cell(cells, index, "d_gsee", line)

    for label, value in (
        ("alpha", alpha),
        ("beta", beta),
        ("gamma", gamma),
        ("gamma0", gamma0),
        ("depth", depth),
    ):
        if value is None:
            raise ParseError(f"column {label!r} must not be blank", line=line)

    try:
        return Scenario(
            name=name,
            gsee=GseeModel(name=f"{name}-model", alpha=alpha, beta=beta, depth_unit=unit),
            candidate=GspCandidate(
                name=name, depth=depth, gamma=gamma, p_succ=p_succ, depth_unit=unit
            ),
            reference=Reference(gamma0),
            accuracy=Accuracy(epsilon) if epsilon is not None else None,
            d_gsee_override=d_gsee,
        )
    except DomainError as exc:
        raise ParseError(str(exc), line=line) from exc


def parse_scenario_table(table_text: str) -> tuple[list[Scenario], list[RowError]]:
    """Parse a scenario table without evaluating it."""
    header_line, header, rows = _csv_rows(table_text)
    _require_columns(header, SCENARIO_COLUMNS, header_line)
    index = {name: position for position, name in enumerate(header)}
    scenarios: list[Scenario] = []
    errors: list[RowError] = []
    for line, cells in rows:
        try:
            scenarios.append(_scenario_from_cells(cells, index, line))
        except GspGateError as exc:
            errors.append(RowError(row=line, message=str(exc)))
    return scenarios, errors


def _metadata_block(text: str) -> dict[str, str]:
    """``# key: value`` pairs from the leading comment block."""
    meta: dict[str, str] = {}
    for raw in text.splitlines():
        stripped = raw.strip()
        if not stripped:
            continue
        if not stripped.startswith("#"):
            break
        body = stripped.lstrip("#").strip()
        key, sep, value = body.partition(":")
        if sep and key.strip() and value.strip():
            meta[key.strip()] = value.strip()
    return meta


def _meta_float(meta: dict[str, str], key: str, default: float | None = None) -> float | None:
    if key not in meta:
        return default
    try:
        return float(meta[key])
    except ValueError:
        raise ParseError(f"bad number {meta[key]!r} for metadata key {key!r}") from None


def parse_sweep_table(table_text: str) -> SweepSpec:
    """Parse a labeled overlap sweep (metadata block + label,gamma,gamma0 rows)."""
    meta = _metadata_block(table_text)
    header_line, header, rows = _csv_rows(table_text)
    _require_columns(header, ("label", "gamma", "gamma0"), header_line)
    index = {name: position for position, name in enumerate(header)}

    points: list[LabeledPoint] = []
    for line, cells in rows:
        label = _cell(cells, index, "label", line)
        gamma = _float_cell(cells, index, "gamma", line)
        gamma0 = _float_cell(cells, index, "gamma0", line)
        if gamma is None or gamma0 is None:
            raise ParseError("gamma and gamma0 must not be blank", line=line)
        points.append(LabeledPoint(label=label, gamma=gamma, gamma0=gamma0))
    if not points:
        raise ParseError("sweep table has no points")

    alpha = _meta_float(meta, "alpha")
    beta = _meta_float(meta, "beta")
    if alpha is None or beta is None:
        raise ParseError("sweep metadata must define alpha and beta")
    epsilon = _meta_float(meta, "epsilon")
    d_gsee = _meta_float(meta, "d_gsee")
    unit = meta.get("unit", DEFAULT_DEPTH_UNIT)
    name = meta.get("name", "sweep")

    base = Scenario(
        name=name,
        gsee=GseeModel(name=f"{name}-model", alpha=alpha, beta=beta, depth_unit=unit),
        candidate=GspCandidate(
            name=name,
            depth=_meta_float(meta, "depth", default=0.0),
            gamma=points[0].gamma,
            p_succ=_meta_float(meta, "p_succ", default=1.0),
            depth_unit=unit,
        ),
        reference=Reference(points[0].gamma0),
        accuracy=Accuracy(epsilon) if epsilon is not None else None,
        d_gsee_override=d_gsee,
    )
    return SweepSpec(base=base, variable="bond-label", points=tuple(points))


def parse_curve_table(table_text: str) -> tuple[float, float, tuple[float, ...]]:
    """Parse a depth-bound curve table into (gamma, d_gsee, gamma0 grid)."""
    meta = _metadata_block(table_text)
    gamma = _meta_float(meta, "gamma")
    d_gsee = _meta_float(meta, "d_gsee")
    if gamma is None or d_gsee is None:
        raise ParseError("curve metadata must define gamma and d_gsee")

    header_line, header, rows = _csv_rows(table_text)
    _require_columns(header, ("gamma0",), header_line)
    grid: list[float] = []
    for line, cells in rows:
        value = _float_cell(cells, {"gamma0": 0}, "gamma0", line)
        if value is None:
            raise ParseError("gamma0 must not be blank", line=line)
        grid.append(value)
    if not grid:
        raise ParseError("curve table has no grid points")
    return gamma, d_gsee, tuple(grid)


def table_kind(table_text: str) -> str:
    """Classify a table as ``scenarios``, ``sweep``, or ``curve``.

    An explicit ``# kind:`` metadata line wins; otherwise the header row
    decides.
    """
    meta = _metadata_block(table_text)
    kind = meta.get("kind")
    if kind is not None:
        if kind not in ("scenarios", "sweep", "curve"):
            raise ParseError(f"unknown table kind {kind!r}")
        return kind
    _, header, _ = _csv_rows(table_text)
    columns = sorted(header)
    if columns == sorted(SCENARIO_COLUMNS):
        return "scenarios"
    if columns == sorted(("label", "gamma", "gamma0")):
        return "sweep"
    if columns == ["gamma0"]:
        return "curve"
    raise ParseError(f"cannot classify table with header {header!r}")


# ---------------------------------------------------------------------------
# report formatting


def format_number(value: float) -> str:
    """Six significant digits, scientific only once magnitudes pass 10**6."""
    return format(value, ".6g")


def format_report_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, tuple):
        return "; ".join(value)
    return str(value)


def report_csv(rows: list[ReportRow]) -> str:
    """Render report rows as CSV, deterministically."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(REPORT_COLUMNS)
    for row in rows:
        writer.writerow(
            [format_report_value(getattr(row, column)) for column in REPORT_COLUMNS]
        )
    return out.getvalue()


def curve_csv(points: list[CurvePoint]) -> str:
    """Two-column plot-ready CSV of a depth-bound curve."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["gamma0", "max_depth"])
    for point in points:
        writer.writerow([format_number(point.gamma0), format_number(point.max_depth)])
    return out.getvalue()
