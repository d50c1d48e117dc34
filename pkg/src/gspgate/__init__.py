"""gspgate: should a ground-state preparation method be run at all?

Quantum energy estimation pays for a better initial state twice: once in
the preparation circuit's depth, once less in the estimation loop thanks
to the larger ground-space overlap.  This package models that trade,
renders accept/reject verdicts against the zero-depth reference
preparation, bounds the depth a preparation is allowed to spend, and
measures overlaps directly from small Hamiltonians.
"""

from .criteria import (
    BoosterGspModel,
    StrictnessReport,
    Verdict,
    booster_depth_model,
    max_depth,
    max_depth_strict,
    strictness_order,
    verdict_general,
    verdict_simplified,
    verdict_with_reps,
)
from .errors import (
    AcceptabilityWarning,
    ConvergenceError,
    DomainError,
    GspGateError,
    GspGateWarning,
    NormalizationWarning,
    ParseError,
    RegimeError,
    ResourceLimitError,
    UnitMismatchError,
)
from .runtime_model import (
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
from .scenario import (
    CurvePoint,
    LabeledPoint,
    ReportRow,
    RowError,
    Scenario,
    SweepSpec,
    evaluate_scenario,
    max_depth_curve,
    run_scenarios,
    sweep,
)

__version__ = "0.1.0"
