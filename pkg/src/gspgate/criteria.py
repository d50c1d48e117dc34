"""Acceptability criteria for ground-state preparation candidates.

A preparation method is worth running only if the estimation pipeline it
feeds finishes faster than the same pipeline seeded with the zero-depth
reference state.  Both sides of that comparison reduce to dimensionless
form by dividing through by the estimation depth, which is how verdicts
are reported here:

    lhs = (D / p_succ + D_est) / D_est        (total depth over estimation depth)
    rhs = (gamma / gamma0) ** (alpha + beta)  (overlap advantage)

with ``D_est = 1 / (epsilon * gamma**beta)``.  Acceptance is the strict
inequality ``lhs < rhs``; ties mean the candidate buys nothing.
"""

from __future__ import annotations

import warnings as _warnings
from dataclasses import dataclass, field, replace

from . import runtime_model as rt
from .errors import AcceptabilityWarning, DomainError, RegimeError
from .runtime_model import Accuracy, GseeModel, GspCandidate, Reference
from .units import require_same_unit

REGIME_GENERAL = "general"
REGIME_SIMPLIFIED = "simplified"
REGIME_WITH_REPS = "with-repetitions"

#: Depth ratios at or below this count as negligible for the simplified
#: criterion.  Overridable per call.
DEFAULT_NEGLIGIBILITY = 0.01

_FLAT_MODEL_WARNING = (
    "alpha + beta = 0: the threshold is exactly 1, so no preparation "
    "with positive depth can be accepted"
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of one acceptability check.

    ``lhs`` and ``rhs`` are the dimensionless ratio forms described in the
    module docstring; the equivalent runtime-form pair is kept under
    ``details["runtime_lhs"]`` / ``details["runtime_rhs"]``.
    """

    accepted: bool
    lhs: float
    rhs: float
    margin: float
    regime: str
    warnings: tuple[str, ...] = ()
    details: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class BoosterGspModel:
    """Depth model for an eigenstate booster run before estimation.

    The booster's circuit depth is taken to scale with the inverse spectral
    gap ``delta`` and the inverse starting overlap ``gamma0``.  This is a
    modeling choice, not a measured depth; verdicts derived from it are
    labeled "inferred".
    """

    delta: float
    gamma0: float

    def __post_init__(self) -> None:
        if self.delta <= 0:
            raise DomainError(f"spectral gap must be positive, got {self.delta}")
        if not 0 < self.gamma0 <= 1:
            raise DomainError(f"gamma0 must lie in (0, 1], got {self.gamma0}")


@dataclass(frozen=True)
class ModelOutcome:
    model: str
    lhs: float
    rhs: float
    accepted: bool


@dataclass(frozen=True)
class StrictnessReport:
    """Pointwise comparison of two estimation models on one candidate.

    ``stricter`` names the model whose criterion is harder to pass on these
    inputs (larger-or-equal lhs and smaller-or-equal rhs), or is None when
    the two are identical or not pointwise ordered.  ``implication_holds``
    records whether acceptance under the stricter model implied acceptance
    under the laxer one here; it is vacuously true when ``stricter`` is None.
    """

    first: ModelOutcome
    second: ModelOutcome
    stricter: str | None
    implication_holds: bool


def _evaluate(
    model: GseeModel,
    candidate: GspCandidate,
    reference: Reference,
    accuracy: Accuracy,
    p_succ: float,
    regime: str,
) -> Verdict:
    estimation_depth = rt.gsee_depth(model, accuracy, candidate.gamma)
    lhs = (candidate.depth / p_succ + estimation_depth) / estimation_depth
    rhs = (candidate.gamma / reference.gamma0) ** model.exponent_sum

    run_lhs = rt.runtime_with_reps(model, replace(candidate, p_succ=p_succ), accuracy)
    run_rhs = rt.runtime_reference(model, reference, accuracy)

    notes: list[str] = []
    if model.exponent_sum == 0:
        notes.append(_FLAT_MODEL_WARNING)

    return Verdict(
        accepted=lhs < rhs,
        lhs=lhs,
        rhs=rhs,
        margin=rhs - lhs,
        regime=regime,
        warnings=tuple(notes),
        details={
            "ratio_lhs": lhs,
            "ratio_rhs": rhs,
            "runtime_lhs": run_lhs,
            "runtime_rhs": run_rhs,
            "gsee_depth": estimation_depth,
        },
    )


def verdict_general(
    model: GseeModel,
    candidate: GspCandidate,
    reference: Reference,
    accuracy: Accuracy,
) -> Verdict:
    """Full acceptability check, treating the preparation as deterministic.

    The candidate's ``p_succ`` is deliberately ignored; see
    :func:`verdict_with_reps` for the probabilistic form.
    """
    require_same_unit(model.depth_unit, candidate.depth_unit, "verdict")
    return _evaluate(model, candidate, reference, accuracy, 1.0, REGIME_GENERAL)


def verdict_with_reps(
    model: GseeModel,
    candidate: GspCandidate,
    reference: Reference,
    accuracy: Accuracy,
) -> Verdict:
    """Acceptability check amortizing preparation retries over ``p_succ``.

    With ``p_succ = 1`` this coincides with :func:`verdict_general`, and the
    verdict is reported under the general regime.
    """
    require_same_unit(model.depth_unit, candidate.depth_unit, "verdict")
    if candidate.p_succ == 1.0:
        return _evaluate(model, candidate, reference, accuracy, 1.0, REGIME_GENERAL)
    return _evaluate(
        model, candidate, reference, accuracy, candidate.p_succ, REGIME_WITH_REPS
    )


def verdict_simplified(
    model: GseeModel,
    candidate: GspCandidate,
    reference: Reference,
    accuracy: Accuracy,
    negligibility: float = DEFAULT_NEGLIGIBILITY,
) -> Verdict:
    """Acceptability check when the preparation depth is negligible.

    Valid only while ``depth * epsilon * gamma**beta <= negligibility``,
    i.e. the preparation is at most a ``negligibility`` fraction of the
    estimation depth.  Outside that regime the comparison degenerates to
    ``1 < (gamma/gamma0)**(alpha+beta)`` anyway, which would silently
    overstate the candidate, so a :class:`RegimeError` is raised instead.
    """
    require_same_unit(model.depth_unit, candidate.depth_unit, "verdict")
    depth_ratio = candidate.depth * accuracy.epsilon * candidate.gamma**model.beta
    if depth_ratio > negligibility:
        raise RegimeError(
            "simplified criterion not applicable: preparation depth is "
            f"{depth_ratio:.3g} of the estimation depth "
            f"(threshold {negligibility:.3g})",
            ratio=depth_ratio,
        )

    lhs = 1.0
    rhs = (candidate.gamma / reference.gamma0) ** model.exponent_sum
    notes: list[str] = []
    if model.exponent_sum == 0:
        notes.append(_FLAT_MODEL_WARNING)
    return Verdict(
        accepted=lhs < rhs,
        lhs=lhs,
        rhs=rhs,
        margin=rhs - lhs,
        regime=REGIME_SIMPLIFIED,
        warnings=tuple(notes),
        details={
            "overlap_ratio": candidate.gamma / reference.gamma0,
            "depth_ratio": depth_ratio,
        },
    )


def max_depth(
    model: GseeModel,
    gamma: float,
    reference: Reference,
    accuracy: Accuracy,
    p_succ: float = 1.0,
) -> float:
    """Largest acceptable preparation depth at overlap ``gamma``.

    Returns ``p_succ * (1/(epsilon*gamma**beta)) * ((gamma/gamma0)**(alpha+beta) - 1)``.
    Any depth strictly below this passes the matching verdict; the bound
    itself does not.  When ``gamma < gamma0`` no depth is acceptable and the
    function returns 0 with an :class:`AcceptabilityWarning`.
    """
    if not 0 < p_succ <= 1:
        raise DomainError(f"p_succ must lie in (0, 1], got {p_succ}")
    if not 0 < gamma <= 1:
        raise DomainError(f"gamma must lie in (0, 1], got {gamma}")
    if gamma < reference.gamma0:
        _warnings.warn(
            f"gamma={gamma} is below the reference gamma0={reference.gamma0}; "
            "no preparation depth is acceptable",
            AcceptabilityWarning,
            stacklevel=2,
        )
        return 0.0
    if model.exponent_sum == 0:
        _warnings.warn(_FLAT_MODEL_WARNING, AcceptabilityWarning, stacklevel=2)
        return 0.0
    ratio = (gamma / reference.gamma0) ** model.exponent_sum
    return p_succ * rt.gsee_depth(model, accuracy, gamma) * (ratio - 1.0)


def max_depth_strict(gamma: float, gamma0: float, d_gsee: float) -> float:
    """Depth bound in the linear-overlap regime, from the estimation depth itself.

    For models with ``alpha + beta = 1`` the bound factors into
    ``(gamma - gamma0) / gamma0 * d_gsee``: relative overlap gain times the
    estimation depth.  ``d_gsee`` is the estimation circuit depth measured or
    quoted directly, rather than derived from an accuracy target.
    """
    if not 0 < gamma <= 1:
        raise DomainError(f"gamma must lie in (0, 1], got {gamma}")
    if not 0 < gamma0 <= 1:
        raise DomainError(f"gamma0 must lie in (0, 1], got {gamma0}")
    if d_gsee <= 0:
        raise DomainError(f"d_gsee must be positive, got {d_gsee}")
    if gamma < gamma0:
        _warnings.warn(
            f"gamma={gamma} is below the reference gamma0={gamma0}; "
            "no preparation depth is acceptable",
            AcceptabilityWarning,
            stacklevel=2,
        )
        return 0.0
    return (gamma - gamma0) / gamma0 * d_gsee


def booster_depth_model(booster: BoosterGspModel) -> float:
    """Inferred depth of a gap-limited eigenstate booster: ``1/(delta*gamma0)``."""
    return 1.0 / (booster.delta * booster.gamma0)


def strictness_order(
    model_a: GseeModel,
    model_b: GseeModel,
    candidate: GspCandidate,
    reference: Reference,
    accuracy: Accuracy,
) -> StrictnessReport:
    """Compare two estimation models' criteria on the same candidate.

    Requires ``gamma >= gamma0`` so the threshold sides are ordered by the
    exponent sums alone.
    """
    require_same_unit(model_a.depth_unit, candidate.depth_unit, "strictness_order")
    require_same_unit(model_b.depth_unit, candidate.depth_unit, "strictness_order")
    if candidate.gamma < reference.gamma0:
        raise DomainError(
            "strictness comparison needs gamma >= gamma0, got "
            f"gamma={candidate.gamma} < gamma0={reference.gamma0}"
        )

    outcomes = []
    for model in (model_a, model_b):
        v = verdict_general(model, candidate, reference, accuracy)
        outcomes.append(ModelOutcome(model.name, v.lhs, v.rhs, v.accepted))
    first, second = outcomes

    stricter: str | None = None
    laxer: ModelOutcome | None = None
    if (first.lhs, first.rhs) != (second.lhs, second.rhs):
        if first.lhs >= second.lhs and first.rhs <= second.rhs:
            stricter, laxer = first.model, second
        elif second.lhs >= first.lhs and second.rhs <= first.rhs:
            stricter, laxer = second.model, first

    if stricter is None:
        implication = True
    else:
        strict_outcome = first if stricter == first.model else second
        implication = (not strict_outcome.accepted) or laxer.accepted

    return StrictnessReport(
        first=first, second=second, stricter=stricter, implication_holds=implication
    )
