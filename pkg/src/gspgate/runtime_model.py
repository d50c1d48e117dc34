"""Runtime model for ground-state energy estimation (GSEE) circuits.

A GSEE algorithm prepares an initial state with some overlap ``gamma`` on
the ground space and then runs an estimation circuit to target accuracy
``epsilon``.  Its total runtime scales like::

    T = prefactor * (1 / gamma**alpha) * (D + 1 / (epsilon * gamma**beta))

where ``D`` is the depth of the state-preparation circuit and the pair
``(alpha, beta)`` characterizes how strongly the estimation algorithm
depends on the overlap.  All asymptotic constants are folded into a single
``prefactor`` (1.0 unless calibrated).

The unboosted reference point is a zero-depth preparation with overlap
``gamma0``; its runtime is the ``D = 0`` case evaluated at ``gamma0``.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .errors import DomainError
from .units import DEFAULT_DEPTH_UNIT, require_same_unit, validate_depth_unit


@dataclass(frozen=True)
class GseeModel:
    """Overlap-dependence exponents of one energy-estimation algorithm.

    ``alpha`` governs the repetition cost (number of runs scales like
    ``1/gamma**alpha``), ``beta`` the per-run circuit depth cost
    (``1/(epsilon * gamma**beta)``).
    """

    name: str
    alpha: float
    beta: float
    depth_unit: str = DEFAULT_DEPTH_UNIT
    prefactor: float = 1.0

    def __post_init__(self) -> None:
        if self.alpha < 0 or self.beta < 0:
            raise DomainError(
                f"model {self.name!r}: exponents must be non-negative, "
                f"got alpha={self.alpha}, beta={self.beta}"
            )
        if self.prefactor <= 0:
            raise DomainError(
                f"model {self.name!r}: prefactor must be positive, "
                f"got {self.prefactor}"
            )
        validate_depth_unit(self.depth_unit)

    @property
    def exponent_sum(self) -> float:
        return self.alpha + self.beta


@dataclass(frozen=True)
class GspCandidate:
    """A ground-state preparation method under evaluation.

    ``depth`` is the preparation circuit depth in ``depth_unit``;
    ``gamma`` the overlap amplitude it achieves on the ground space;
    ``p_succ`` the success probability when the preparation is
    probabilistic (1 for deterministic circuits).
    """

    name: str
    depth: float
    gamma: float
    p_succ: float = 1.0
    depth_unit: str = DEFAULT_DEPTH_UNIT

    def __post_init__(self) -> None:
        if self.depth < 0:
            raise DomainError(f"candidate {self.name!r}: depth must be >= 0")
        if not 0 < self.gamma <= 1:
            raise DomainError(
                f"candidate {self.name!r}: gamma must lie in (0, 1], "
                f"got {self.gamma}"
            )
        if not 0 < self.p_succ <= 1:
            raise DomainError(
                f"candidate {self.name!r}: p_succ must lie in (0, 1], "
                f"got {self.p_succ}"
            )
        validate_depth_unit(self.depth_unit)


@dataclass(frozen=True)
class Reference:
    """The zero-depth baseline preparation (mean-field-style product state)."""

    gamma0: float

    def __post_init__(self) -> None:
        if not 0 < self.gamma0 <= 1:
            raise DomainError(f"reference gamma0 must lie in (0, 1], got {self.gamma0}")

    @property
    def depth(self) -> float:
        return 0.0


@dataclass(frozen=True)
class Accuracy:
    """Target accuracy of the energy estimate, in the Hamiltonian's energy unit."""

    epsilon: float

    def __post_init__(self) -> None:
        if self.epsilon <= 0:
            raise DomainError(f"epsilon must be positive, got {self.epsilon}")


_CATALOG: dict[str, GseeModel] = {}


def _register(model: GseeModel) -> GseeModel:
    # Catalog entries are restricted to the exponent grid covered by known
    # estimation algorithms; user-constructed models may use any exponents.
    if model.alpha not in (0.0, 2.0, 4.0) or model.beta not in (0.0, 1.0, 2.0):
        raise DomainError(f"catalog model {model.name!r} has off-grid exponents")
    if model.exponent_sum < 1:
        raise DomainError(f"catalog model {model.name!r} must have alpha + beta >= 1")
    _CATALOG[model.name] = model
    return model

# Textbook phase estimation: overlap costs both repetitions and depth.
QPE = _register(GseeModel("qpe", alpha=2.0, beta=2.0))
# Low-depth estimation in the style of Lin and Tong: no repetition
# penalty, linear overlap cost in depth.
LT20 = _register(GseeModel("lt20", alpha=0.0, beta=1.0))


def catalog() -> tuple[GseeModel, ...]:
    """All built-in estimation models, in registration order."""
    return tuple(_CATALOG.values())


def catalog_model(name: str, depth_unit: str | None = None) -> GseeModel:
    """Look up a built-in model, optionally retagged with ``depth_unit``."""
    try:
        model = _CATALOG[name]
    except KeyError:
        names = ", ".join(sorted(_CATALOG))
        raise DomainError(f"unknown model {name!r}; catalog has: {names}") from None
    if depth_unit is not None and depth_unit != model.depth_unit:
        model = replace(model, depth_unit=validate_depth_unit(depth_unit))
    return model


def gsee_depth(model: GseeModel, accuracy: Accuracy, gamma: float) -> float:
    """Estimation-circuit depth ``1 / (epsilon * gamma**beta)`` at overlap ``gamma``."""
    _check_gamma(gamma)
    return 1.0 / (accuracy.epsilon * gamma**model.beta)


def repetitions(model: GseeModel, gamma: float) -> float:
    """Expected number of circuit repetitions ``1 / gamma**alpha``."""
    _check_gamma(gamma)
    return 1.0 / gamma**model.alpha


def runtime_total(model: GseeModel, candidate: GspCandidate, accuracy: Accuracy) -> float:
    """Total runtime of estimation seeded by ``candidate``, repetition-free form.

    The candidate's success probability is ignored here; use
    :func:`runtime_with_reps` to amortize preparation over repeats.
    """
    require_same_unit(model.depth_unit, candidate.depth_unit, "runtime_total")
    return _runtime(model, candidate.depth, candidate.gamma, accuracy.epsilon, 1.0)


def runtime_with_reps(model: GseeModel, candidate: GspCandidate, accuracy: Accuracy) -> float:
    """Total runtime with preparation repeated until success.

    Each estimation run pays the preparation depth ``1/p_succ`` times on
    average, so the depth term is amplified while the estimation term is
    unchanged.
    """
    require_same_unit(model.depth_unit, candidate.depth_unit, "runtime_with_reps")
    return _runtime(model, candidate.depth, candidate.gamma, accuracy.epsilon, candidate.p_succ)


def runtime_reference(model: GseeModel, reference: Reference, accuracy: Accuracy) -> float:
    """Runtime of the zero-depth baseline, ``1 / (epsilon * gamma0**(alpha+beta))``.

    Evaluated through the same kernel as :func:`runtime_total` so that the
    two agree bit for bit when ``D = 0`` and ``gamma = gamma0``.
    """
    return _runtime(model, 0.0, reference.gamma0, accuracy.epsilon, 1.0)


def _runtime(model: GseeModel, depth: float, gamma: float, epsilon: float, p_succ: float) -> float:
    _check_gamma(gamma)
    estimation = 1.0 / (epsilon * gamma**model.beta)
    return model.prefactor * (1.0 / gamma**model.alpha) * (depth / p_succ + estimation)


def _check_gamma(gamma: float) -> None:
    if not 0 < gamma <= 1:
        raise DomainError(f"gamma must lie in (0, 1], got {gamma}")
