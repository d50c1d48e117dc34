"""Spectral filters that boost a state's ground-space overlap.

A filter is a non-increasing, non-negative weight profile over energy.
Applying one rescales each energy eigencomponent of a state and
renormalizes; because lower energies never get smaller weights, the
ground-space overlap can only grow.  Application is exact, through a full
eigendecomposition, so it is limited to dimensions the dense solver
handles.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..errors import DomainError, ResourceLimitError
from .model import Hamiltonian, StateVector
from .solve import DEFAULT_DEGENERACY_TOL, DENSE_DIM_LIMIT

GAUSSIAN = "gaussian"
EXPONENTIAL = "exponential"
STEP = "step"

FILTER_KINDS = (GAUSSIAN, EXPONENTIAL, STEP)

#: Below this ground-space amplitude a filter has nothing to amplify.
_RECOVERABLE_OVERLAP = 1e-12


@dataclass(frozen=True)
class FilterSpec:
    """Parameters of one energy filter.

    * ``gaussian``: ``exp(-(E - center)**2 / (2 * width**2))``; monotone on
      the spectrum only when ``center <= E0``, which is checked at
      application time.
    * ``exponential``: ``exp(-rate * (E - pivot))``; the pivot only scales
      the profile and cancels on normalization.
    * ``step``: 1 at or below ``cutoff``, 0 above; the projector limit of
      the family.  The cutoff must not fall below the ground energy.
    """

    kind: str
    center: float | None = None
    width: float | None = None
    pivot: float | None = None
    rate: float | None = None
    cutoff: float | None = None

    def __post_init__(self) -> None:
        required = {
            GAUSSIAN: ("center", "width"),
            EXPONENTIAL: ("pivot", "rate"),
            STEP: ("cutoff",),
        }
        if self.kind not in required:
            raise DomainError(
                f"unknown filter kind {self.kind!r}; expected one of {FILTER_KINDS}"
            )
        for name in required[self.kind]:
            if getattr(self, name) is None:
                raise DomainError(f"{self.kind} filter requires {name}")
        for name in ("center", "width", "pivot", "rate", "cutoff"):
            if name not in required[self.kind] and getattr(self, name) is not None:
                raise DomainError(f"{self.kind} filter does not take {name}")
        if self.kind == GAUSSIAN and self.width <= 0:
            raise DomainError(f"gaussian width must be positive, got {self.width}")
        if self.kind == EXPONENTIAL and self.rate <= 0:
            raise DomainError(f"exponential rate must be positive, got {self.rate}")

    @classmethod
    def gaussian(cls, center: float, width: float) -> FilterSpec:
        return cls(kind=GAUSSIAN, center=center, width=width)

    @classmethod
    def exponential(cls, pivot: float, rate: float) -> FilterSpec:
        return cls(kind=EXPONENTIAL, pivot=pivot, rate=rate)

    @classmethod
    def step(cls, cutoff: float) -> FilterSpec:
        return cls(kind=STEP, cutoff=cutoff)


@dataclass(frozen=True)
class BoostResult:
    boosted: StateVector
    gamma_before: float
    gamma_after: float


def filter_weights(spec: FilterSpec, energies: np.ndarray) -> np.ndarray:
    """Weights for sorted eigenvalues, rescaled so the largest weight is 1.

    The rescaling is a positive constant, so any normalized quantity built
    from the weights is unchanged; it exists to keep steep exponential
    profiles out of overflow territory.
    """
    e0 = float(energies[0])
    if spec.kind == GAUSSIAN:
        if spec.center > e0:
            raise DomainError(
                f"gaussian filter center {spec.center} exceeds the ground "
                f"energy {e0}; the filter would amplify excited states"
            )
        weights = np.exp(-((energies - spec.center) ** 2) / (2.0 * spec.width**2))
    elif spec.kind == EXPONENTIAL:
        # Shift by e0 instead of the pivot; the difference is a constant
        # factor exp(-rate * (e0 - pivot)) that normalization removes.
        weights = np.exp(-spec.rate * (energies - e0))
    else:
        if spec.cutoff < e0:
            raise DomainError(
                f"step filter cutoff {spec.cutoff} lies below the ground "
                f"energy {e0}; the filtered state would vanish"
            )
        weights = (energies <= spec.cutoff).astype(np.float64)

    peak = float(weights.max())
    if peak == 0.0 or not np.isfinite(peak):
        raise DomainError(
            "filter weights degenerate on this spectrum (all zero or "
            "non-finite); loosen the filter parameters"
        )
    return weights / peak


def boost_filter(
    hamiltonian: Hamiltonian,
    prepared: StateVector,
    spec: FilterSpec,
    degeneracy_tol: float = DEFAULT_DEGENERACY_TOL,
) -> BoostResult:
    """Apply a filter to ``prepared`` and report the overlap change.

    Overlaps are measured against the ground space of ``hamiltonian``
    resolved with ``degeneracy_tol``.  States with no recoverable
    ground-space component are rejected: a filter rescales existing
    components, it cannot create one.
    """
    if prepared.dim != hamiltonian.dim:
        raise DomainError(
            f"state dimension {prepared.dim} does not match Hamiltonian "
            f"dimension {hamiltonian.dim}"
        )
    if hamiltonian.dim > DENSE_DIM_LIMIT:
        raise ResourceLimitError(
            f"exact filter application diagonalizes the full operator and "
            f"is capped at dim {DENSE_DIM_LIMIT}; got {hamiltonian.dim}"
        )

    energies, vectors = np.linalg.eigh(hamiltonian.to_dense())
    ground = energies < energies[0] + degeneracy_tol

    components = vectors.conj().T @ prepared.amplitudes
    gamma_before = min(1.0, float(np.linalg.norm(components[ground])))
    if gamma_before <= _RECOVERABLE_OVERLAP:
        raise DomainError(
            f"prepared state has ground-space overlap {gamma_before:.3g}; "
            "a filter cannot recover a state orthogonal to the ground space"
        )

    weights = filter_weights(spec, energies)
    filtered = weights * components
    total = float(np.linalg.norm(filtered))
    if total == 0.0:
        raise DomainError(
            "filter annihilated the prepared state; loosen the filter "
            "parameters"
        )

    gamma_after = min(1.0, float(np.linalg.norm(filtered[ground])) / total)
    boosted = StateVector(dim=prepared.dim, amplitudes=vectors @ (filtered / total))
    return BoostResult(
        boosted=boosted, gamma_before=gamma_before, gamma_after=gamma_after
    )
