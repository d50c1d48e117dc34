"""Unit tags for circuit depths and energies.

Depth units form a closed set plus a ``custom:<tag>`` escape hatch.
Comparisons are plain string equality; there are no conversions, because
depths measured in different units are simply not comparable.
"""

from __future__ import annotations

from .errors import UnitMismatchError

CIRCUIT_LAYERS = "circuit-layers"
CONTROLLED_EVOLUTIONS = "controlled-evolutions"
T_COUNT = "t-count"

DEPTH_UNITS = (CIRCUIT_LAYERS, CONTROLLED_EVOLUTIONS, T_COUNT)
CUSTOM_PREFIX = "custom:"

DEFAULT_DEPTH_UNIT = CIRCUIT_LAYERS
DEFAULT_ENERGY_UNIT = "hartree"


def validate_depth_unit(unit: str) -> str:
    """Return ``unit`` if it is a known tag or a non-empty custom tag."""
    if unit in DEPTH_UNITS:
        return unit
    if unit.startswith(CUSTOM_PREFIX) and len(unit) > len(CUSTOM_PREFIX):
        return unit
    known = ", ".join(DEPTH_UNITS)
    raise UnitMismatchError(
        f"unknown depth unit {unit!r}; expected one of {known} or custom:<tag>"
    )


def require_same_unit(left: str, right: str, context: str) -> None:
    if left != right:
        raise UnitMismatchError(
            f"{context}: depth units differ ({left!r} vs {right!r})"
        )
