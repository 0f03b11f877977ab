"""Exception types shared across the package."""
from __future__ import annotations


class UnsupportedType(ValueError):
    """Family/rank combination outside the classical A/B/C/D range."""


class CapExceeded(RuntimeError):
    """An enumeration would exceed the configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} has {size} elements, above the cap of {cap}")
        self.size = size
        self.cap = cap


class NotDominant(ValueError):
    """A weight was required to lie in the closed fundamental chamber."""


class NotParabolic(ValueError):
    """A root set is not the positive part of a standard parabolic subsystem."""


class InvalidShape(ValueError):
    """A placed shape or box configuration fails its structural checks."""


class PlacementError(InvalidShape):
    """The relative-position constraints of a configuration are inconsistent."""

    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


class NotStandard(ValueError):
    """A filling or group element is not a standard tableau of the given shape."""


class InvariantViolation(AssertionError):
    """An identity that must hold by construction failed."""
