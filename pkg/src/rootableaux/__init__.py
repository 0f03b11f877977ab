"""Standard tableaux of placed shapes (gamma, J) in classical root systems."""
from .errors import (
    CapExceeded,
    InvalidShape,
    InvariantViolation,
    NotDominant,
    NotParabolic,
    NotStandard,
    PlacementError,
    UnsupportedType,
)
from .kernels import BACKEND
from .roots import RootSystem, WeylElement, build_root_system, from_word
from .shapes import (
    PlacedShape,
    conjugate_shape,
    conjugate_tableau,
    enumerate_standard_tableaux,
    interval_conjecture_check,
    is_skew,
    nonemptiness_condition,
    placed_shape,
)
from .calibration import build_calibration_graph, connected_components
from .boxes import BoxConfiguration, Filling, build_book, shape_to_configuration, skew_configuration
from .boxes_c import BookC, book_from_shape, build_book_c, normalize_gamma_c

__all__ = [
    "BACKEND",
    "BookC",
    "BoxConfiguration",
    "CapExceeded",
    "Filling",
    "InvalidShape",
    "InvariantViolation",
    "NotDominant",
    "NotParabolic",
    "NotStandard",
    "PlacedShape",
    "PlacementError",
    "RootSystem",
    "UnsupportedType",
    "WeylElement",
    "book_from_shape",
    "build_book",
    "build_book_c",
    "build_calibration_graph",
    "build_root_system",
    "conjugate_shape",
    "conjugate_tableau",
    "connected_components",
    "enumerate_standard_tableaux",
    "from_word",
    "interval_conjecture_check",
    "is_skew",
    "nonemptiness_condition",
    "normalize_gamma_c",
    "placed_shape",
    "shape_to_configuration",
    "skew_configuration",
]
