"""Exact unitization norms on truncated normed Riesz spaces."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    ConfigurationError,
    InputError,
    NormLookupError,
    Q,
    Rational,
    UnsupportedCarrierError,
    format_rational,
)
from .carriers import (  # noqa: E402
    CompactSupportCarrier,
    CoordinateCarrier,
    CoordinateVector,
    IntervalCarrier,
    carrier_from_config,
    make_fn,
    support_extension_witness,
)
from .plfunction import PLFunction  # noqa: E402
from .unitization import UnitizedElement, bracket, u_abs, u_leq  # noqa: E402
from .norms import gauge_norm, norm0, norm1, normC, uL1  # noqa: E402

__all__ = [
    "CompactSupportCarrier",
    "ConfigurationError",
    "CoordinateCarrier",
    "CoordinateVector",
    "InputError",
    "IntervalCarrier",
    "NormLookupError",
    "PLFunction",
    "Q",
    "Rational",
    "UnitizedElement",
    "UnsupportedCarrierError",
    "bracket",
    "carrier_from_config",
    "format_rational",
    "gauge_norm",
    "make_fn",
    "norm0",
    "norm1",
    "normC",
    "support_extension_witness",
    "u_abs",
    "u_leq",
    "uL1",
]
