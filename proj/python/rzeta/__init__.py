"""Arbitrary-precision zeta and digit-restricted Dirichlet sums.

Thin wrapper over the C++ core: values come back both as decimal strings
(carrying the full requested precision) and as double-precision complex
numbers for convenience, always next to a rigorous error bound.
"""

from ._rzeta import (
    DomainError,
    UnsupportedError,
    UsageError,
    check,
    check_families,
    kempner,
    moments,
    zeta,
    zeta_reference,
)

__all__ = [
    "DomainError",
    "UnsupportedError",
    "UsageError",
    "check",
    "check_families",
    "kempner",
    "moments",
    "zeta",
    "zeta_reference",
]
