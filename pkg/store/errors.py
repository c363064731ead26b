# store/errors.py
from __future__ import annotations

from typing import Sequence


class StorageError(Exception):
    """Base exception for file-system operations (resolution JSON, catalogs)."""
    pass


class ApplicationError(Exception):
    """Base exception for computations and user input."""
    pass


# --- Series / zeta ------------------------------------------------------------

class OrderMismatchError(ApplicationError):
    """Two truncated objects were combined with different orders."""


class TruncationError(ApplicationError):
    """A coefficient was requested beyond the order a series carries."""


class NonBinarySeriesError(ApplicationError):
    """A mod-2 operation received coefficients outside {0, 1}."""


class InconclusiveError(ApplicationError):
    """The truncation order ran out before a decision could be made.

    Attributes:
        order: The order that was used.
        suggested_order: An order worth retrying with, when one can be named.
    """

    def __init__(self, message: str, order: int | None = None, suggested_order: int | None = None):
        super().__init__(message)
        self.order = order
        self.suggested_order = suggested_order


class AmbiguousZetaError(ApplicationError):
    """The zeta functions vanish and no Fukui data was given to split ±(x^p + y^p)."""


# --- Toric / resolution ---------------------------------------------------------

class NotCoprimeError(ApplicationError):
    """A weight vector or continued fraction input is not coprime."""


class NotWeightedHomogeneousError(ApplicationError):
    """The support does not lie on a single weighted line."""


class DegenerateError(ApplicationError):
    """The face polynomial has a repeated root."""


class ResolutionValidationError(ApplicationError):
    """Resolution data violates the stratum/divisor invariants.

    Attributes:
        violations: Every violated invariant, in report order.
    """

    def __init__(self, violations: Sequence[object]):
        self.violations = list(violations)
        joined = "; ".join(str(v) for v in self.violations)
        super().__init__(f"invalid resolution data: {joined}")


# --- Germs / classification ---------------------------------------------------

class GermParseError(ApplicationError):
    """A germ expression could not be parsed.

    Attributes:
        position: Zero-based character offset of the offending token.
    """

    def __init__(self, message: str, text: str, position: int):
        self.text = text
        self.position = position
        pointer = " " * position + "^"
        super().__init__(f"{message} at position {position}\n  {text}\n  {pointer}")


class UnsupportedGermError(ApplicationError):
    """The germ has a shape the requested command cannot handle."""


class RegularGermError(ApplicationError):
    """A classification call received a germ with an exponent below 2."""


class DimensionMismatchError(ApplicationError):
    """Two germs compared in a classification have different dimensions."""
