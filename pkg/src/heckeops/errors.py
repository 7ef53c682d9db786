"""Exception types shared across the package.

Division by zero raises the built-in ZeroDivisionError; everything else
that is a contract violation gets a named class here so callers can
distinguish bad input (ValueError family) from internal bugs.
"""

from __future__ import annotations


class HeckeError(ValueError):
    """Base class for domain errors raised by this package."""


class DenVanishesAtZero(HeckeError):
    """Denominator has a zero constant term, so the series at 0 is undefined."""


class DegreeViolation(HeckeError):
    """Numerator degree is not strictly below the denominator degree."""


class PoleNotRootOfUnity(HeckeError):
    """A pole is not a root of unity within the configured order bound."""


class NotInSpace(HeckeError):
    """The requested operation leaves the space of admissible functions."""


class IndexOutOfRange(HeckeError):
    """An index parameter is outside its documented range."""


class AdmissibilityFailed(HeckeError):
    """Denominator does not satisfy the norm-product identity for this p."""


class NonUniformMultiplicity(HeckeError):
    """Pole multiplicities are not uniform, so no single weight exists."""


class NotAnEigenfunction(HeckeError):
    """The function is not an eigenfunction of the requested operator."""


class StructureViolated(HeckeError):
    """Computed data contradicts the structure theorem; indicates a bug."""


class DuplicatePrime(HeckeError):
    """A prime list contains a repeated entry."""


class SBelowAbscissa(HeckeError):
    """Zeta argument is at or below the abscissa of convergence."""


class InternalMismatch(RuntimeError):
    """Two internally computed routes disagree; indicates a bug."""
