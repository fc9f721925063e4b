"""Exception types shared across the package."""

from __future__ import annotations


class ExcessKitError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(ExcessKitError):
    """Malformed input file; carries the path and 1-based line number."""

    def __init__(self, path: str, line: int, message: str):
        self.path = path
        self.line = line
        self.message = message
        super().__init__(f"{path}:{line}: {message}")


class CatalogError(ExcessKitError):
    """Unknown catalog name or inconsistent catalog contents."""


class NotInSpan(ExcessKitError):
    """Target vector is not in the span of the given basis."""


class NotABasis(ExcessKitError):
    """The indexed vectors are linearly dependent."""


class EffortExceeded(ExcessKitError):
    """Exact search would exceed the node budget.

    Carries the constructive certificate so callers still get a valid
    (possibly sub-maximal) zero-sum subset.
    """

    def __init__(self, needed: int, budget: int, certificate):
        self.needed = needed
        self.budget = budget
        self.certificate = certificate
        super().__init__(
            f"exact search needs ~{needed} nodes, budget is {budget}; "
            f"constructive certificate of size {certificate.size} is attached"
        )


class NegativeB2(ExcessKitError):
    """Derived mod-2 second Betti number would be negative."""


class SignatureExceedsRank(ExcessKitError):
    """|signature| exceeds the mod-2 second Betti number."""


class EmptyFamily(ExcessKitError):
    """A surface family must have at least one member."""


class InvalidGenus(ExcessKitError):
    """Nonorientable genus must be a positive integer."""


class NotModTwoNull(ExcessKitError):
    """Branch surface class is nonzero mod 2; no double cover is available."""


class OddEulerNumber(ExcessKitError):
    """Euler number must be even to halve it exactly."""


class DimensionMismatch(ExcessKitError):
    """Bit-vector dimension does not match the ambient profile."""


class NotAPlaneFamily(ExcessKitError):
    """Plane audits require every member to have genus 1."""


class EulerTooSmall(ExcessKitError):
    """Plane audits require every member to satisfy |e| > 2."""
