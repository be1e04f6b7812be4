"""Error types raised by the exact-arithmetic and recursion layers.

Every error carries a stable ``code`` string so the CLI can report the
failing module operation without string-matching messages.
"""

from __future__ import annotations


class StrataError(Exception):
    """Base class; ``code`` identifies the failure mode."""

    code = "STRATA_ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)


class PiPowerMismatch(StrataError):
    code = "PI_POWER_MISMATCH"


class NotInvertible(StrataError):
    code = "NOT_INVERTIBLE"


class BadValuation(StrataError):
    code = "BAD_VALUATION"


class Underdetermined(StrataError):
    code = "UNDERDETERMINED"


class EvenIndex(StrataError):
    code = "EVEN_INDEX"


class MissingGenerator(StrataError):
    code = "MISSING_GENERATOR"


class WrongBasis(StrataError):
    code = "WRONG_BASIS"


class TooFewZeros(StrataError):
    code = "TOO_FEW_ZEROS"


class InconsistentProfile(StrataError):
    code = "INCONSISTENT_PROFILE"


class DegreeTooLarge(StrataError):
    code = "DEGREE_TOO_LARGE"


class EmptySignature(StrataError):
    code = "EMPTY_SIGNATURE"


class OddEntry(StrataError):
    code = "ODD_ENTRY"


class NotHyperellipticShape(StrataError):
    code = "NOT_HYPERELLIPTIC_SHAPE"


class SizeMismatch(StrataError):
    code = "SIZE_MISMATCH"


class RouteMismatch(StrataError):
    code = "ROUTE_MISMATCH"


class CacheVersionError(StrataError):
    code = "CACHE_VERSION"
