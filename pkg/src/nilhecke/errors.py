"""Exception hierarchy. Every error carries a short machine-readable ``code``."""


class NilHeckeError(Exception):
    code = "error"

    def __init__(self, detail=""):
        super().__init__(detail)
        self.detail = detail


class DiagonalNotTwo(NilHeckeError):
    code = "DiagonalNotTwo"


class PositiveOffDiagonal(NilHeckeError):
    code = "PositiveOffDiagonal"


class AsymmetricZero(NilHeckeError):
    code = "AsymmetricZero"


class OrderMismatch(NilHeckeError):
    code = "OrderMismatch"


class BadGeneratorIndex(NilHeckeError):
    code = "BadGeneratorIndex"


class LengthMismatch(NilHeckeError):
    code = "LengthMismatch"


class SystemMismatch(NilHeckeError):
    code = "SystemMismatch"


class InexactDivision(NilHeckeError):
    """Raised when a division expected to be exact leaves a remainder.

    This never results from valid input; it means an action convention is wrong.
    """

    code = "InexactDivision"


class NotLinear(NilHeckeError):
    code = "NotLinear"


class EndpointMismatch(NilHeckeError):
    code = "EndpointMismatch"


class HasD1(NilHeckeError):
    code = "HasD1"


class OracleBoundExceeded(NilHeckeError):
    code = "OracleBoundExceeded"


class OracleFailure(NilHeckeError):
    code = "OracleFailure"


class NonConstantEntries(NilHeckeError):
    code = "NonConstantEntries"


class InputError(NilHeckeError):
    """Malformed user input (system files, words, bitstrings)."""

    code = "InputError"
