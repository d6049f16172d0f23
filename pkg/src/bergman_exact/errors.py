"""Exception hierarchy.  Every error carries a stable machine-readable ``code``."""

from __future__ import annotations


class BergmanError(Exception):
    code = "error"


class ParseError(BergmanError, ValueError):
    code = "parse_error"


class DimensionMismatch(BergmanError, ValueError):
    """Operands disagree in coordinate kind or number of variables."""

    code = "dimension_mismatch"


class InvalidDomain(BergmanError, ValueError):
    code = "invalid_domain"


class MomentUnavailable(BergmanError):
    """The domain has no exact moment formula (e.g. an ellipsoid given only by r)."""

    code = "moment_unavailable"


class SingularMatrix(BergmanError, ArithmeticError):
    code = "singular_matrix"


class SingularGram(SingularMatrix):
    """Gram matrix of a supposedly independent basis turned out singular."""

    code = "singular_gram"


class InvalidPair(BergmanError, ValueError):
    """A claimed polynomial biholomorphism / inverse pair fails an identity."""

    code = "invalid_pair"

    def __init__(self, identity: str, message: str | None = None):
        self.identity = identity
        super().__init__(message or f"identity failed: {identity}")
