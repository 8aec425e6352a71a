"""Exception hierarchy.  Every domain error carries a stable ``code`` for the CLI."""


class OqmatError(Exception):
    code = "error"


class UnknownGenerator(OqmatError):
    code = "unknown-generator"


class NegativePowerOfNonInvertible(OqmatError):
    code = "negative-power"


class NonAdmissibleKillSet(OqmatError):
    code = "non-admissible-kill-set"


class NotQNormal(OqmatError):
    code = "not-q-normal"


class MissingImage(OqmatError):
    code = "missing-image"


class RelationViolated(OqmatError):
    code = "relation-violated"


class SizeMismatch(OqmatError):
    code = "size-mismatch"


class NotHomogeneousError(OqmatError):
    code = "not-homogeneous"


class LocalizedAmbient(OqmatError):
    code = "localized-ambient"


class HasCorrections(OqmatError):
    code = "has-corrections"


class InconsistentOracle(OqmatError):
    code = "inconsistent-oracle"


class UnknownSuite(OqmatError):
    code = "unknown-suite"


class ParseError(OqmatError):
    code = "parse-error"

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
