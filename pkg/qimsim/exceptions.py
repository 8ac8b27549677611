from __future__ import annotations

from click import ClickException


class QimsimError(Exception):
    """Base exception for all qimsim errors."""

    pass


class QimsimConsoleError(QimsimError, ClickException):
    """Custom exception for qimsim console errors."""

    pass


class ConfigLoaderError(QimsimError):
    """Custom exception for configuration loading errors."""

    pass


class NumericGuardError(QimsimError):
    """Base for configurations the numerics refuse to compute."""

    pass


class SamplingViolation(NumericGuardError):
    """Raised when a quadratic phase would alias on the sampling grid."""

    pass


class DegenerateGeometry(NumericGuardError):
    """Raised when a geometry makes a closed form or a mode diverge."""

    pass


class ParaxialViolation(NumericGuardError):
    """Raised when the mode axis leaves the paraxial regime."""

    pass


class ModeAxisMismatch(QimsimError):
    """Raised when transfer matrices or sources disagree on the mode axis."""

    pass


class EmptyPattern(QimsimError):
    """Raised when a pattern is identically zero and cannot be normalized."""

    pass


class PairingOutOfRange(QimsimError):
    """Raised when no weighted mode finds its classical partner on the grid."""

    pass


class NoFringes(QimsimError):
    """Raised when a pattern has too few interior maxima to define a spacing."""

    pass


class DetectorMismatch(QimsimError):
    """Raised when a reduction is requested that the detector does not support."""

    pass


class NonCommutingFamily(QimsimError):
    """Raised when a measurement family is not pairwise commuting."""

    pass


class DimMismatch(QimsimError):
    """Raised when operator and state dimensions disagree."""

    pass


class NotTracePreserving(QimsimError):
    """Raised when Kraus operators do not satisfy the normalization condition."""

    pass


class NotMaximallyEntangled(QimsimError):
    """Raised when a state's Schmidt coefficients are not all equal."""

    pass


class DimUnsupported(QimsimError):
    """Raised when PPT is asked to decide separability outside 2x2 and 2x3."""

    pass


class InvalidDistribution(QimsimError):
    """Raised when ensemble weights do not form a probability distribution."""

    pass


class InvalidState(QimsimError):
    """Raised when a state or observable violates its defining invariants."""

    pass


class BenchParseError(QimsimError):
    """Raised for syntax and semantic errors in bench files."""

    def __init__(self, message: str, line: int, column: int, token: str) -> None:
        self.message = message
        self.line = line
        self.column = column
        self.token = token
        super().__init__(f"{line}:{column}: {message} (near '{token}')")


class BenchLoaderError(QimsimError):
    """Raised when a bench file or preset cannot be found, read or overridden."""

    pass


class MaskFileError(QimsimError):
    """Raised when a sampled mask file cannot be read."""

    pass


class ArtifactPersistenceError(QimsimError):
    """Custom exception for artifact persisting errors."""

    pass


class SummaryPersistenceError(QimsimError):
    """Custom exception for summary persistence errors."""

    pass


class BenchRunError(QimsimError):
    """Custom exception for errors during bench run coordination."""

    pass


class SerializerError(QimsimError):
    """Custom exception for serializer errors."""

    pass


class InvalidGrid(QimsimError):
    """Raised when an axis or sampled field violates its invariants."""

    pass
