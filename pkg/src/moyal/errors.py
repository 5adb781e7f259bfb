"""Exception hierarchy.

ValidationError subclasses signal a violated precondition (CLI exit code 2),
InvariantBreach subclasses signal that a result contradicts a property the
library relies on (CLI exit code 3).
"""


class MoyalError(Exception):
    """Base class for all moyal errors."""


class ValidationError(MoyalError):
    pass


class InvariantBreach(MoyalError):
    pass


class AntisymmetryViolation(ValidationError):
    pass


class DimensionMismatch(ValidationError):
    pass


class TransformUnavailable(ValidationError):
    pass


class DerivativeUnavailable(ValidationError):
    pass


class SpaceMismatch(ValidationError):
    pass


class AliasRisk(ValidationError):
    pass


class GridMismatch(ValidationError):
    pass


class TailMass(ValidationError):
    pass


class ThetaSingular(ValidationError):
    pass


class MemoryGuard(ValidationError):
    pass


class NontrivialSpace(ValidationError):
    pass


class OrderCap(ValidationError):
    pass


class DomainError(ValidationError):
    pass


class UnsupportedTheta(ValidationError):
    pass


class DomainTooSmall(ValidationError):
    pass


class DescriptorInvalid(ValidationError):
    pass


class CertificateNotFound(InvariantBreach):
    pass


class DominationFailed(InvariantBreach):
    pass


class PointwiseMismatch(InvariantBreach):
    pass
