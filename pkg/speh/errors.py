"""Exception hierarchy shared by the library, the CLI and the HTTP API."""


class SpehError(Exception):
    """Base class for every error raised by this package."""

    exit_code = 2
    http_status = 422

    def to_dict(self) -> dict:
        return {'error': {'type': type(self).__name__, 'message': str(self)}}


class ParseError(SpehError):
    """Malformed JSON or a payload that does not match its schema."""

    exit_code = 1
    http_status = 400


class DomainError(SpehError):
    """A mathematical precondition does not hold."""


class MixedHalos(DomainError):
    pass


class ZeroDenominator(DomainError):
    pass


class MixedGroups(DomainError):
    pass


class IdentityElement(DomainError):
    pass


class UnsupportedPlace(DomainError):
    pass


class DomainMismatch(DomainError):
    pass


class NotRepresentable(DomainError):
    pass


class InsufficientFilterDepth(DomainError):
    pass


class UnsupportedPair(DomainError):
    pass


class Inconclusive(DomainError):
    pass


class NotNonArchimedean(DomainError):
    pass


class ReducibleModulus(DomainError):
    pass


class FactorizationRequired(DomainError):
    pass


class RangeError(DomainError):
    pass


class UnrecognizedDomainShape(DomainError):
    pass


class NotIntegral(DomainError):
    pass


class MixedRings(DomainError):
    pass
