"""Exception types shared across the package."""


class YBKnotError(Exception):
    """Base class for all package errors."""


class FormatError(YBKnotError, ValueError):
    """Malformed table, term, braid word, diagram or file."""


class SignatureError(YBKnotError, TypeError):
    """A term or presentation does not match the model's signature."""


class UnboundGeneratorError(YBKnotError, KeyError):
    """A term mentions a generator that the environment does not bind."""


class ClosureError(YBKnotError, ValueError):
    """Evaluation left the declared carrier of a component."""


class DegenerateError(YBKnotError, ValueError):
    """An operation needs a non-degenerate switch."""


class MissingInverseError(YBKnotError, ValueError):
    """A negative crossing or sigma^-1 was used without an inverse map."""


class CarrierTooLargeError(YBKnotError, ValueError):
    """Exhaustive check refused because the carrier exceeds the size cap."""


class PreconditionError(YBKnotError, ValueError):
    """An input fails a documented precondition (e.g. non-biquandle switch)."""
