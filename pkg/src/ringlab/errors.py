"""Exception hierarchy shared by every ringlab module."""


class RingLabError(Exception):
    """Base class; ``kind`` is the machine-readable tag used in JSON errors."""

    kind = "error"


class MalformedTableError(RingLabError):
    kind = "malformed-table"


class TrivialRingError(RingLabError):
    kind = "trivial-ring"


class AxiomError(RingLabError):
    kind = "axiom-violation"

    def __init__(self, report):
        super().__init__(f"ring axiom violated: {report.axiom} at {report.witness}")
        self.report = report


class DomainError(RingLabError, ValueError):
    kind = "domain"


class CapacityError(RingLabError):
    kind = "capacity"

    def __init__(self, message, dropped=()):
        super().__init__(message)
        self.dropped = list(dropped)


class NotAnIdealError(RingLabError):
    kind = "not-an-ideal"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class MalformedBimoduleError(RingLabError):
    kind = "malformed-bimodule"

    def __init__(self, identity, witness):
        super().__init__(f"bimodule identity fails: {identity} at {witness}")
        self.identity = identity
        self.witness = witness


class ParseError(RingLabError):
    kind = "parse"

    def __init__(self, message, position, expected=(), reason="syntax"):
        detail = f"{message} at offset {position}"
        if expected:
            detail += f" (expected one of: {', '.join(sorted(expected))})"
        super().__init__(detail)
        self.position = position
        self.expected = frozenset(expected)
        self.reason = reason


class RegistryError(RingLabError):
    kind = "registry"


class InternalConsistencyError(RingLabError):
    """A computed invariant that must always hold did not."""

    kind = "internal"
