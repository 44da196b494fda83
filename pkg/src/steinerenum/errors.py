"""Exception hierarchy shared by every enumerator."""


class SteinerEnumError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(SteinerEnumError, ValueError):
    """Malformed graph, unknown vertex/edge, or violated precondition."""


class InfeasibleError(SteinerEnumError):
    """The instance has no solution (e.g. terminals in different components)."""


class IntegrityError(SteinerEnumError):
    """An internal invariant failed; usually a violated structural premise."""


class OracleCapError(SteinerEnumError):
    """Brute-force search space exceeds the configured cap."""
