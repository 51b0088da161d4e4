class TiltcharError(Exception):
    pass


class ConfigError(TiltcharError, ValueError):
    """Bad root datum, malformed input file, or invalid parameter."""


class RangeError(TiltcharError):
    """A request that needs data beyond a table's precomputed length bound."""


class BalanceError(TiltcharError):
    """The balancing algorithm failed.

    ``kind`` is one of ``"unbalancedAbove"``, ``"maxStepsExceeded"`` or
    ``"unknownLabel"``; ``state`` holds the partial run when available.
    """

    def __init__(self, kind: str, message: str, state=None):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.state = state
