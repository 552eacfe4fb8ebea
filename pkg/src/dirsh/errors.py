"""Exception types shared across the package."""


class DirshError(Exception):
    """Base class for all package errors."""


class CircuitError(DirshError):
    """Malformed circuit structure (bad operands, cyclic precedence, ...)."""


class TopologyError(DirshError):
    """Malformed or unusable coupling graph."""


class CapacityError(DirshError):
    """Circuit is wider than the target machine."""


class AdjacencyError(DirshError):
    """A swap was requested on a non-adjacent physical pair."""


class QasmParseError(DirshError):
    """Unsupported or malformed OpenQASM input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
