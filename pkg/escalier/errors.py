"""
Exception hierarchy for escalier

Every error subclasses the builtin a caller would naturally catch, so
``except ValueError`` keeps working around library calls.
"""

from typing import Optional, Sequence


class EscalierError(Exception):
    """Base class for all escalier errors"""


class FieldMismatchError(EscalierError, TypeError):
    """Scalars from two different fields were combined"""


class ScalarParseError(EscalierError, ValueError):
    """Text could not be parsed as an exact scalar"""


class DimensionMismatchError(EscalierError, ValueError):
    """Terms, points or polynomials with different variable counts"""


class DuplicatePointError(EscalierError, ValueError):
    """The same point occurs twice in an input list"""

    def __init__(self, first: int, second: int, point: Sequence = (), unit: str = "index"):
        self.first = first
        self.second = second
        self.point = tuple(point)
        rendered = ", ".join(str(c) for c in self.point)
        super().__init__(
            f"duplicate point ({rendered}) at {unit} {first} and {unit} {second}"
        )


class PointParseError(EscalierError, ValueError):
    """Malformed point input (ragged rows, bad scalars, bad JSON)"""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotAnOrderIdealError(EscalierError, ValueError):
    """A term set is not closed under taking divisors"""


class MixedDegreeError(EscalierError, ValueError):
    """A potential expansion was asked for terms of different degrees"""


class ProjectionCollisionError(EscalierError, ValueError):
    """Two interpolation points share the same projection"""


class SingularSystemError(EscalierError, ValueError):
    """An exact linear system has no unique solution"""


class InconsistentInputError(EscalierError, ValueError):
    """Caller supplied an escalier or minimal basis that does not match the points"""


class InternalInvariantError(EscalierError, RuntimeError):
    """A runtime-checked algorithm invariant failed"""


class ConfigError(EscalierError, ValueError):
    """Invalid session configuration"""
