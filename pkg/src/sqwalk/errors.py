"""Exception hierarchy.

Every domain error carries a short machine-readable ``code`` (the class name
without the ``Error`` suffix), which the command-line front end prints as the
one-line failure reason.
"""


class SQWError(Exception):
    """Base class for all domain errors raised by :mod:`sqwalk`."""

    @property
    def code(self) -> str:
        name = type(self).__name__
        return name[:-5] if name.endswith("Error") else name


# graph construction / lookup
class SelfLoopError(SQWError, ValueError):
    pass


class DuplicateEdgeError(SQWError, ValueError):
    pass


class OutOfRangeError(SQWError, ValueError):
    pass


class NoEdgesError(SQWError, ValueError):
    pass


class UnknownNameError(SQWError, KeyError):
    def __str__(self) -> str:  # KeyError quotes its argument otherwise
        return str(self.args[0]) if self.args else ""


class BadParamsError(SQWError, ValueError):
    pass


class TooLargeError(SQWError, ValueError):
    pass


class DisconnectedError(SQWError, ValueError):
    pass


class ParseError(SQWError, ValueError):
    pass


# tessellations
class InvalidTessellationError(SQWError, ValueError):
    def __init__(self, violation):
        super().__init__(str(violation))
        self.violation = violation


class NotTwoTessellableError(SQWError, ValueError):
    pass


# operators
class EmptyPolygonError(SQWError, ValueError):
    pass


class InvalidAmplitudesError(SQWError, ValueError):
    pass


class VectorPolygonMismatchError(SQWError, ValueError):
    pass


class DimensionMismatchError(SQWError, ValueError):
    pass


class NotStochasticError(SQWError, ValueError):
    pass


class SupportMismatchError(SQWError, ValueError):
    pass


class EdgeInIntersectionError(SQWError, ValueError):
    pass


class NotClass2bPrimeError(SQWError, ValueError):
    pass


class NonUniformMatchingVectorError(SQWError, ValueError):
    pass


# reference models
class OddMError(SQWError, ValueError):
    pass


class TooSmallError(SQWError, ValueError):
    pass


class BadRhoError(SQWError, ValueError):
    pass


# search
class NoPeakError(SQWError, ValueError):
    pass


class ZeroProbabilityError(SQWError, ValueError):
    pass
