"""Exception types shared across the package."""


class RainbowTriError(Exception):
    """Base class for all package-specific errors."""


class InconsistentRotation(RainbowTriError):
    """A rotation system is malformed or does not describe a disk around a vertex."""


class NotATriangulation(RainbowTriError):
    """The graph violates a triangulation invariant; the message names it."""


class SchemaError(RainbowTriError):
    """An input document does not match the expected JSON schema."""


class CycleCoversGraph(RainbowTriError):
    """A separation query was asked about a cycle spanning every vertex."""


class TooLargeForOracle(RainbowTriError):
    """The brute-force cut scan was requested beyond its configured size bound."""


class InvalidK(RainbowTriError):
    """Ring-tower family parameter out of range (k must be at least 5)."""


class InvalidN(RainbowTriError):
    """Strip family parameter out of range (n must be at least 3)."""


class UnknownFixture(RainbowTriError):
    """Requested fixture name is not in the catalogue."""


class MissingLabels(RainbowTriError):
    """A coloring formula needs family vertex labels the graph does not carry."""


class PartialColoring(RainbowTriError):
    """An edge coloring does not cover every edge of the host graph."""


class ImproperColoring(RainbowTriError):
    """An operation requiring a proper edge coloring received an improper one."""


class NeighborCycleMissing(RainbowTriError):
    """A vertex neighborhood does not induce the cycle a triangulation guarantees."""
