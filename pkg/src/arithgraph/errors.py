"""Exception hierarchy.

Every domain error derives from :class:`ArithGraphError`; the class name is
what the CLI reports, so names are kept stable.
"""


class ArithGraphError(Exception):
    """Base class for bad-input errors raised by the library."""


class InternalConsistencyError(AssertionError):
    """A mathematical identity that must hold failed to hold (a bug, not bad input)."""


# graph construction
class LoopEdge(ArithGraphError):
    pass


class DuplicateEdge(ArithGraphError):
    pass


class Disconnected(ArithGraphError):
    pass


class TooFewVertices(ArithGraphError):
    pass


class EmptyEdgeSet(ArithGraphError):
    pass


class DuplicateLabel(ArithGraphError):
    pass


class UnknownVertex(ArithGraphError):
    pass


# exact linear algebra
class NoKernel(ArithGraphError):
    pass


class NotRankDeficientByOne(ArithGraphError):
    pass


class NoSolution(ArithGraphError):
    pass


class DimensionMismatch(ArithGraphError):
    pass


# arithmetical structures
class NonPositiveEntry(ArithGraphError):
    pass


class GcdNotOne(ArithGraphError):
    pass


class DefiningEquationViolated(ArithGraphError):
    def __init__(self, vertex, message=None):
        self.vertex = vertex
        super().__init__(message or f"R(v)S(v) != sum of neighbouring R at vertex {vertex!r}")


class DivisibilityFails(ArithGraphError):
    def __init__(self, vertex, message=None):
        self.vertex = vertex
        super().__init__(message or f"neighbour sum of R not divisible by R at vertex {vertex!r}")


class KernelNotPositive(ArithGraphError):
    pass


# morphisms
class NotAMorphism(ArithGraphError):
    def __init__(self, edge, message=None):
        self.edge = edge
        super().__init__(message or f"edge {edge!r} maps to a non-adjacent pair of distinct vertices")


class NotHarmonic(ArithGraphError):
    def __init__(self, vertex, edge1, edge2, counts):
        self.vertex = vertex
        self.edges = (edge1, edge2)
        self.counts = counts
        super().__init__(
            f"not harmonic at {vertex!r}: {counts[0]} edge(s) over {edge1!r} "
            f"but {counts[1]} over {edge2!r}"
        )


class ConstantMorphism(ArithGraphError):
    pass


# divisors and groups
class GraphMismatch(ArithGraphError):
    pass


class NotPrincipal(ArithGraphError):
    pass


class NonzeroDegree(ArithGraphError):
    pass


class StructureMismatch(ArithGraphError):
    pass


# workspace documents
class DocumentError(ArithGraphError):
    pass
