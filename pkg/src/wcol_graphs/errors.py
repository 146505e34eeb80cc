"""Typed errors raised by the graph library.

Every error is a ``ValueError`` so that callers that only care about bad input can catch the broad class, while the
CLI can map specific classes to messages.
"""


class WorkbenchError(ValueError):
    """Base class of all errors raised by wcol_graphs and the workbench."""


class NotConnected(WorkbenchError):
    """The operation needs a connected graph."""


class NullGraph(WorkbenchError):
    """The operation needs a graph with at least one vertex."""


class NoEdge(WorkbenchError):
    """The operation needs a graph with at least one edge."""


class EmptyEndpointSet(WorkbenchError):
    """A path endpoint set is empty."""


class VertexOutOfRange(WorkbenchError):
    """A vertex is not in 0..n-1."""


class RootOutOfRange(VertexOutOfRange):
    """The requested root is not a vertex of the graph."""


class NotAPartition(WorkbenchError):
    """The given parts do not partition the vertex set into nonempty cells."""


class GraphSyntaxError(WorkbenchError):
    """A graph file line could not be parsed."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message if line_number is None else f"line {line_number}: {message}")
        self.line_number = line_number


class DuplicateEdge(GraphSyntaxError):
    """An edge appears twice in a graph file."""


class LoopEdge(GraphSyntaxError):
    """An edge joins a vertex to itself."""


class ScopeMismatch(WorkbenchError):
    """An ordering does not range over the requested scope, or the scope is not inside the graph."""


class NotATree(WorkbenchError):
    """The graph is not a tree."""


class NotAPath(WorkbenchError):
    """The graph is not a path."""


class RadiusZero(WorkbenchError):
    """The construction needs a radius of at least one."""


class InvalidDecomposition(WorkbenchError):
    """A tree or path decomposition is not valid for its graph."""


class InvalidModel(WorkbenchError):
    """A minor model violates one of its invariants."""


class NullPiece(WorkbenchError):
    """A gluing construction received a null graph."""


class BadParams(WorkbenchError):
    """Family parameters are out of range."""


class SizeLimit(WorkbenchError):
    """A configured size cap would be exceeded."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what} needs {size}, which exceeds the configured cap of {cap}")
        self.size = size
        self.cap = cap


class UnknownSuite(WorkbenchError):
    """No verification suite is registered under this name."""


class UnknownTarget(WorkbenchError):
    """No benchmark target is registered under this name."""


class TooFewPoints(WorkbenchError):
    """A growth fit needs at least three samples."""


class InvalidCertificate(WorkbenchError):
    """A parameter certificate does not replay against its graph."""
