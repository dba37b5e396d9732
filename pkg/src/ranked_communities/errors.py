"""Exception types raised across the package."""


class GraphError(ValueError):
    """Base class for invalid graph input."""


class IndexOutOfRange(GraphError, IndexError):
    pass


class NonPositiveWeight(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class ParseError(GraphError):
    """Malformed edge-list text; ``line`` is 1-based."""

    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class InvalidParams(GraphError):
    pass


class DisconnectedGraph(GraphError):
    pass


class DegenerateGraph(GraphError):
    pass


class InvalidInput(ValueError):
    pass


class InvalidPartition(ValueError):
    pass


class UnknownCommunity(KeyError):
    pass


class EmptyGraph(ValueError):
    pass


class NoConvergence(RuntimeError):
    """An iterative method hit its iteration cap.

    ``result`` carries the last iterate (a partition or score vector).
    """

    def __init__(self, message, result=None, iterations=None):
        super().__init__(message)
        self.result = result
        self.iterations = iterations
