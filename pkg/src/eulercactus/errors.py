"""Exception types shared by every module."""


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(GraphError, ValueError):
    pass


class InvalidState(GraphError):
    """The graph does not satisfy a structural precondition (Eulerian, connected, ...)."""


class BudgetExceeded(GraphError):
    """An exhaustive enumeration would exceed its configured cap.

    Enumerations never return a truncated result; they raise this instead.
    """

    def __init__(self, what, cap):
        self.what = what
        self.cap = cap
        super().__init__(f"{what} exceeds budget cap={cap}")


class MalformedWalk(GraphError, ValueError):
    def __init__(self, message, index):
        self.index = index
        super().__init__(f"{message} (at index {index})")


class ParseError(GraphError, ValueError):
    def __init__(self, message, line):
        self.line = line
        super().__init__(f"line {line}: {message}")


class GenerationFailed(GraphError):
    pass
