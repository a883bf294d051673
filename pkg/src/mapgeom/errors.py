class MapGeomError(Exception):
    """Base class for all errors raised by mapgeom."""


class ParseError(MapGeomError, ValueError):
    """Malformed text input; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


class GroundSetMismatch(MapGeomError, ValueError):
    pass


class StructuralError(MapGeomError):
    """A map violates an axiom that an operation relies on."""


class GraphError(MapGeomError, ValueError):
    pass


class ScaleBoundError(MapGeomError):
    """Refusal to run a brute-force computation beyond its configured bound."""


class WordError(MapGeomError, ValueError):
    """Invalid surface word, or a move whose pattern does not match."""


class GeometryError(MapGeomError, ValueError):
    pass


class NotSManifoldError(MapGeomError, ValueError):
    pass
