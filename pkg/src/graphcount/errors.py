class GraphCountError(ValueError):
    """Base class for engine errors."""


class IncompatibleSeriesError(GraphCountError):
    pass


class SeriesKindError(GraphCountError):
    pass


class ConstantTermError(GraphCountError):
    pass


class InconsistentTableError(GraphCountError):
    """A count extracted from a series was negative or not an integer."""


class OracleCapError(GraphCountError):
    pass
