class GraphError(ValueError):
    """Malformed graph input or a reference to an edge that is not there."""


class DisconnectedGraphError(GraphError):
    pass


class NotParkingError(ValueError):
    """The labeling fails the subset condition."""


class RootValueError(NotParkingError):
    """The labeling does not send the root to -1."""


class RankingError(ValueError):
    pass
