"""Exception hierarchy shared by all trnplace modules."""


class TrnPlaceError(Exception):
    """Base class for every error raised by this package."""


class ParseError(TrnPlaceError):
    """Malformed topology or ranking file."""

    def __init__(self, message, record=None):
        super().__init__(message)
        self.record = record


class ValidationError(TrnPlaceError):
    """Input parsed but violates a topology invariant."""

    def __init__(self, message, record=None, components=None):
        super().__init__(message)
        self.record = record
        # for disconnected graphs: one list of node labels per component
        self.components = components


class InvalidParams(TrnPlaceError):
    """Generator or run parameters out of range."""


class DomainError(TrnPlaceError, ValueError):
    """Numeric argument outside its documented domain."""


class NodeNotFound(TrnPlaceError, KeyError):
    pass


class UnknownNode(TrnPlaceError, KeyError):
    pass


class NoConvergence(TrnPlaceError):
    """Power iteration hit max_iter without meeting the tolerance."""

    def __init__(self, max_iter, trial_index=None):
        msg = f"power iteration did not converge within {max_iter} iterations"
        if trial_index is not None:
            msg += f" (trial {trial_index})"
        super().__init__(msg)
        self.max_iter = max_iter
        self.trial_index = trial_index
