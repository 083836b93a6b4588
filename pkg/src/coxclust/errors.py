"""Exception hierarchy. Every domain failure raised by the package derives
from :class:`CoxclustError` so the CLI can map it to exit status 1."""


class CoxclustError(Exception):
    pass


class CartanError(CoxclustError, ValueError):
    """Invalid Cartan or quiver input (cyclic, non-symmetrizable, bad label)."""


class NonCrystallographicError(CartanError):
    pass


class NotFiniteTypeError(CoxclustError):
    pass


class NotSimplyLacedError(CoxclustError):
    pass


class NotRealRootError(CoxclustError, ValueError):
    pass


class SelectionError(CoxclustError, ValueError):
    pass


class NotAClusterError(CoxclustError):
    pass


class FrameError(CoxclustError):
    """A constructed adapted frame failed one of its invariants."""


class NotTypeAError(CoxclustError):
    pass


class OrbitLimitExceeded(CoxclustError):
    """Raised when an orbit search exceeds its size budget.

    The partial :class:`~coxclust.braid.OrbitReport` is kept on ``report``.
    """

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


class FactorizationError(CoxclustError, ValueError):
    """A reflection factorization does not have the required product."""
