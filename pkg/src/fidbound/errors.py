"""Exception hierarchy for fidbound."""


class FidboundError(Exception):
    """Base class for all fidbound errors."""


class DomainError(FidboundError, ValueError):
    """An input lies outside its mathematical domain."""


class HyperParamError(DomainError):
    """A family hyper-parameter (mu or M) is missing, extraneous, or invalid."""


class FamilyMismatch(FidboundError, ValueError):
    """A pairwise operation was asked of states from incompatible families."""


class CutoffExceeded(FidboundError, RuntimeError):
    """A number-basis expansion cannot reach the tail tolerance within the cap.

    Signals the caller to rely on closed forms only.
    """


class PartnerOutOfDomain(FidboundError, ValueError):
    """No partner parameter inside the family domain achieves the requested gap."""


class NoFeasiblePoint(FidboundError, RuntimeError):
    """Every point of an oracle sweep is infeasible for the requested gap."""
