"""Exception hierarchy shared by all maxspec modules."""


class MaxspecError(Exception):
    """Base class for all numerical/validation failures raised by maxspec."""


class PoleProximity(MaxspecError):
    """Evaluation point is within the exclusion radius of a coth pole."""


class BoundaryHit(MaxspecError):
    """A zero or pole sits too close to a contour for phase tracking."""


class NonConvergence(MaxspecError):
    """Newton polishing failed to reach the requested residual."""


class EmptyRange(MaxspecError):
    """Requested sampling range does not intersect the admissible strip."""


class NoQualifyingRoots(MaxspecError):
    """No root satisfies the selection predicate (e.g. |Re| >= re_min)."""


class QuadratureFailure(MaxspecError):
    """Adaptive quadrature could not reach the requested relative accuracy."""


class AmbiguousMatchWarning(UserWarning):
    """Two truncated-problem roots competed for the same trajectory slot."""
