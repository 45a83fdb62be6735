"""Error types raised across intensity-distortion."""


class ProfileFormatError(ValueError):
    """Profile text could not be parsed."""


class NoModerateRankError(ValueError):
    """Intensity rank requested for a single-alternative preference."""


class DegenerateProfileError(ValueError):
    """No alternative can be the optimum under any consistent metric."""


class BudgetExceededError(ValueError):
    """Intensity-assignment enumeration exceeds the configured budget."""


class InfinitePoIIError(ValueError):
    """Price of ignoring intensities has an infinite numerator."""


class InfeasibleCertificateError(ValueError):
    """A dual assignment violates a dual constraint or sign condition."""


class EmptyCoreError(ValueError):
    """No agent qualifies for the robust rule's core electorate."""


class IdentityViolatedError(RuntimeError):
    """The scoring-game equilibrium identity does not hold."""


class NoFeasibleAlternativeError(RuntimeError):
    """No alternative admits a fractional perfect matching."""


class LpError(RuntimeError):
    """Solver output failed its exactness post-check."""
