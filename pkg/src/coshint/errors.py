"""Exception hierarchy shared by all coshint modules."""


class CoshintError(Exception):
    """Base class for every error raised by this package."""


class DomainError(CoshintError):
    """Parameters lie outside the validity region of a closed form."""


class SingularThetaError(DomainError):
    """theta is congruent to 0 mod 2*pi; the integral is infinite."""


class ExcludedError(DomainError):
    """|Re p| >= n; the integrand is an improper fraction and diverges at 0."""


class NearPoleError(CoshintError):
    """|sin(pi*b)| is below threshold with b away from 0 (b near +-1)."""


class DegenerateBetaError(CoshintError):
    """|sin(beta)| is below threshold; the trig-sum closed forms divide by it."""


class NotIntegerExponentsError(CoshintError):
    """The partial-fraction construction needs integer exponents."""


class BranchError(CoshintError):
    """No continuous arctangent branch exists for the requested angle."""


class NonIntegrableError(CoshintError):
    """The integrand is not integrable over the requested range."""


class BudgetExceededError(CoshintError):
    """Quadrature refinement hit its evaluation budget before converging."""


class ToleranceUnreachableError(CoshintError):
    """Series summation cannot reach the requested tolerance in budget."""


class SlowConvergenceError(CoshintError):
    """theta too close to 0 or 2*pi for the series to converge usefully."""


class PoleTooCloseError(CoshintError):
    """Integration endpoint too close to a pole of the integrand."""
