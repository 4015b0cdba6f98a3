"""Partial-fraction route to the integral value, fully constructive.

For integer exponents n and p (0 <= p < n) the denominator
x**(2n) - 2*x**n*cos(theta) + 1 factors into the n quadratics
x**2 - 2*x*cos(omega_k) + 1 with root angles omega_k = (theta + 2*pi*k)/n.
The integrand then splits into simple fractions whose antiderivatives
are arctangents, and collecting the arctangent values at x = 1 gives the
same closed value as the master formula.  This module implements every
stage of that construction so each can be checked independently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .closed_form import _sinc, eval_theta_pi_limit
from .errors import (
    BranchError,
    DomainError,
    ExcludedError,
    NotIntegerExponentsError,
    SingularThetaError,
)
from .params import IntegrandSpec, canonicalize_theta
from .trig_sums import assemble

_THETA_PI_TOL = 1e-12


def _as_int(x, name: str) -> int:
    xc = complex(x)
    if xc.imag != 0.0 or xc.real != round(xc.real):
        raise NotIntegerExponentsError(f"{name} = {x!r} is not an integer")
    return int(round(xc.real))


def root_angles(n: int, theta: float) -> list[float]:
    """The n root angles omega_k = (theta + 2*pi*k)/n, ascending."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0.0 < theta < 2.0 * math.pi:
        raise ValueError(f"theta must lie in (0, 2*pi), got {theta}")
    return [(theta + 2.0 * math.pi * k) / n for k in range(n)]


def fraction_coefficient(omega: float, spec: IntegrandSpec) -> float:
    """Numerator of the simple fraction attached to the root angle omega.

    The 0/0 ratio at the root is resolved by differentiating numerator
    and denominator, which yields 2*sin(omega)*(cos(p*omega) -
    cos(zeta))/(n*sin(theta)).
    """
    sin_theta = math.sin(spec.theta)
    if sin_theta == 0.0:
        raise SingularThetaError("sin(theta) = 0: coefficients undefined")
    p = _as_int(spec.p, "p")
    return (2.0 * math.sin(omega) * (math.cos(p * omega) - math.cos(spec.zeta))
            / (spec.n * sin_theta))


@dataclass(frozen=True)
class PartialTerm:
    omega: float
    coeff: float


@dataclass(frozen=True)
class Decomposition:
    spec: IntegrandSpec
    terms: tuple[PartialTerm, ...]


def _check_decompose_spec(spec: IntegrandSpec) -> tuple[int, int, float]:
    n = _as_int(spec.n, "n")
    p = _as_int(spec.p, "p")
    if not 0 <= p < n:
        raise ExcludedError(f"need 0 <= p < n, got p={p}, n={n}")
    theta_c, _ = canonicalize_theta(spec.theta)
    if abs(theta_c - math.pi) <= _THETA_PI_TOL:
        raise DomainError(
            "theta = pi gives repeated roots; use the repeated-root limit instead"
        )
    return n, p, theta_c


def decompose(spec: IntegrandSpec) -> Decomposition:
    """Split the integrand into its n simple fractions."""
    n, _, theta_c = _check_decompose_spec(spec)
    spec_c = spec if spec.theta == theta_c else replace(spec, theta=theta_c)
    terms = tuple(
        PartialTerm(omega=w, coeff=fraction_coefficient(w, spec_c))
        for w in root_angles(n, theta_c)
    )
    return Decomposition(spec=spec_c, terms=terms)


def reconstruct(d: Decomposition, x: float) -> float:
    """Evaluate the sum of simple fractions at x in (0, 1).

    Equals the original integrand (x**p + x**(-p) - 2*cos(zeta)) /
    ((x**n + x**(-n) - 2*cos(theta)) * x) wherever x avoids the poles;
    for theta in (0, 2*pi) there are no real poles.
    """
    total = 0.0
    for term in d.terms:
        total += term.coeff / (x * x - 2.0 * x * math.cos(term.omega) + 1.0)
    return total


def integrand_value(spec: IntegrandSpec, x: float) -> float:
    """The x-domain integrand itself (for reconstruction checks)."""
    p = complex(spec.p).real
    num = x ** p + x ** (-p) - 2.0 * math.cos(spec.zeta)
    den = x ** spec.n + x ** (-spec.n) - 2.0 * math.cos(spec.theta)
    return num / (den * x)


def antiderivative_term(omega: float, x: float) -> float:
    """Integral of sin(omega)/(y**2 - 2*y*cos(omega) + 1) from 0 to x.

    Uses the two-argument arctangent of (1 - x*cos(omega), x*sin(omega)),
    which is the branch continuous in x on [0, 1] that vanishes at x = 0;
    at x = 1 it equals (pi - omega)/2 for omega in (0, 2*pi).
    """
    if not 0.0 < omega < 2.0 * math.pi:
        raise BranchError(
            f"omega = {omega} outside (0, 2*pi): no continuous branch assigned"
        )
    if not 0.0 <= x <= 1.0:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    return math.atan2(x * math.sin(omega), 1.0 - x * math.cos(omega))


def integral_at(spec: IntegrandSpec, X: float) -> float:
    """Partial-fraction value of the integral from 0 to X, X in (0, 1]."""
    if not 0.0 < X <= 1.0:
        raise ValueError(f"X must lie in (0, 1], got {X}")
    n, p, theta_c = _check_decompose_spec(spec)
    sin_theta = math.sin(theta_c)
    total = 0.0
    for omega in root_angles(n, theta_c):
        weight = 2.0 * (math.cos(p * omega) - math.cos(spec.zeta)) / (n * sin_theta)
        total += weight * antiderivative_term(omega, X)
    return total


def integral_closed(spec: IntegrandSpec) -> float:
    """Closed value assembled from the two root-angle sums.

    Returns (arc_cosine_sum - arc_sum*cos(zeta)) / (n*sin(theta)) for
    upper limit 1 and twice that for an infinite upper limit.  theta =
    pi is served by the repeated-root limit value.
    """
    n = _as_int(spec.n, "n")
    p = _as_int(spec.p, "p")
    if not 0 <= p < n:
        raise ExcludedError(f"need 0 <= p < n, got p={p}, n={n}")
    theta_c, _ = canonicalize_theta(spec.theta)
    if spec.upper == math.inf:
        factor = 2.0
    elif spec.upper == 1.0:
        factor = 1.0
    else:
        raise ValueError("closed assembly covers upper limits 1 and infinity only")
    if abs(theta_c - math.pi) <= _THETA_PI_TOL:
        limit = eval_theta_pi_limit(p / n).value.real
        return factor * (limit - math.cos(spec.zeta)) / n
    parts = assemble(n, p, theta_c)
    value = (parts.q - parts.r * math.cos(spec.zeta)) / (n * math.sin(theta_c))
    return factor * value


def middle_term_integral(n: float, theta: float) -> float:
    """Integral of x**(n-1)/(x**(2n) - 2*x**n*cos(theta) + 1) from 0 to 1.

    Equals (pi - theta)/(2*n*sin(theta)); the theta -> pi limit 1/(2n)
    is built in.
    """
    if not n > 0:
        raise ValueError(f"n must be positive, got {n}")
    if not 0.0 < theta < 2.0 * math.pi:
        raise SingularThetaError(f"theta must lie in (0, 2*pi), got {theta}")
    a = math.pi - theta
    return 1.0 / (2.0 * n * _sinc(a))


def squared_denominator_identity(n: float, p: float, X: float) -> tuple[float, float]:
    """Integration-by-parts identity for the squared denominator (1 + x**n)**2.

    Returns (lhs, rhs) where

        lhs = integral from 0 to X of (x**(n+p) + x**(n-p))/(1 + x**n)**2 dx/x
        rhs = (X**(n-p) - X**p)/(n*(1 + X**n))
              + (p/n) * integral from 0 to X of (x**(n-p) + x**p)/(1 + x**n) dx/x,

    each side computed by its own quadrature.  Both integrands are
    mapped off the x -> 0 endpoint with x**n = exp(-s).
    """
    from .quadrature import integrate_half_line  # deferred: avoid import cycle

    if not (n > 0 and 0.0 < p < n):
        raise ValueError("need n > 0 and 0 < p < n")
    if not 0.0 < X <= 1.0:
        raise ValueError(f"X must lie in (0, 1], got {X}")
    b = p / n
    s_x = -n * math.log(X)

    def lhs_kernel(s: np.ndarray) -> np.ndarray:
        e = np.exp(-s)
        return (np.exp(-(1.0 + b) * s) + np.exp(-(1.0 - b) * s)) / (1.0 + e) ** 2 / n

    def rhs_kernel(s: np.ndarray) -> np.ndarray:
        e = np.exp(-s)
        return (np.exp(-(1.0 - b) * s) + np.exp(-b * s)) / (1.0 + e) / n

    lhs = integrate_half_line(lhs_kernel, s_x, 1.0 - b).value
    boundary = (X ** (n - p) - X ** p) / (n * (1.0 + X ** n))
    rhs_int = integrate_half_line(rhs_kernel, s_x, min(b, 1.0 - b)).value
    return lhs, boundary + b * rhs_int
