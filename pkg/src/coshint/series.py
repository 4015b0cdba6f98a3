"""Infinite-series representations of the integral values.

The base expansion 1/(1 - 2*x*cos(theta) + x**2) = sum x**k sin((k+1)*
theta)/sin(theta) turns the x-domain integrals into sine series such as

    sum_k sin(k*theta)/(k*n + p)          (one power in the numerator)
    sum_k 2*n*k*sin(k*theta)/(k**2*n**2 - p**2)   (both powers, paired).

These converge only conditionally, so each sum is accelerated by
subtracting the exactly summable comparison series

    sum_k sin(k*theta)/k = (pi - theta)/2,      0 < theta < 2*pi,

whose difference has monotonically decreasing coefficients; the
remainder is summed directly and its truncation error is bounded with
the Dirichlet bound c_(K+1)/|sin(theta/2)|.  Tolerances below 1e-10 are
refused: the conditional part of the sum cannot honestly beat that.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SlowConvergenceError, ToleranceUnreachableError

MAX_TERMS = 100_000
TOL_FLOOR = 1e-10
THETA_EDGE = 1e-3
_BLOCK = 8192


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    tail_estimate: float
    accelerated: bool


def sine_series_partial(theta: float, x: float, terms: int) -> float:
    """Partial sum of sum_{k>=0} x**k * sin((k+1)*theta).

    Converges geometrically to sin(theta)/(1 - 2*x*cos(theta) + x**2)
    for |x| < 1.
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    if not abs(x) < 1.0:
        raise ValueError(f"|x| must be < 1, got {x}")
    k = np.arange(terms, dtype=float)
    return float(np.sum(x ** k * np.sin((k + 1.0) * theta)))


def _check_series_args(n: float, theta: float, tol: float) -> None:
    if not n > 0:
        raise ValueError(f"n must be positive, got {n}")
    if tol < TOL_FLOOR:
        raise ValueError(f"tol = {tol} is below the supported floor {TOL_FLOOR}")
    if not THETA_EDGE < theta < 2.0 * math.pi - THETA_EDGE:
        raise SlowConvergenceError(
            f"theta = {theta} within {THETA_EDGE} of 0 or 2*pi: sum too slow"
        )


def _accelerated_sum(theta: float, prefactor: float, coef: float,
                     c_of_k, tol: float) -> SeriesResult:
    """value = prefactor * ((pi - theta)/2 + coef * sum_k sin(k*theta)*c_k).

    c_of_k must be positive and monotonically decreasing in k; the
    Dirichlet tail bound then applies.  Summation stops a factor 10
    below tol so the returned value is comfortably inside it.
    """
    anchor = 0.5 * (math.pi - theta)
    sin_half = abs(math.sin(0.5 * theta))
    target = 0.1 * tol
    bound_scale = abs(prefactor * coef) / sin_half
    residual = 0.0
    k_next = 1
    while True:
        tail = bound_scale * c_of_k(float(k_next))
        if tail <= target:
            value = prefactor * (anchor + coef * residual)
            return SeriesResult(value=value, terms_used=k_next - 1,
                                tail_estimate=tail, accelerated=True)
        if k_next > MAX_TERMS:
            raise ToleranceUnreachableError(
                f"tail bound {tail} still above {target} after {MAX_TERMS} terms"
            )
        hi = min(k_next + _BLOCK, MAX_TERMS + 1)
        k = np.arange(k_next, hi, dtype=float)
        residual += float(np.sum(np.sin(k * theta) * c_of_k(k)))
        k_next = hi


def series_one_sided(n: float, p: float, theta: float, tol: float) -> SeriesResult:
    """Sum (1/sin(theta)) * sum_k sin(k*theta)/(k*n + p).

    Converges to the integral of x**p/(x**n + x**-n - 2*cos(theta))/x
    over (0, 1] for |p| < n.
    """
    _check_series_args(n, theta, tol)
    if not abs(p) < n:
        raise ValueError(f"need |p| < n, got p={p}, n={n}")
    b = p / n

    def c_of_k(k):
        return 1.0 / (k * (k + b))

    return _accelerated_sum(theta, 1.0 / (n * math.sin(theta)), -b, c_of_k, tol)


def series_contracted(n: float, p: float, theta: float, tol: float) -> SeriesResult:
    """Sum (2*n/sin(theta)) * sum_k k*sin(k*theta)/(k**2*n**2 - p**2).

    Converges to the integral of (x**p + x**-p)/(x**n + x**-n -
    2*cos(theta))/x over (0, 1] for |p| < n.
    """
    _check_series_args(n, theta, tol)
    if not abs(p) < n:
        raise ValueError(f"need |p| < n, got p={p}, n={n}")
    b = p / n

    def c_of_k(k):
        return 1.0 / (k * (k * k - b * b))

    return _accelerated_sum(theta, 2.0 / (n * math.sin(theta)), b * b, c_of_k, tol)


def series_imaginary(n: float, q: float, theta: float, tol: float) -> SeriesResult:
    """Sum (2*n/sin(theta)) * sum_k k*sin(k*theta)/(k**2*n**2 + q**2).

    The imaginary-exponent companion of series_contracted (p = i*q); its
    closed sum is pi*sinh(q*(pi-theta)/n)/(n*sin(theta)*sinh(q*pi/n)).
    """
    _check_series_args(n, theta, tol)
    r = q / n

    def c_of_k(k):
        return 1.0 / (k * (k * k + r * r))

    return _accelerated_sum(theta, 2.0 / (n * math.sin(theta)), -r * r, c_of_k, tol)
