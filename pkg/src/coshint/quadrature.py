"""Independent numerical oracle for every integral evaluated in closed form.

Two unrelated rule families are provided so the oracle can be checked
against itself:

* a double-exponential (tanh-sinh) rule applied to finite panels, with
  half-infinite ranges covered by geometrically growing panels and an
  explicit exponential tail cutoff, plus a sinh-map trapezoid rule for
  integrals over the whole real line;
* a doubling-panel Gauss-Legendre rule over the same panel layout.

All x-domain integrals are transformed with x**n = exp(-s) before any
rule sees them, so the x -> 0 endpoint behaviour x**(n-|p|-1) never
reaches a quadrature node; every transformed integrand is analytic on
the integration path.  Refinement stops at 1e-13 relative accuracy or at
the evaluation budget (2e6 integrand evaluations per call), and running
out of budget raises instead of returning a degraded value.

Panel contributions are accumulated left to right in a fixed order, so
results are bit-identical across runs regardless of caller threading.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BudgetExceededError,
    DomainError,
    NonIntegrableError,
    PoleTooCloseError,
)
from .params import DomainKind, IntegrandSpec, _theta_mod, classify_domain

DEFAULT_REL_TOL = 1e-13
EVAL_BUDGET = 2_000_000

_TS_TMAX = 6.11  # |t| beyond this the tanh-sinh weight underflows
_TS_MAX_LEVEL = 12
_GL_ORDER = 32
_GL_MAX_DOUBLINGS = 14


@dataclass(frozen=True)
class QuadResult:
    value: complex | float
    abs_err_estimate: float
    evaluations: int


def _pyify(value):
    """Convert numpy scalars to builtin float/complex for clean reporting."""
    if isinstance(value, complex) and value.imag != 0.0:
        return complex(value)
    return float(np.real(value))


class _Budget:
    """Mutable evaluation counter shared across the panels of one call."""

    __slots__ = ("used", "limit")

    def __init__(self, limit: int = EVAL_BUDGET) -> None:
        self.used = 0
        self.limit = limit

    def spend(self, count: int) -> None:
        self.used += count
        if self.used > self.limit:
            raise BudgetExceededError(
                f"quadrature exceeded its budget of {self.limit} evaluations"
            )


# ---------------------------------------------------------------------------
# tanh-sinh rule on [-1, 1], nodes cached per refinement level


_ts_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _ts_nodes(level: int) -> tuple[np.ndarray, np.ndarray]:
    """Abscissas/weights introduced at `level` (level 0 = full coarse grid)."""
    cached = _ts_cache.get(level)
    if cached is not None:
        return cached
    h = 1.0 / (1 << level)
    if level == 0:
        t = np.arange(-int(_TS_TMAX), int(_TS_TMAX) + 1, dtype=float)
    else:
        m = np.arange(1, int(_TS_TMAX / h) + 1, 2, dtype=float)
        t = np.concatenate([-m[::-1], m]) * h
    with np.errstate(over="ignore"):
        g = 0.5 * math.pi * np.sinh(t)
        u = np.tanh(g)
        w = 0.5 * math.pi * np.cosh(t) / np.cosh(g) ** 2
    keep = np.isfinite(w) & (w > 1e-300) & (np.abs(u) < 1.0)
    u, w = u[keep], w[keep]
    _ts_cache[level] = (u, w)
    return u, w


def _tanh_sinh_panel(f, a: float, b: float, abs_tol: float, budget: _Budget):
    """Integrate f over [a, b]; returns (value, err, converged_flag).

    Convergence is judged against abs_tol with a floor of 1e-13 times
    the integrand's absolute mass: summation roundoff for a peaked or
    oscillatory panel plateaus at that scale, so demanding more would
    spin through every level and fail on inputs that are in fact done.
    """
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    total = None
    mass = 0.0
    prev = None
    err = math.inf
    for level in range(_TS_MAX_LEVEL + 1):
        u, w = _ts_nodes(level)
        budget.spend(u.size)
        samples = w * f(mid + half * u)
        contrib = np.sum(samples)
        mass += float(np.sum(np.abs(samples)))
        if total is None:
            total = contrib
        else:
            total = total + contrib
        h = 1.0 / (1 << level)
        value = total * h * half
        if prev is not None:
            err = abs(value - prev)
            if level >= 2 and err <= max(abs_tol, 1e-13 * mass * h * half):
                return value, err, True
        prev = value
    # refinement exhausted: a severely peaked panel may sit on its roundoff
    # plateau; accept it only while the error stays within 1e-12 of the mass
    ok = err <= 1e-12 * mass * h * half
    return prev, err, ok


# ---------------------------------------------------------------------------
# Gauss-Legendre doubling-panel rule

_gl_cache: dict[int, tuple[np.ndarray, np.ndarray]] = {}


def _gl_rule(order: int = _GL_ORDER) -> tuple[np.ndarray, np.ndarray]:
    cached = _gl_cache.get(order)
    if cached is None:
        cached = np.polynomial.legendre.leggauss(order)
        _gl_cache[order] = cached
    return cached

def _gauss_fixed(f, a: float, b: float, panels: int, budget: _Budget):
    x0, w0 = _gl_rule()
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * (edges[1:] - edges[:-1])
    mid = 0.5 * (edges[1:] + edges[:-1])
    x = (mid[:, None] + half[:, None] * x0[None, :]).ravel()
    budget.spend(x.size)
    vals = f(x).reshape(panels, -1) * w0[None, :]
    value = np.sum(np.sum(vals, axis=1) * half)
    mass = float(np.sum(np.sum(np.abs(vals), axis=1) * half))
    return value, mass


def _gauss_panel(f, a: float, b: float, abs_tol: float, budget: _Budget):
    prev = None
    err = math.inf
    panels = 1
    for _ in range(_GL_MAX_DOUBLINGS + 1):
        value, mass = _gauss_fixed(f, a, b, panels, budget)
        if prev is not None:
            err = abs(value - prev)
            if err <= max(abs_tol, 1e-13 * mass):
                return value, err, True
        prev = value
        panels *= 2
    return prev, err, False


# ---------------------------------------------------------------------------
# composite drivers


def _tail_cutoff(decay: float, start: float = 0.0) -> float:
    """Point beyond which the e^(-decay*s) envelope integrates below 1e-17."""
    if decay <= 0:
        raise NonIntegrableError("integrand does not decay on the half-line")
    return max(start + 8.0, math.log(1e17 / decay) / decay)


def _panel_edges(start: float, cutoff: float, first: float = 4.0) -> list[float]:
    edges = [start]
    length = first
    while edges[-1] < cutoff:
        edges.append(min(edges[-1] + length, cutoff))
        length *= 2.0
    return edges


def _integrate_panels(f, edges, rel_tol, budget, panel_rule):
    total = 0.0
    err_sum = 0.0
    for left, right in zip(edges[:-1], edges[1:]):
        scale = 1.0 + abs(total)
        value, err, ok = panel_rule(f, left, right, 0.25 * rel_tol * scale, budget)
        if not ok:
            raise BudgetExceededError(
                "panel refinement exhausted without reaching tolerance"
            )
        total = total + value
        err_sum += err
        if abs(value) < 1e-3 * rel_tol * scale and err < 1e-3 * rel_tol * scale:
            break  # geometric envelope: the remaining panels are smaller still
    return total, err_sum


def integrate_finite(f, a: float, b: float, *, rel_tol: float = DEFAULT_REL_TOL,
                     rule: str = "tanh-sinh", budget: _Budget | None = None) -> QuadResult:
    """Integrate a smooth integrand over the finite interval [a, b]."""
    budget = budget or _Budget()
    panel_rule = _tanh_sinh_panel if rule == "tanh-sinh" else _gauss_panel
    value, err, ok = panel_rule(f, a, b, rel_tol, budget)
    if not ok:
        raise BudgetExceededError("refinement exhausted without convergence")
    return QuadResult(value=_pyify(value), abs_err_estimate=float(err),
                      evaluations=budget.used)


def integrate_half_line(f, start: float, decay: float, *,
                        rel_tol: float = DEFAULT_REL_TOL, rule: str = "tanh-sinh",
                        budget: _Budget | None = None) -> QuadResult:
    """Integrate f over [start, inf) given an e^(-decay*s) tail envelope."""
    budget = budget or _Budget()
    cutoff = _tail_cutoff(decay, start)
    edges = _panel_edges(start, cutoff)
    panel_rule = _tanh_sinh_panel if rule == "tanh-sinh" else _gauss_panel
    value, err = _integrate_panels(f, edges, rel_tol, budget, panel_rule)
    return QuadResult(value=_pyify(value),
                      abs_err_estimate=float(err) + 1e-16 * abs(value),
                      evaluations=budget.used)


def integrate_real_line(f, decay_pos: float, decay_neg: float, *,
                        rel_tol: float = DEFAULT_REL_TOL,
                        budget: _Budget | None = None) -> QuadResult:
    """Integrate f over (-inf, inf) with a sinh-map trapezoid rule.

    The map s = sinh(u) makes the transformed integrand decay doubly
    exponentially, so the plain trapezoid rule converges geometrically.
    This is a deliberately different construction from the panel rules,
    used where an independently computed two-sided value is wanted.
    """
    budget = budget or _Budget()
    cut = max(_tail_cutoff(decay_pos), _tail_cutoff(decay_neg))
    big_u = math.asinh(cut) + 0.5

    def g(u: np.ndarray) -> np.ndarray:
        s = np.sinh(u)
        return f(s) * np.cosh(u)

    n0 = 16
    h = 2.0 * big_u / n0
    grid = np.linspace(-big_u, big_u, n0 + 1)
    budget.spend(grid.size)
    vals = g(grid)
    total = np.sum(vals) - 0.5 * (vals[0] + vals[-1])
    mass = float(np.sum(np.abs(vals)))
    prev = total * h
    err = math.inf
    for _ in range(_TS_MAX_LEVEL):
        mids = np.arange(-big_u + 0.5 * h, big_u, h)
        budget.spend(mids.size)
        new = g(mids)
        total = total + np.sum(new)
        mass += float(np.sum(np.abs(new)))
        h *= 0.5
        value = total * h
        err = abs(value - prev)
        if err <= max(rel_tol * (1.0 + abs(value)), 1e-13 * mass * h):
            return QuadResult(value=_pyify(value), abs_err_estimate=float(err),
                              evaluations=budget.used)
        prev = value
    raise BudgetExceededError("real-line refinement exhausted without converging")


# ---------------------------------------------------------------------------
# kernels


def _require_real_p(spec: IntegrandSpec) -> float:
    p = complex(spec.p)
    if p.imag != 0.0:
        raise DomainError("p must be real here; imaginary p goes through quad_cos_log")
    return p.real


def _t_kernel(b, cos_c: float, cos_a):
    """(cosh(b*s) + cos_c) / (cosh(s) + cos_a) as a vectorized callable.

    Both sides are divided by e^|s| so the hyperbolic cosines never
    overflow; the kernel is even in s, so |s| may replace s throughout.
    """

    def f(s: np.ndarray):
        sa = np.abs(s)
        em = np.exp(-sa)
        num = np.exp((b - 1.0) * sa) + np.exp(-(b + 1.0) * sa) + 2.0 * cos_c * em
        den = 1.0 + em * em + 2.0 * cos_a * em
        return num / den

    return f


def _decay_rate(b) -> float:
    return 1.0 - abs(complex(b).real)


# ---------------------------------------------------------------------------
# public oracle operations


def quad_x_domain(spec: IntegrandSpec, X: float = 1.0, *,
                  rel_tol: float = DEFAULT_REL_TOL,
                  rule: str = "tanh-sinh") -> QuadResult:
    """Oracle for the x-domain integral from 0 to X (0 < X <= 1).

    Substituting x**n = exp(-s) maps the range to [s_X, inf) with
    s_X = -n*log(X) and integrand (cosh(b*s) - cos(zeta)) /
    (cosh(s) - cos(theta)) / n, which has no endpoint singularity.
    """
    if not 0.0 < X <= 1.0:
        raise ValueError(f"X must lie in (0, 1], got {X}")
    p = _require_real_p(spec)
    if abs(p) >= spec.n:
        raise NonIntegrableError(
            f"|p| = {abs(p)} >= n = {spec.n}: divergent at the lower endpoint"
        )
    status = classify_domain(spec)
    if status.kind not in (DomainKind.VALID, DomainKind.BOUNDARY_A):
        raise DomainError(f"spec not integrable as given: {status.detail}")
    b = p / spec.n
    kernel = _t_kernel(b, -math.cos(spec.zeta), -math.cos(spec.theta))
    s_x = -spec.n * math.log(X)
    res = integrate_half_line(kernel, s_x, _decay_rate(b), rel_tol=rel_tol, rule=rule)
    return QuadResult(value=res.value / spec.n,
                      abs_err_estimate=res.abs_err_estimate / spec.n,
                      evaluations=res.evaluations)


def quad_x_domain_infinite(spec: IntegrandSpec, *,
                           rel_tol: float = DEFAULT_REL_TOL) -> QuadResult:
    """Oracle for the x-domain integral over (0, inf).

    Computed as a genuine two-sided s-integral with the sinh-map rule,
    not by doubling the (0, 1] value.
    """
    p = _require_real_p(spec)
    if abs(p) >= spec.n:
        raise NonIntegrableError(
            f"|p| = {abs(p)} >= n = {spec.n}: divergent at an endpoint"
        )
    status = classify_domain(spec)
    if status.kind not in (DomainKind.VALID, DomainKind.BOUNDARY_A):
        raise DomainError(f"spec not integrable as given: {status.detail}")
    b = p / spec.n
    kernel = _t_kernel(b, -math.cos(spec.zeta), -math.cos(spec.theta))
    rate = _decay_rate(b)
    res = integrate_real_line(kernel, rate, rate, rel_tol=rel_tol)
    return QuadResult(value=res.value / spec.n,
                      abs_err_estimate=res.abs_err_estimate / spec.n,
                      evaluations=res.evaluations)


def quad_t_domain(a, b, c: float, *, rel_tol: float = DEFAULT_REL_TOL,
                  rule: str = "tanh-sinh") -> QuadResult:
    """Oracle for integral of (cosh(b*t) + cos(c)) / (cosh(t) + cos(a)) on [0, inf).

    ``a`` and ``b`` may be complex (|Re a| < pi, |Re b| < 1); the kernel
    is then complex-valued and so is the returned value.
    """
    a = complex(a)
    b = complex(b)
    if abs(a.real) >= math.pi:
        raise DomainError(f"|Re a| = {abs(a.real)} must be < pi")
    if abs(b.real) >= 1.0:
        raise DomainError(f"|Re b| = {abs(b.real)} must be < 1")
    if a.imag == 0.0:
        a = a.real
    if b.imag == 0.0:
        b = b.real
    kernel = _t_kernel(b, math.cos(c), np.cos(a))
    return integrate_half_line(kernel, 0.0, _decay_rate(b), rel_tol=rel_tol, rule=rule)


def quad_two_sided(a: float, b: float, *,
                   rel_tol: float = DEFAULT_REL_TOL) -> QuadResult:
    """Oracle for integral of e^(b*t) / (cosh(t) + cos(a)) over the real line."""
    if abs(a) >= math.pi or a == 0.0:
        raise DomainError(f"a must satisfy 0 < |a| < pi, got {a}")
    if abs(b) >= 1.0:
        raise DomainError(f"|b| = {abs(b)} must be < 1")
    cos_a = math.cos(a)

    def kernel(t: np.ndarray) -> np.ndarray:
        ta = np.abs(t)
        em = np.exp(-ta)
        return 2.0 * np.exp(b * t - ta) / (1.0 + em * em + 2.0 * cos_a * em)

    return integrate_real_line(kernel, 1.0 - b, 1.0 + b, rel_tol=rel_tol)


def quad_cos_log(spec: IntegrandSpec, *,
                 rel_tol: float = DEFAULT_REL_TOL) -> QuadResult:
    """Oracle for the cos(q*log x) numerator (p = i*q), honoring spec.upper.

    In the s-domain the integrand becomes cos(q*s/n) / (2*(cosh s -
    cos theta)) / n over [0, inf) for upper 1, and over the whole line
    for upper infinity (computed two-sided, not by doubling).
    """
    p = complex(spec.p)
    if p.real != 0.0:
        raise DomainError("quad_cos_log needs a purely imaginary p = i*q")
    q_over_n = p.imag / spec.n
    theta_c, shifted = _theta_mod(spec.theta)
    if shifted:
        raise DomainError("canonicalize theta before calling the oracle")
    if theta_c == 0.0:
        raise DomainError("theta congruent to 0 mod 2*pi: divergent")
    cos_t = math.cos(theta_c)

    def kernel(s: np.ndarray) -> np.ndarray:
        sa = np.abs(s)
        em = np.exp(-sa)
        return np.cos(q_over_n * s) * em / (1.0 + em * em - 2.0 * cos_t * em)

    if spec.upper == math.inf:
        res = integrate_real_line(kernel, 1.0, 1.0, rel_tol=rel_tol)
    elif spec.upper == 1.0:
        res = integrate_half_line(kernel, 0.0, 1.0, rel_tol=rel_tol)
    else:
        raise ValueError("upper must be 1 or infinity for this oracle")
    return QuadResult(value=res.value / spec.n,
                      abs_err_estimate=res.abs_err_estimate / spec.n,
                      evaluations=res.evaluations)


def quad_sec_antiderivative_check(m: float, Z: float, *,
                                  rel_tol: float = DEFAULT_REL_TOL) -> tuple[float, float]:
    """Quadrature of m/cos(m*z) on [0, Z] vs its log-tangent antiderivative.

    Returns (quadrature value, -log(tan(pi/4 - m*Z/2))).  Both sides are
    finite only left of the first secant pole, so m*Z must stay below
    pi/2 by at least 1e-3.
    """
    if m <= 0:
        raise ValueError("m must be positive")
    if not m * Z < 0.5 * math.pi - 1e-3:
        raise PoleTooCloseError(
            f"m*Z = {m * Z} is within 1e-3 of the secant pole at pi/2"
        )
    if Z < 0:
        raise ValueError("Z must be nonnegative")

    def kernel(z: np.ndarray) -> np.ndarray:
        return m / np.cos(m * z)

    if Z == 0.0:
        return 0.0, 0.0
    res = integrate_finite(kernel, 0.0, Z, rel_tol=rel_tol)
    closed = -math.log(math.tan(0.25 * math.pi - 0.5 * m * Z))
    return float(res.value), closed
