"""Problem parameters, normalization and domain classification.

The x-domain problem is the integral of

    (x**(n+p) - 2*x**n*cos(zeta) + x**(n-p)) / (x**(2n) - 2*x**n*cos(theta) + 1) / x

from 0 up to ``upper`` (1, a finite X in (0, 1], or infinity).  The
substitution x**n = exp(-t) maps (0, 1] onto [0, inf) and turns the
integrand into (cosh(b*t) + cos(c)) / (cosh(t) + cos(a)) with

    a = pi - theta,   b = p / n,   c = pi - zeta,

picking up an overall factor 1/n.  This module holds both parameter sets
and decides, for a given spec, which evaluation routes are admissible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import SingularThetaError

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class IntegrandSpec:
    """Raw x-domain parameters.

    ``p`` may be complex; a purely imaginary p = i*q encodes the
    cos(q*log x) numerator.  ``upper`` is the integration limit: 1.0,
    a finite positive X, or math.inf.
    """

    n: float
    p: complex
    theta: float
    zeta: float
    upper: float = 1.0

    def __post_init__(self) -> None:
        if not (self.n > 0 and math.isfinite(self.n)):
            raise ValueError(f"n must be a positive finite real, got {self.n}")
        p = complex(self.p)
        if not (math.isfinite(p.real) and math.isfinite(p.imag)):
            raise ValueError(f"p must be finite, got {self.p}")
        if not math.isfinite(self.theta):
            raise ValueError("theta must be finite")
        if not math.isfinite(self.zeta):
            raise ValueError("zeta must be finite")
        if not self.upper > 0:
            raise ValueError(f"upper limit must be positive, got {self.upper}")


@dataclass(frozen=True)
class NormalizedForm:
    """t-domain parameters (a, b, c) plus the 1/n scale factor.

    ``a`` is real for every spec built by :func:`normalize`; the complex
    values a = i*log(f) are reachable only through the dedicated
    split-denominator evaluators in :mod:`coshint.closed_form`.
    """

    a: complex
    b: complex
    c: float
    scale: float


class DomainKind(Enum):
    VALID = "valid"
    BOUNDARY_A = "boundary-a"
    SINGULAR_THETA = "singular-theta"
    EXCLUDED = "excluded"
    PARADOX_ONLY = "paradox-only"


@dataclass(frozen=True)
class DomainStatus:
    kind: DomainKind
    detail: str


@dataclass(frozen=True)
class ScaleCheck:
    """A spec together with its exponent-rescaled companion.

    ``scaled`` has exponents (lam*n, lam*p) and the same angles; the two
    integrals are related by value(lam*n, lam*p) = value(n, p) / lam.
    """

    lam: float
    original: IntegrandSpec
    scaled: IntegrandSpec


_THETA_PI_TOL = 1e-12


def _theta_mod(theta: float) -> tuple[float, bool]:
    """Reduce theta into [0, 2*pi) without rejecting the singular value."""
    if 0.0 <= theta < TWO_PI:
        return theta, False
    t = math.fmod(theta, TWO_PI)
    if t < 0.0:
        t += TWO_PI
    if t >= TWO_PI:  # fmod landed a rounding step below 0
        t -= TWO_PI
    return t, True


def canonicalize_theta(theta: float) -> tuple[float, bool]:
    """Return (theta mod 2*pi, shifted flag) with the result in (0, 2*pi).

    Raises SingularThetaError when theta is congruent to 0 mod 2*pi,
    where the integral is infinite.
    """
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    t, shifted = _theta_mod(theta)
    if t == 0.0:
        raise SingularThetaError(
            f"theta={theta!r} is congruent to 0 mod 2*pi; the integral diverges"
        )
    return t, shifted


def normalize(spec: IntegrandSpec) -> NormalizedForm:
    """Map a spec to its t-domain form (a, b, c, scale).

    Purely arithmetic: theta is reduced mod 2*pi but no domain check is
    applied (a spec with theta = 0 normalizes to the boundary a = pi).
    """
    theta_c, _ = _theta_mod(spec.theta)
    b = spec.p / spec.n
    if isinstance(b, complex) and b.imag == 0.0:
        b = b.real
    return NormalizedForm(
        a=math.pi - theta_c,
        b=b,
        c=math.pi - spec.zeta,
        scale=1.0 / spec.n,
    )


def denormalize(form: NormalizedForm, upper: float = 1.0) -> IntegrandSpec:
    """Invert :func:`normalize` (round-trip exact to ulp scale)."""
    n = 1.0 / form.scale
    a = complex(form.a)
    if a.imag != 0.0:
        raise ValueError("cannot denormalize a complex angle a")
    p = form.b * n
    if isinstance(p, complex) and p.imag == 0.0:
        p = p.real
    return IntegrandSpec(
        n=n, p=p, theta=math.pi - a.real, zeta=math.pi - form.c, upper=upper
    )


def classify_domain(spec: IntegrandSpec) -> DomainStatus:
    """Classify a spec against the validity conditions of the closed forms.

    Precedence: SINGULAR_THETA, then EXCLUDED, then PARADOX_ONLY (raw
    theta outside (0, 2*pi), evaluable only after deliberate
    canonicalization), then BOUNDARY_A (theta = pi, served by the
    repeated-root limit), else VALID.
    """
    theta_c, shifted = _theta_mod(spec.theta)
    if theta_c == 0.0:
        return DomainStatus(
            DomainKind.SINGULAR_THETA,
            f"theta={spec.theta!r} is congruent to 0 mod 2*pi; value is infinite",
        )
    re_p = complex(spec.p).real
    if abs(re_p) >= spec.n:
        return DomainStatus(
            DomainKind.EXCLUDED,
            f"Re(p)-n = {abs(re_p) - spec.n!r} >= 0: improper fraction, divergent at x=0",
        )
    if shifted:
        return DomainStatus(
            DomainKind.PARADOX_ONLY,
            f"theta={spec.theta!r} lies outside (0, 2*pi); canonicalize before evaluating",
        )
    if abs(theta_c - math.pi) <= _THETA_PI_TOL:
        return DomainStatus(
            DomainKind.BOUNDARY_A,
            "theta = pi: repeated denominator roots, use the limit formula",
        )
    return DomainStatus(DomainKind.VALID, "inside the validity region")


def rescale(spec: IntegrandSpec, lam: float) -> ScaleCheck:
    """Build the exponent-rescaled companion spec (lam*n, lam*p)."""
    if not lam > 0:
        raise ValueError(f"scale factor must be positive, got {lam}")
    scaled = IntegrandSpec(
        n=lam * spec.n,
        p=lam * spec.p,
        theta=spec.theta,
        zeta=spec.zeta,
        upper=spec.upper,
    )
    return ScaleCheck(lam=lam, original=spec, scaled=scaled)
