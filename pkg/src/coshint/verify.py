"""Cross-path verification and the two documented formula failures.

verify_point evaluates one spec by every admissible route (closed form,
partial fractions, quadrature, accelerated series) and reports the
worst pairwise disagreement.  Disagreements never raise: callers and
the test suite decide what counts as failure.

The paradox demonstrators are assertable artifacts of where the closed
forms stop being valid: shifting theta by a full turn changes the
formula value while leaving the integrand untouched, and an imaginary
base exponent produces a purely imaginary formula value for a real,
divergent integral (the kernel has a pole on the integration path).
The demonstrators bypass angle canonicalization deliberately; a change
that silently repaired the periodicity mismatch inside the closed form
is supposed to break the paradox tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

from .closed_form import _master_raw, eval_master
from .errors import CoshintError
from .params import (
    DomainKind,
    DomainStatus,
    IntegrandSpec,
    NormalizedForm,
    classify_domain,
    normalize,
)
from .partial_fractions import integral_at, integral_closed, middle_term_integral
from .quadrature import (
    quad_cos_log,
    quad_x_domain,
    quad_x_domain_infinite,
)
from .series import series_contracted


class Verdict(Enum):
    AGREE = "Agree"
    DISAGREE = "Disagree"
    SKIPPED = "Skipped"


@dataclass(frozen=True)
class EvalReport:
    spec: IntegrandSpec
    normalized: NormalizedForm
    domain: DomainStatus
    closed: float | None
    pf: float | None
    quad: float | None
    series: float | None
    max_abs_err: float
    verdict: Verdict
    reason: str | None


@dataclass(frozen=True)
class ParadoxReport:
    kind: str  # "periodicity" | "imaginary-n"
    formula_value: complex
    oracle_value: float | None
    mismatch: float | None
    restored_mismatch: float | None
    pole_location: float | None
    shift_k: int | None
    explanation: str


def _upper_factor(spec: IntegrandSpec) -> float:
    if spec.upper == 1.0:
        return 1.0
    if spec.upper == math.inf:
        return 2.0
    raise CoshintError("closed and series routes cover upper limits 1 and inf only")


def closed_value(spec: IntegrandSpec) -> float:
    """Closed-form route: master value scaled back to the x-domain."""
    factor = _upper_factor(spec)
    nf = normalize(spec)
    return factor * nf.scale * eval_master(nf.a, nf.b, nf.c).value.real


def pf_value(spec: IntegrandSpec) -> float:
    """Partial-fraction route (integer exponents; finite X via arctangents)."""
    p = complex(spec.p)
    if p.imag != 0.0:
        raise CoshintError("partial fractions need a real integer p")
    spec_abs = replace(spec, p=abs(p.real))
    if spec_abs.upper not in (1.0, math.inf):
        return integral_at(spec_abs, spec_abs.upper)
    return integral_closed(spec_abs)


def quad_value(spec: IntegrandSpec) -> float:
    """Quadrature route; imaginary p splits into cosine and middle terms."""
    p = complex(spec.p)
    if p.imag == 0.0:
        if spec.upper == math.inf:
            return quad_x_domain_infinite(spec).value
        return quad_x_domain(spec, spec.upper).value
    if p.real != 0.0:
        raise CoshintError("quadrature path needs a real or purely imaginary p")
    # numerator x^n*(2*cos(q*log x) - 2*cos(zeta)): cosine part plus middle term
    cos_part = 2.0 * quad_cos_log(spec).value
    middle_spec = IntegrandSpec(n=spec.n, p=0.0, theta=spec.theta,
                                zeta=0.5 * math.pi, upper=spec.upper)
    if spec.upper == math.inf:
        middle = 0.5 * quad_x_domain_infinite(middle_spec).value
    else:
        middle = 0.5 * quad_x_domain(middle_spec, 1.0).value
    return cos_part - 2.0 * math.cos(spec.zeta) * middle


def series_value(spec: IntegrandSpec, tol: float = 1e-9) -> float:
    """Series route: accelerated contracted sum plus the middle-term value."""
    factor = _upper_factor(spec)
    p = complex(spec.p)
    if p.imag != 0.0:
        raise CoshintError("series path needs a real p")
    if abs(spec.theta - math.pi) < 1e-6:
        # pi - theta underflows against sin(theta): the anchor term degrades
        raise CoshintError("series route unusable within 1e-6 of theta = pi")
    contracted = series_contracted(spec.n, abs(p.real), spec.theta,
                                   max(0.25 * tol, 1e-10))
    zeta_part = 2.0 * math.cos(spec.zeta) * middle_term_integral(spec.n, spec.theta)
    return factor * (contracted.value - zeta_part)


def _paradox_only_paths(spec: IntegrandSpec) -> dict[str, float]:
    """Raw-formula vs canonical-oracle values for an uncanonicalized theta.

    The closed route deliberately evaluates the formula at the shifted
    angle, so such grid points surface as Disagree instead of being
    silently repaired or dropped.
    """
    values: dict[str, float] = {}
    nf = normalize(spec)  # nf.a already uses the reduced angle
    raw_a = math.pi - spec.theta
    try:
        factor = _upper_factor(spec)
        values["closed"] = factor * nf.scale * complex(
            _master_raw(complex(raw_a), complex(nf.b), nf.c)).real
    except (CoshintError, ValueError, ZeroDivisionError):
        pass
    theta_c = math.pi - complex(nf.a).real
    try:
        values["quad"] = quad_value(replace(spec, theta=theta_c))
    except (CoshintError, ValueError):
        pass
    return values


def verify_point(spec: IntegrandSpec, tol: float = 1e-9) -> EvalReport:
    """Evaluate one spec along every admissible route and compare.

    Routes whose preconditions fail are left unpopulated rather than
    raising; the verdict is Agree when at least two routes exist and
    their largest pairwise difference is within tol.  Specs whose theta
    lies outside (0, 2*pi) keep their raw angle in the closed route and
    therefore Disagree with the oracle (the periodicity failure).
    """
    nf = normalize(spec)
    domain = classify_domain(spec)
    base = dict(spec=spec, normalized=nf, domain=domain, closed=None,
                pf=None, quad=None, series=None)
    if domain.kind in (DomainKind.SINGULAR_THETA, DomainKind.EXCLUDED):
        return EvalReport(**base, max_abs_err=0.0, verdict=Verdict.SKIPPED,
                          reason=domain.detail)
    values: dict[str, float] = {}
    if domain.kind is DomainKind.PARADOX_ONLY:
        values = _paradox_only_paths(spec)
    else:
        paths = (("closed", lambda: closed_value(spec)),
                 ("pf", lambda: pf_value(spec)),
                 ("quad", lambda: quad_value(spec)),
                 ("series", lambda: series_value(spec, tol)))
        for name, path in paths:
            try:
                values[name] = path()
            except (CoshintError, ValueError):
                pass
    base.update(values)
    if len(values) < 2:
        return EvalReport(**base, max_abs_err=0.0, verdict=Verdict.SKIPPED,
                          reason="fewer than two evaluation routes are admissible")
    vals = list(values.values())
    max_err = max(abs(x - y) for i, x in enumerate(vals) for y in vals[i + 1:])
    verdict = Verdict.AGREE if max_err <= tol else Verdict.DISAGREE
    return EvalReport(**base, max_abs_err=max_err, verdict=verdict, reason=None)


def paradox_periodicity(spec: IntegrandSpec, k: int) -> ParadoxReport:
    """Evaluate the closed form with theta shifted by 2*pi*k, uncanonicalized.

    The integrand only sees cos(theta), so the quadrature value is
    unchanged, while the formula value moves; re-canonicalizing restores
    agreement.  The mismatch is reported, not raised on.
    """
    domain = classify_domain(spec)
    if domain.kind is not DomainKind.VALID:
        raise CoshintError(f"paradox needs a Valid spec, got {domain.detail}")
    nf = normalize(spec)
    shifted_a = nf.a - 2.0 * math.pi * k
    formula = nf.scale * _master_raw(complex(shifted_a), complex(nf.b), nf.c)
    oracle = quad_x_domain(spec, 1.0).value
    restored = nf.scale * eval_master(nf.a, nf.b, nf.c).value.real
    mismatch = abs(formula - oracle)
    restored_mismatch = abs(restored - oracle)
    explanation = (
        f"theta shifted by {2 * k}*pi leaves cos(theta) and hence the integral "
        f"unchanged, but moves the formula value by {mismatch:.6g}; the closed "
        f"form only holds for theta in (0, 2*pi), where all shifted angles "
        f"would otherwise be equally admissible. Canonicalizing first brings "
        f"the difference down to {restored_mismatch:.3g}."
    )
    return ParadoxReport(kind="periodicity", formula_value=formula,
                         oracle_value=oracle, mismatch=mismatch,
                         restored_mismatch=restored_mismatch,
                         pole_location=None, shift_k=k, explanation=explanation)


def paradox_imaginary_n(m: float, p: float, theta: float) -> ParadoxReport:
    """Formal closed value for an imaginary base exponent n = i*m.

    The formula value is purely imaginary although the integrand is
    real; the t-domain kernel denominator cos(t) + cos(pi - theta)
    vanishes on the integration path (first zero reported), so the
    integral itself diverges and no quadrature is attempted.
    """
    if m <= 0:
        raise ValueError(f"m must be positive, got {m}")
    sin_t = math.sin(theta)
    if sin_t == 0.0:
        raise ValueError("sin(theta) must be nonzero")
    u = p * (math.pi - theta) / m
    v = p * math.pi / m
    formula = (math.pi / (m * 1j)) * (math.exp(u) - math.exp(-u)) / (
        sin_t * (math.exp(v) - math.exp(-v)))
    a = math.pi - theta
    pole = math.pi - abs(a)
    explanation = (
        f"with an imaginary base exponent the formula value {formula:.6g} is "
        f"purely imaginary while the integrand is real; the oscillatory kernel "
        f"denominator vanishes on the path (first zero at t = {pole:.6g}), so "
        f"the real integral diverges and the formal value cannot be its value."
    )
    return ParadoxReport(kind="imaginary-n", formula_value=formula,
                         oracle_value=None, mismatch=None,
                         restored_mismatch=None, pole_location=pole,
                         shift_k=None, explanation=explanation)


# ---------------------------------------------------------------------------
# reproducible random spec grids


class Lcg64:
    """64-bit linear congruential generator, identical on every platform."""

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407
    _MASK = (1 << 64) - 1

    def __init__(self, seed: int) -> None:
        self.state = seed & self._MASK

    def next_u64(self) -> int:
        self.state = (self.MULTIPLIER * self.state + self.INCREMENT) & self._MASK
        return self.state

    def next_float(self) -> float:
        return (self.next_u64() >> 11) * 2.0 ** -53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.next_float()


def random_specs(count: int, seed: int, *,
                 n_range: tuple[float, float] = (0.5, 4.0),
                 b_range: tuple[float, float] = (-0.95, 0.95),
                 theta_range: tuple[float, float] = (0.05, 2.0 * math.pi - 0.05),
                 zeta_range: tuple[float, float] = (0.05, math.pi - 0.05),
                 upper: float = 1.0) -> list[IntegrandSpec]:
    """Deterministic spec grid; draw order is n, b, theta, zeta per spec."""
    rng = Lcg64(seed)
    specs = []
    for _ in range(count):
        n = rng.uniform(*n_range)
        b = rng.uniform(*b_range)
        theta = rng.uniform(*theta_range)
        zeta = rng.uniform(*zeta_range)
        specs.append(IntegrandSpec(n=n, p=b * n, theta=theta, zeta=zeta,
                                   upper=upper))
    return specs
