"""Closed-form evaluation of the trinomial-denominator integrals.

The x-domain problem

    S = integral 0..1 of (x**(n+p) - 2*x**n*cos(zeta) + x**(n-p))
                         / (x**(2n) - 2*x**n*cos(theta) + 1) dx/x

normalizes, via x**n = exp(-t), to a hyperbolic kernel on [0, inf) with
parameters a = pi - theta, b = p/n, c = pi - zeta, and scale 1/n.  This
script walks that pipeline and the named special cases.
"""

import math

from coshint import (
    IntegrandSpec,
    closed_value,
    eval_master,
    eval_sec_case,
    eval_sech2_transform,
    eval_sech_transform,
    eval_split_cos_form,
    eval_split_form,
    eval_tan_case,
    eval_theta_pi_limit,
    normalize,
)

PI = math.pi

spec = IntegrandSpec(n=2, p=1, theta=PI / 2, zeta=PI / 2)
nf = normalize(spec)
print("spec:", spec)
print(f"normalized: a={nf.a:.6f} b={nf.b} c={nf.c:.6f} scale={nf.scale}")
print(f"master kernel value: {eval_master(nf.a, nf.b, nf.c).value.real:.15f}")
print(f"x-domain integral:   {closed_value(spec):.15f}")
print(f"reference pi/(2*sqrt(2)) = {PI / (2 * math.sqrt(2)):.15f}")
print()

print("special cases (all per unit n):")
print(f"  sec case b=1/2:        {eval_sec_case(0.5):.12f}  (= pi/sqrt 2)")
print(f"  tan case b=1/2:        {eval_tan_case(0.5):.12f}  (= pi/2)")
print(f"  cosine transform a=pi/2, q=1:  {eval_sech_transform(PI / 2, 1.0):.12f}")
print(f"  squared-kernel transform q=1:  {eval_sech2_transform(1.0):.12f}"
      f"  (= pi/sinh pi = {PI / math.sinh(PI):.12f})")
print(f"  repeated-root limit b=1/2:     {eval_theta_pi_limit(0.5).value.real:.12f}")
print()

print("denominator split into real factors (f parametrizes the offset):")
for f in (1.1, 2.0, math.e):
    v = eval_split_form(f, 0.5).value.real
    w = eval_split_cos_form(f, 1.0)
    print(f"  f={f:<8.4f} power numerator: {v:.12f}   cosine numerator: {w:.12f}")
print()

print("removable limits are built in; the flag records which branch ran:")
for a, b in ((1e-12, 0.5), (1.0, 1e-12), (1e-12, 1e-12)):
    cv = eval_master(a, b, PI / 2)
    print(f"  a={a:<8g} b={b:<8g} -> {cv.value.real:.12f}  [{cv.limit_applied.value}]")
