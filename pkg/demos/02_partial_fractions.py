"""The constructive route: roots, simple fractions, arctangents.

For integer exponents the denominator factors over the root angles
omega_k = (theta + 2*pi*k)/n, each quadratic factor contributes a
coefficient fixed by a 0/0 limit, and the antiderivative of each simple
fraction is an arctangent.  Collecting the arctangent values at x = 1
reproduces the closed value assembled from two finite trigonometric
progression sums.
"""

import math

from coshint import (
    IntegrandSpec,
    antiderivative_term,
    assemble,
    decompose,
    integral_at,
    integral_closed,
    integrand_value,
    reconstruct,
)

PI = math.pi

spec = IntegrandSpec(n=5, p=3, theta=2.2, zeta=0.4)
d = decompose(spec)
print(f"decomposition of the n={spec.n} integrand:")
for k, term in enumerate(d.terms):
    print(f"  k={k}  omega={term.omega:.10f}  coeff={term.coeff:+.10f}")
print()

x = 0.63
lhs = reconstruct(d, x)
rhs = integrand_value(spec, x)
print(f"reconstruction at x={x}: {lhs:.15f} vs integrand {rhs:.15f}"
      f"  (diff {abs(lhs - rhs):.2e})")
print()

print("each term integrates to an arctangent, continuous in x and 0 at 0:")
omega = d.terms[1].omega
for xx in (0.0, 0.4, 0.8, 1.0):
    print(f"  x={xx:<4} antiderivative(omega_1) = {antiderivative_term(omega, xx):+.10f}")
print(f"  at x=1 the value is (pi - omega)/2 = {(PI - omega) / 2:+.10f}")
print()

parts = assemble(5, 3, 2.2)
print(f"progression sums: weighted={parts.q:.12f}  plain={parts.r:.12f} (= pi - theta)")
print(f"arctangent route integral_at(X=1): {integral_at(spec, 1.0):.15f}")
print(f"assembled closed value:            {integral_closed(spec):.15f}")
inf_spec = IntegrandSpec(n=5, p=3, theta=2.2, zeta=0.4, upper=math.inf)
print(f"infinite upper limit doubles it:   {integral_closed(inf_spec):.15f}")
