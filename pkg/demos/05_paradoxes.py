"""Where the formulas stop being true, demonstrated on purpose.

Two documented failures ship as first-class reports.  First: the
integrand only sees cos(theta), yet the closed form changes when theta
is shifted by a full turn, so the formula is only valid for theta in
(0, 2*pi).  Second: taking the base exponent imaginary produces a
purely imaginary "value" for a real integrand whose integral actually
diverges (the oscillatory kernel vanishes on the path).
"""

import math

from coshint import (
    IntegrandSpec,
    classify_domain,
    paradox_imaginary_n,
    paradox_periodicity,
    verify_point,
)

PI = math.pi

spec = IntegrandSpec(n=1, p=0.37, theta=PI / 2, zeta=PI / 2)
for k in (0, 1, -2):
    rep = paradox_periodicity(spec, k)
    print(f"k={k:+d}: formula {rep.formula_value.real:+.9f} vs oracle "
          f"{rep.oracle_value:+.9f}   mismatch {rep.mismatch:.3e}"
          f"   after canonicalization {rep.restored_mismatch:.3e}")
print("(a full-turn shift moves the formula whenever k*p/n is not an integer)")
print()

rep = paradox_imaginary_n(m=1.0, p=0.5, theta=PI / 2)
print(f"imaginary base exponent: formal value = {rep.formula_value:.6f}")
print(f"first kernel pole on the path at t = {rep.pole_location:.6f}")
print(rep.explanation)
print()

print("the domain classifier names each regime:")
for s in (spec,
          IntegrandSpec(1, 1.5, PI / 2, PI / 2),
          IntegrandSpec(2, 1, PI, PI / 2),
          IntegrandSpec(1, 0.5, PI / 2 + 2 * PI, PI / 2),
          IntegrandSpec(1, 0.5, 2 * PI, PI / 2)):
    st = classify_domain(s)
    print(f"  theta={s.theta:<10.6f} p={s.p:<5} -> {st.kind.value}: {st.detail}")
print()

print("a verification report keeps disagreements visible instead of raising:")
report = verify_point(IntegrandSpec(1, 0.5, PI / 2 + 2 * PI, PI / 2), tol=1e-9)
print(f"  verdict {report.verdict.value}: closed {report.closed:+.6f},"
      f" quad {report.quad:+.6f}, max_abs_err {report.max_abs_err:.3e}")
