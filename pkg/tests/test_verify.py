import math

import numpy as np
import pytest

from coshint import (
    CoshintError,
    IntegrandSpec,
    Lcg64,
    Verdict,
    eval_cosh_ratio,
    paradox_imaginary_n,
    paradox_periodicity,
    quad_t_domain,
    random_specs,
    verify_point,
)

PI = math.pi


def test_verify_integer_spec_all_routes():
    report = verify_point(IntegrandSpec(2, 1, PI / 2, PI / 2), tol=1e-9)
    assert report.verdict is Verdict.AGREE
    for name in ("closed", "pf", "quad", "series"):
        assert getattr(report, name) is not None
    assert report.max_abs_err <= 1e-9


def test_verify_integer_grid_always_agrees():
    for n in range(1, 7):
        for p in range(0, n):
            for theta in (0.3, PI / 2, 2.8):
                for zeta in (0.1, PI / 2, 3.0):
                    report = verify_point(IntegrandSpec(n, p, theta, zeta),
                                          tol=1e-9)
                    assert report.verdict is Verdict.AGREE
                    assert None not in (report.closed, report.pf,
                                        report.quad, report.series)


def test_verify_excluded_spec_skipped():
    report = verify_point(IntegrandSpec(1, 1.5, PI / 2, PI / 2))
    assert report.verdict is Verdict.SKIPPED
    assert "improper" in report.reason


def test_verify_middle_term_only_case():
    report = verify_point(IntegrandSpec(1, 0, PI / 2, PI / 2), tol=1e-9)
    assert report.verdict is Verdict.AGREE
    assert abs(report.closed - PI / 2) < 1e-12
    assert abs(report.quad - PI / 2) < 1e-11


def test_verify_infinite_upper():
    one = verify_point(IntegrandSpec(2, 1, 1.0, 2.0), tol=1e-9)
    inf = verify_point(IntegrandSpec(2, 1, 1.0, 2.0, upper=math.inf), tol=1e-9)
    assert inf.verdict is Verdict.AGREE
    assert abs(inf.closed - 2.0 * one.closed) < 1e-13


def test_verify_imaginary_p():
    report = verify_point(IntegrandSpec(1, 1j, PI / 2, PI / 2), tol=1e-9)
    assert report.verdict is Verdict.AGREE
    assert report.pf is None and report.series is None
    assert report.closed is not None and report.quad is not None


def test_verify_uncanonicalized_theta_disagrees():
    spec = IntegrandSpec(1, 0.5, PI / 2 + 2 * PI, PI / 2)
    report = verify_point(spec, tol=1e-9)
    assert report.verdict is Verdict.DISAGREE
    assert report.max_abs_err > 0.05


def test_verify_boundary_theta_pi():
    report = verify_point(IntegrandSpec(2, 1, PI, 1.0), tol=1e-9)
    assert report.verdict is Verdict.AGREE
    assert report.closed is not None and report.pf is not None
    assert report.series is None  # unusable that close to theta = pi


def test_paradox_periodicity_manifests():
    spec = IntegrandSpec(1, 0.5, PI / 2, PI / 2)
    report = paradox_periodicity(spec, k=1)
    assert report.mismatch > 0.05
    assert report.restored_mismatch < 1e-9
    assert report.shift_k == 1
    report = paradox_periodicity(IntegrandSpec(2, 1, 1.0, PI / 2), k=-1)
    assert report.mismatch > 0.05
    assert report.restored_mismatch < 1e-9


def test_paradox_periodicity_control_k_zero():
    report = paradox_periodicity(IntegrandSpec(1, 0.5, PI / 2, PI / 2), k=0)
    assert report.mismatch < 1e-9


def test_paradox_periodicity_needs_valid_spec():
    with pytest.raises(CoshintError):
        paradox_periodicity(IntegrandSpec(1, 0.5, PI / 2 + 2 * PI, PI / 2), k=1)


def test_paradox_imaginary_n_reports():
    report = paradox_imaginary_n(1.0, 0.5, PI / 2)
    assert abs(report.formula_value.imag) > 0.01
    assert abs(report.formula_value.real) < 1e-15
    assert math.isclose(report.pole_location, PI / 2, rel_tol=1e-12)
    report = paradox_imaginary_n(2.0, 1.0, 1.0)
    assert abs(report.formula_value.imag) > 0.01
    assert math.isclose(report.pole_location, 1.0, rel_tol=1e-12)


def test_paradox_imaginary_n_real_route_control():
    # identical numbers through the real-exponent route agree just fine
    report = verify_point(IntegrandSpec(1, 0.5, PI / 2, PI / 2), tol=1e-9)
    assert report.verdict is Verdict.AGREE


def test_analytic_continuation_grid():
    # complex angle a: formula matches the complex-kernel oracle on a 5x5 grid
    b = 0.37
    for re in np.linspace(-2.9, 2.9, 5):
        for im in np.linspace(-1.0, 1.0, 5):
            a = complex(re, im)
            want = eval_cosh_ratio(a, b).value
            got = quad_t_domain(a, b, PI / 2).value
            assert abs(got - want) < 1e-9


def test_lcg_sequence_frozen():
    g = Lcg64(42)
    assert [g.next_u64() for _ in range(3)] == [
        10481999410520546993,
        4159066171780167020,
        7615522811268512075,
    ]
    g = Lcg64(42)
    floats = [g.next_float() for _ in range(2)]
    assert floats == [0.5682303266439076, 0.2254634289477513]


def test_random_specs_reproducible():
    a = random_specs(10, 7)
    b = random_specs(10, 7)
    assert a == b
    for spec in a:
        assert 0.5 <= spec.n <= 4.0
        assert abs(complex(spec.p).real / spec.n) <= 0.95
        assert 0.05 <= spec.theta <= 2 * PI - 0.05
        assert 0.05 <= spec.zeta <= PI - 0.05
