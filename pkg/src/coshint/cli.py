"""Command-line surface: eval, verify, decompose, series, table, paradox.

Angles are radians unless --deg is given.  Complex literals use the
form RE, RE+IMi, RE-IMi or IMi with no spaces (e.g. 0.5, 1+2i, -0.3i);
grid ranges use start:step:stop, inclusive of stop within half a step.
Exit codes: 0 success or agreement, 1 verification disagreement or a
paradox that failed to manifest, 2 usage or domain errors.

Sweeps evaluate their points in a thread pool capped by --threads, but
output rows always follow input order, so identical flags and seed give
byte-identical output at any thread count.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import CoshintError
from .params import (
    DomainKind,
    IntegrandSpec,
    canonicalize_theta,
    classify_domain,
)
from .partial_fractions import decompose
from .series import series_contracted, series_imaginary, series_one_sided
from .verify import (
    EvalReport,
    Verdict,
    closed_value,
    paradox_imaginary_n,
    paradox_periodicity,
    pf_value,
    quad_value,
    random_specs,
    series_value,
    verify_point,
)

_USAGE_ERROR = 2


def parse_complex_literal(text: str) -> float | complex:
    """Parse RE, RE+IMi, RE-IMi or IMi into a float or complex."""
    s = text.strip()
    if not s:
        raise ValueError("empty number")
    if not s.endswith("i"):
        return float(s)
    body = s[:-1]
    split = None
    for j in range(1, len(body)):
        if body[j] in "+-" and body[j - 1] not in "eE":
            split = j  # keep scanning: the last such sign starts the imag part
    if split is None:
        if body in ("", "+"):
            return 1j
        if body == "-":
            return -1j
        return complex(0.0, float(body))
    re_part, im_part = body[:split], body[split:]
    if im_part in ("+", "-"):
        im_part += "1"
    return complex(float(re_part), float(im_part))


def format_complex(value: complex | float) -> str:
    z = complex(value)
    if z.imag == 0.0:
        return repr(z.real)
    if z.real == 0.0:
        return f"{z.imag!r}i"
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def parse_grid(text: str) -> list[float]:
    if ":" not in text:
        return [float(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid ranges are start:step:stop, got {text!r}")
    start, step, stop = (float(p) for p in parts)
    if step <= 0:
        raise ValueError("grid step must be positive")
    values = []
    k = 0
    while start + k * step <= stop + 0.5 * step:
        values.append(start + k * step)
        k += 1
    return values


def parse_upper(text: str) -> float:
    if text == "inf":
        return math.inf
    x = float(text)
    if not 0.0 < x <= 1.0:
        raise ValueError("finite upper limits must lie in (0, 1]")
    return x


def format_upper(upper: float) -> str:
    if upper == math.inf:
        return "inf"
    if upper == 1.0:
        return "1"
    return repr(upper)


def spec_to_dict(spec: IntegrandSpec) -> dict:
    return {
        "n": spec.n,
        "p": format_complex(spec.p),
        "theta": spec.theta,
        "zeta": spec.zeta,
        "upper": format_upper(spec.upper),
    }


def spec_from_dict(d: dict) -> IntegrandSpec:
    p_raw = d["p"]
    p = parse_complex_literal(p_raw) if isinstance(p_raw, str) else p_raw
    upper_raw = d.get("upper", 1.0)
    upper = parse_upper(upper_raw) if isinstance(upper_raw, str) else float(upper_raw)
    return IntegrandSpec(n=float(d["n"]), p=p, theta=float(d["theta"]),
                         zeta=float(d["zeta"]), upper=upper)


def report_to_dict(report: EvalReport) -> dict:
    nf = report.normalized
    return {
        "spec": spec_to_dict(report.spec),
        "normalized": {"a": format_complex(nf.a), "b": format_complex(nf.b),
                       "c": nf.c, "scale": nf.scale},
        "domain": {"kind": report.domain.kind.value,
                   "detail": report.domain.detail},
        "closed": report.closed,
        "pf": report.pf,
        "quad": report.quad,
        "series": report.series,
        "max_abs_err": report.max_abs_err,
        "verdict": report.verdict.value,
        "reason": report.reason,
    }


def _spec_from_args(args, canonical: bool = True) -> IntegrandSpec:
    theta = math.radians(args.theta) if args.deg else args.theta
    zeta = math.radians(args.zeta) if args.deg else args.zeta
    if canonical:
        theta, _ = canonicalize_theta(theta)
    return IntegrandSpec(n=args.n, p=args.p, theta=theta, zeta=zeta,
                         upper=args.upper)


def _fail(message: str) -> int:
    print(message, file=sys.stderr)
    return _USAGE_ERROR


# ---------------------------------------------------------------------------
# subcommands


def cmd_eval(args) -> int:
    try:
        spec = _spec_from_args(args)
    except CoshintError as exc:
        return _fail(f"domain error: {exc}")
    status = classify_domain(spec)
    if status.kind not in (DomainKind.VALID, DomainKind.BOUNDARY_A):
        return _fail(f"domain error: {status.detail}")
    tol = args.tol
    if args.json or args.method == "all":
        report = verify_point(spec, tol)
        if args.json:
            print(json.dumps(report_to_dict(report)))
        else:
            for name in ("closed", "pf", "quad", "series"):
                value = getattr(report, name)
                if value is not None:
                    print(f"{name} {value!r}")
            print(f"verdict {report.verdict.value} max_abs_err {report.max_abs_err!r}")
        return 0
    try:
        if args.method == "closed":
            value = closed_value(spec)
        elif args.method == "pf":
            value = pf_value(spec)
        elif args.method == "quad":
            value = quad_value(spec)
        else:
            value = series_value(spec, tol)
    except (CoshintError, ValueError) as exc:
        return _fail(f"domain error: {exc}")
    print(repr(value))
    return 0


def _verify_reports(specs, tol: float, threads: int) -> list[EvalReport]:
    if threads <= 1:
        return [verify_point(s, tol) for s in specs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda s: verify_point(s, tol), specs))


def cmd_verify(args) -> int:
    if args.grid is not None:
        try:
            with open(args.grid, encoding="utf-8") as fh:
                raw = json.load(fh)
            if not isinstance(raw, list):
                raise ValueError("grid file must hold a JSON array of specs")
            specs = [spec_from_dict(d) for d in raw]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            return _fail(f"bad grid file: {exc}")
    elif args.random is not None:
        specs = random_specs(args.random, args.seed)
    else:
        return _fail("need either --grid FILE or --random N")
    reports = _verify_reports(specs, args.tol, args.threads)
    lines = [json.dumps(report_to_dict(r)) for r in reports]
    text = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 1 if any(r.verdict is Verdict.DISAGREE for r in reports) else 0


def cmd_decompose(args) -> int:
    try:
        spec = _spec_from_args(args)
        d = decompose(spec)
    except (CoshintError, ValueError) as exc:
        return _fail(f"domain error: {exc}")
    rows = [{"k": k, "omega": t.omega, "coeff": t.coeff}
            for k, t in enumerate(d.terms)]
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print(f"{'k':>4} {'omega':>22} {'coeff':>22}")
        for row in rows:
            print(f"{row['k']:>4} {row['omega']:>22.15g} {row['coeff']:>22.15g}")
    return 0


def cmd_series(args) -> int:
    theta = math.radians(args.theta) if args.deg else args.theta
    try:
        theta, _ = canonicalize_theta(theta)
        if args.variant == "one-sided":
            result = series_one_sided(args.n, args.p, theta, args.tol)
        elif args.variant == "contracted":
            result = series_contracted(args.n, args.p, theta, args.tol)
        else:
            if args.q is None:
                return _fail("variant imaginary needs --q")
            result = series_imaginary(args.n, args.q, theta, args.tol)
    except (CoshintError, ValueError) as exc:
        return _fail(f"series error: {exc}")
    print(f"value {result.value!r} terms_used {result.terms_used} "
          f"tail_estimate {result.tail_estimate!r} accelerated {result.accelerated}")
    return 0


_CSV_HEADER = ["n", "p_re", "p_im", "theta", "zeta", "upper", "domain",
               "closed", "pf", "quad", "series", "max_abs_err", "verdict"]


@dataclass(frozen=True)
class SweepSpec:
    """Cartesian sweep over parameter grids, evaluated in input order."""

    n_values: list[float]
    p_values: list[complex]
    theta_values: list[float]
    zeta_values: list[float]
    upper: float
    tol: float

    def points(self) -> list[IntegrandSpec]:
        return [
            IntegrandSpec(n=n, p=p, theta=theta, zeta=zeta, upper=self.upper)
            for n in self.n_values
            for p in self.p_values
            for theta in self.theta_values
            for zeta in self.zeta_values
        ]


def _csv_cell(value: float | None) -> str:
    return "" if value is None else repr(value)


def cmd_table(args) -> int:
    try:
        p_values = ([parse_complex_literal(args.p)] if ":" not in args.p
                    else list(parse_grid(args.p)))
        sweep = SweepSpec(
            n_values=parse_grid(args.n),
            p_values=p_values,
            theta_values=[math.radians(t) if args.deg else t
                          for t in parse_grid(args.theta)],
            zeta_values=[math.radians(z) if args.deg else z
                         for z in parse_grid(args.zeta)],
            upper=parse_upper(args.upper),
            tol=args.tol,
        )
        specs = sweep.points()
    except (CoshintError, ValueError) as exc:
        return _fail(f"bad sweep: {exc}")
    reports = _verify_reports(specs, sweep.tol, args.threads)
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(_CSV_HEADER)
        for r in reports:
            p = complex(r.spec.p)
            verdict = r.verdict.value
            if r.reason is not None:
                verdict = f"{verdict}: {r.reason}"
            writer.writerow([
                repr(r.spec.n), repr(p.real), repr(p.imag),
                repr(r.spec.theta), repr(r.spec.zeta),
                format_upper(r.spec.upper), r.domain.kind.value,
                _csv_cell(r.closed), _csv_cell(r.pf), _csv_cell(r.quad),
                _csv_cell(r.series), repr(r.max_abs_err), verdict,
            ])
    finally:
        if args.out:
            out.close()
    return 0


def cmd_paradox(args) -> int:
    try:
        if args.kind == "periodicity":
            spec = _spec_from_args(args)
            report = paradox_periodicity(spec, args.k)
            manifested = (report.mismatch > 0.05
                          and report.restored_mismatch <= args.tol)
        else:
            theta = math.radians(args.theta) if args.deg else args.theta
            report = paradox_imaginary_n(args.m, args.p.real, theta)
            manifested = abs(report.formula_value.imag) > 0.01
    except (CoshintError, ValueError) as exc:
        return _fail(f"paradox error: {exc}")
    print(f"kind {report.kind}")
    print(f"formula_value {format_complex(report.formula_value)}")
    if report.oracle_value is not None:
        print(f"oracle_value {report.oracle_value!r}")
    if report.mismatch is not None:
        print(f"mismatch {report.mismatch!r}")
    if report.restored_mismatch is not None:
        print(f"restored_mismatch {report.restored_mismatch!r}")
    if report.pole_location is not None:
        print(f"pole_location {report.pole_location!r}")
    print(f"explanation {report.explanation}")
    return 0 if manifested else 1


# ---------------------------------------------------------------------------
# argument wiring


def _add_spec_flags(sub, with_upper: bool = True) -> None:
    sub.add_argument("--n", type=float, required=True)
    sub.add_argument("--p", type=parse_complex_literal, required=True)
    sub.add_argument("--theta", type=float, required=True)
    sub.add_argument("--zeta", type=float, required=True)
    if with_upper:
        sub.add_argument("--upper", type=str, default="1")
    sub.add_argument("--deg", action="store_true",
                     help="interpret angles as degrees")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coshint",
        description="evaluate, verify and dissect trinomial-denominator integrals",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one spec")
    _add_spec_flags(p_eval)
    p_eval.add_argument("--method", choices=["closed", "pf", "quad", "series", "all"],
                        default="closed")
    p_eval.add_argument("--tol", type=float, default=1e-9)
    p_eval.add_argument("--json", action="store_true")
    p_eval.set_defaults(func=cmd_eval)

    p_verify = sub.add_parser("verify", help="cross-check a grid of specs")
    p_verify.add_argument("--grid", type=str, default=None)
    p_verify.add_argument("--random", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=42)
    p_verify.add_argument("--tol", type=float, default=1e-9)
    p_verify.add_argument("--out", type=str, default=None)
    p_verify.add_argument("--threads", type=int, default=1)
    p_verify.set_defaults(func=cmd_verify)

    p_dec = sub.add_parser("decompose", help="partial-fraction terms of a spec")
    _add_spec_flags(p_dec, with_upper=False)
    p_dec.set_defaults(upper=1.0)
    p_dec.add_argument("--format", choices=["json", "table"], default="json")
    p_dec.set_defaults(func=cmd_decompose)

    p_ser = sub.add_parser("series", help="accelerated series value")
    p_ser.add_argument("--variant", choices=["one-sided", "contracted", "imaginary"],
                       required=True)
    p_ser.add_argument("--n", type=float, required=True)
    p_ser.add_argument("--p", type=float, default=0.0)
    p_ser.add_argument("--q", type=float, default=None)
    p_ser.add_argument("--theta", type=float, required=True)
    p_ser.add_argument("--tol", type=float, default=1e-8)
    p_ser.add_argument("--deg", action="store_true")
    p_ser.set_defaults(func=cmd_series)

    p_tab = sub.add_parser("table", help="CSV sweep over parameter grids")
    p_tab.add_argument("--n", type=str, required=True)
    p_tab.add_argument("--p", type=str, required=True)
    p_tab.add_argument("--theta", type=str, required=True)
    p_tab.add_argument("--zeta", type=str, required=True)
    p_tab.add_argument("--upper", type=str, default="1")
    p_tab.add_argument("--tol", type=float, default=1e-9)
    p_tab.add_argument("--out", type=str, default=None)
    p_tab.add_argument("--threads", type=int, default=1)
    p_tab.add_argument("--deg", action="store_true")
    p_tab.set_defaults(func=cmd_table)

    p_par = sub.add_parser("paradox", help="demonstrate a documented formula failure")
    p_par.add_argument("--kind", choices=["periodicity", "imaginary-n"], required=True)
    p_par.add_argument("--n", type=float, default=1.0)
    p_par.add_argument("--p", type=parse_complex_literal, default=0.5)
    p_par.add_argument("--theta", type=float, required=True)
    p_par.add_argument("--zeta", type=float, default=0.5 * math.pi)
    p_par.add_argument("--k", type=int, default=1)
    p_par.add_argument("--m", type=float, default=1.0)
    p_par.add_argument("--tol", type=float, default=1e-9)
    p_par.add_argument("--upper", type=str, default="1")
    p_par.add_argument("--deg", action="store_true")
    p_par.set_defaults(func=cmd_paradox)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "upper") and isinstance(args.upper, str):
        try:
            args.upper = parse_upper(args.upper)
        except ValueError as exc:
            return _fail(f"bad --upper: {exc}")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
