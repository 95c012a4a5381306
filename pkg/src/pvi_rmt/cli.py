"""Command-line interface.

Every command prints one JSON document
``{command, inputs, results: [{name, re, im, err}], flags, elapsed_ms}`` on
stdout (or CSV rows ``name,re,im,err`` with ``--format csv``).  Diagnostics
go to stderr.  Exit codes: 0 success, 1 failed cross-check, 2 bad flags,
3 degenerate parameters, 4 domain errors.
"""
from __future__ import annotations

import csv
import io
import json
import math
import sys
import time

import click
import numpy as np

from .errors import DegenerateParameterError, PVIError

EXIT_FAIL, EXIT_USAGE, EXIT_DEGENERATE, EXIT_DOMAIN = 1, 2, 3, 4


def _num(x):
    x = float(x)
    return x if math.isfinite(x) else None


def _entry(name, value, err=None):
    z = complex(value)
    return {"name": name, "re": _num(z.real), "im": _num(z.imag),
            "err": None if err is None else _num(err)}


def _render(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=False) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "re", "im", "err"])
    f = lambda v: "" if v is None else repr(float(v))
    for r in report["results"]:
        w.writerow([r["name"], f(r["re"]), f(r["im"]), f(r["err"])])
    return buf.getvalue()


def _run(command: str, inputs: dict, fmt: str, body) -> None:
    """Evaluate ``body`` and print the report in one write, mapping errors to exit codes."""
    t0 = time.perf_counter()
    try:
        results, flags, code = body()
    except DegenerateParameterError as exc:
        click.echo(f"degenerate parameters: {exc}", err=True)
        sys.exit(EXIT_DEGENERATE)
    except (PVIError, ValueError, ArithmeticError) as exc:
        click.echo(f"domain error: {type(exc).__name__}: {exc}", err=True)
        sys.exit(EXIT_DOMAIN)
    report = {"command": command, "inputs": inputs, "results": results, "flags": flags,
              "elapsed_ms": (time.perf_counter() - t0) * 1e3}
    sys.stdout.write(_render(report, fmt))
    sys.stdout.flush()
    sys.exit(code)


_format = click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json",
                       show_default=True, help="Output format.")


def _sse_options(f):
    for opt in reversed([
        click.option("--n", "n", type=click.IntRange(min=1), required=True, help="Matrix size N."),
        click.option("--mu", type=float, required=True),
        click.option("--omega1", type=float, required=True),
        click.option("--omega2", type=float, default=0.0, show_default=True),
        click.option("--xi-star", "xi_star", type=float, default=0.0, show_default=True),
    ]):
        f = opt(f)
    return f


@click.group()
def main():
    """Random-matrix generating functions tied to Painleve VI."""


@main.command("an")
@_sse_options
@click.option("--t-re", type=float, required=True)
@click.option("--t-im", type=float, default=0.0, show_default=True)
@click.option("--method", type=click.Choice(["toeplitz", "series", "ode"]), default="toeplitz",
              show_default=True)
@click.option("--center", type=click.Choice(["auto", "0", "1", "inf"]), default="auto",
              show_default=True, help="Expansion center (toeplitz and series).")
@click.option("--seed-t", type=float, default=1e-3, show_default=True,
              help="|t| of the series seed for the ode method.")
@_format
def cmd_an(n, mu, omega1, omega2, xi_star, t_re, t_im, method, center, seed_t, fmt):
    """Spectrum singularity average A_N(t)."""
    from . import expansions as ex
    from . import sigma_pvi as sp
    from . import toeplitz as tp

    inputs = dict(n=n, mu=mu, omega1=omega1, omega2=omega2, xi_star=xi_star,
                  t=[t_re, t_im], method=method, center=center)

    def body():
        p = tp.EnsembleParameters(n, mu, omega1, omega2, xi_star)
        t = complex(t_re, t_im)
        c = tp.select_center(t) if center == "auto" and method != "ode" else center
        flags = []
        if method == "toeplitz":
            A, L1, _ = tp.eval_AN_logderiv(p, t, c)
            res = [_entry("A_N", A), _entry("t(t-1)dlogA_N", t * (t - 1) * L1)]
            flags.append(f"center={c}")
        elif method == "series":
            s = ex.an_boundary_series(c, p)
            est = s.error_estimate(t)
            L1 = s.log_derivatives(t)[0]
            res = [_entry("A_N", s.value(t), est), _entry("t(t-1)dlogA_N", t * (t - 1) * L1)]
            flags.append(f"center={c}")
            if est > 1e-2:
                flags.append("outside_trust_region")
        else:
            v = sp.v_from_jue(p)
            t0 = seed_t * t / abs(t)
            st = sp.sigma_from_an_series(ex.an_extended_series(p, 16), v, p, t0)
            out = sp.integrate_sigma(v, st, t)
            a, b = sp.sse_affine_terms(v, p)
            res = [_entry("sigma", out.sigma), _entry("t(t-1)dlogA_N", out.sigma - a * t - b)]
            flags.append("seed=extended_series")
        return res, flags, 0

    _run("an", inputs, fmt, body)


@main.command("gap")
@click.option("--ensemble", type=click.Choice(["jacobi", "un", "o-plus", "o-minus"]), required=True)
@click.option("--n", "n", type=click.IntRange(min=1), required=True)
@click.option("--xi", type=float, required=True)
@click.option("--a", "a", type=float, default=0.0, show_default=True, help="Jacobi exponent at 0.")
@click.option("--b", "b", type=float, default=0.0, show_default=True, help="Jacobi exponent at 1.")
@click.option("--t", "t", type=float, default=None, help="Jacobi: interval (t, 1).")
@click.option("--x", "x", type=float, default=None, help="Circle: arc parameter.")
@click.option("--m", "m", type=int, default=None, help="Quadrature nodes per panel.")
@_format
def cmd_gap(ensemble, n, xi, a, b, t, x, m, fmt):
    """Gap generating functions of the Jacobi and circular ensembles."""
    from . import expansions as ex
    from . import fredholm_jacobi as fj

    inputs = dict(ensemble=ensemble, n=n, xi=xi, a=a, b=b, t=t, x=x, m=m)
    if ensemble == "jacobi" and t is None:
        raise click.UsageError("--t is required for --ensemble jacobi")
    if ensemble != "jacobi" and x is None:
        raise click.UsageError("--x is required for circular ensembles")

    def body():
        if ensemble == "jacobi":
            r = fj.fredholm_det(fj.JacobiWeightParams(a, b, n), t, xi, m)
            return ([_entry("nystrom", r.value, r.difference), _entry("gram", r.gram, r.difference)],
                    [], 0)
        group = {"un": "U", "o-plus": "O+", "o-minus": "O-"}[ensemble]
        val = fj.circle_gap(group, n, x, xi, m)
        s = ex.circle_gap_series(group, n, xi, x)
        flags = ["series_agrees"] if abs(val - s.value) <= max(s.error_estimate, 1e-12) else []
        return ([_entry("determinant", val, abs(val - s.value)),
                 _entry("series", s.value, s.error_estimate)], flags, 0)

    _run("gap", inputs, fmt, body)


@main.command("monodromy")
@click.option("--case", type=click.Choice(["A", "B", "C"], case_sensitive=False), required=True)
@_sse_options
@click.option("--r-re", type=float, default=1.0, show_default=True, help="Scale r of the matrices.")
@click.option("--r-im", type=float, default=0.0, show_default=True)
@click.option("--as-printed", is_flag=True, help="Case B: use the opposite sign of M1[0,1].")
@_format
def cmd_monodromy(case, n, mu, omega1, omega2, xi_star, r_re, r_im, as_printed, fmt):
    """Monodromy matrices, invariants and the cubic-surface residuals of one case."""
    from . import monodromy as mo
    from . import toeplitz as tp

    case = case.upper()
    inputs = dict(case=case, n=n, mu=mu, omega1=omega1, omega2=omega2, xi_star=xi_star,
                  r=[r_re, r_im], as_printed=as_printed)

    def body():
        p = tp.EnsembleParameters(n, mu, omega1, omega2, xi_star)
        Q = mo.sse_case_matrices(case, p, complex(r_re, r_im), as_printed=as_printed)
        res = []
        for name in ("M0", "Mt", "M1", "MInf"):
            M = getattr(Q, name)
            res += [_entry(f"{name}[{i},{j}]", M[i, j]) for i in range(2) for j in range(2)]
        inv = mo.invariants_from_matrices(Q)
        labels = ("p0", "pt", "p1", "pInf", "p0t", "pt1", "p01")
        res += [_entry(k, val) for k, val in zip(labels, inv.as_tuple())]
        grad = np.abs(mo.manifold_gradient(*inv.as_tuple()))
        res.append(_entry("manifold", mo.manifold_value(*inv.as_tuple())))
        res.append(_entry("manifold_gradient_norm", float(np.linalg.norm(grad))))
        res.append(_entry("cyclic_residual", Q.cyclic_residual()))
        st = mo.case_structure(case, Q)
        res += [_entry(k, val) for k, val in st.items()]
        flags = []
        if case == "A":
            flags += [f"{k.split('_')[0]}_lower_triangular={str(val < 1e-12).lower()}"
                      for k, val in st.items()]
        elif case == "C":
            flags += [f"{k.split('_')[0]}_upper_triangular={str(val < 1e-12).lower()}"
                      for k, val in st.items()]
        else:
            flags.append(f"Mt_is_(-1)^N_I={str(st['Mt_minus_scalar'] < 1e-12 and st['Mt_scalar'] == (-1) ** n).lower()}")
        if Q.cyclic_residual() < 1e-12:
            flags.append("cyclic_relation_holds")
        return res, flags, 0

    _run("monodromy", inputs, fmt, body)


@main.command("crosscheck")
@click.option("--suite", type=click.Choice(["fast", "full"]), default="fast", show_default=True)
@click.option("--seed", type=int, default=42, show_default=True)
@click.option("--inject-failure", is_flag=True, hidden=True)
@_format
def cmd_crosscheck(suite, seed, inject_failure, fmt):
    """Run the acceptance checks; exit 1 if any fails."""
    from .acceptance import run_suite

    inputs = dict(suite=suite, seed=seed)

    def body():
        results = run_suite(suite, seed, inject_failure)
        res, flags = [], []
        for r in results:
            click.echo(r.line(), err=True)
            res.append(_entry(r.name, r.measured, r.threshold))
            flags.append(f"{'pass' if r.passed else 'fail'}:{r.name}")
        return res, flags, 0 if all(r.passed for r in results) else EXIT_FAIL

    _run("crosscheck", inputs, fmt, body)


if __name__ == "__main__":
    main()
