"""Acceptance checks: each check reproduces one numbered criterion at its
stated tolerance and reports the measured error.

Checks never relax their thresholds.  Sub-checks labelled with a letter
split one criterion into independently reported parts.
"""
from __future__ import annotations

import cmath
import math
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from scipy.integrate import dblquad, solve_ivp

from . import expansions as ex
from . import fredholm_jacobi as fj
from . import monodromy as mo
from . import sigma_pvi as sp
from . import toeplitz as tp

__all__ = ["CheckResult", "CHECKS", "run_suite"]

SSE_PARAMS = tp.EnsembleParameters(2, 0.3, 0.25, 0.1, 0.4)


@dataclass
class CheckResult:
    name: str
    passed: bool
    measured: float
    threshold: float
    detail: dict = field(default_factory=dict)
    elapsed_s: float = 0.0

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        return (f"[{tag}] {self.name}: measured {self.measured:.3e} "
                f"(threshold {self.threshold:.1e}, {self.elapsed_s:.2f} s)")


def _timed(fn: Callable[[], CheckResult]) -> CheckResult:
    t0 = time.perf_counter()
    res = fn()
    res.elapsed_s = time.perf_counter() - t0
    return res


# --------------------------------------------------------------------------
# 1: boundary expansions against the Toeplitz determinant

def check_1(center: str, rng=None, **_) -> CheckResult:
    p = SSE_PARAMS
    t0 = time.perf_counter()
    if center == "0":
        ts = (1e-3, 1e-4)
    elif center == "1":
        ts = (1 - 1e-3, 1 - 1e-4)
    else:
        ts = (1e3, 1e4)
    series = ex.an_boundary_series(center, p, as_printed=True)
    errs = [abs(series.value(t) / tp.eval_AN(p, t) - 1) for t in ts]
    elapsed = time.perf_counter() - t0
    detail = {"t": ts, "relative_errors": errs, "runtime_s": elapsed}
    if center == "inf":
        alt = ex.an_boundary_series(center, p)
        detail["relative_errors_opposite_sign"] = [abs(alt.value(t) / tp.eval_AN(p, t) - 1) for t in ts]
    passed = errs[0] < 1e-4 and errs[1] <= errs[0] / 10 and elapsed < 1.0
    return CheckResult(f"1[center {center}] expansion vs Toeplitz", passed, errs[0], 1e-4, detail)


# --------------------------------------------------------------------------
# 2-4: gap-probability series

def check_2(perturb: float = 0.0, **_) -> CheckResult:
    t0 = time.perf_counter()
    deltas = {}
    for N in (2, 3):
        val = fj.circle_gap("U", N, 0.05, 1.0) + perturb
        deltas[N] = abs(val - ex.circle_gap_series("U", N, 1.0, 0.05).value)
    elapsed = time.perf_counter() - t0
    worst = max(deltas.values())
    return CheckResult("2 U(N) series vs Toeplitz", worst < 1e-9 and elapsed < 1.0, worst, 1e-9,
                       {"abs_errors": deltas, "runtime_s": elapsed})


def check_3(**_) -> CheckResult:
    t0 = time.perf_counter()
    P = fj.JacobiWeightParams(0.5, 0.5, 2)
    r = fj.fredholm_det(P, 0.99, 1.0)
    s = ex.jue_gap_series(2, 0.5, 0.5, 1.0, 0.01)
    rel = abs(r.value - s.value) / abs(r.value)
    elapsed = time.perf_counter() - t0
    passed = rel < 1e-5 and r.difference < 1e-9 and elapsed < 2.0
    return CheckResult("3 JUE series vs Fredholm", passed, rel, 1e-5,
                       {"route_difference": r.difference, "nystrom": r.value,
                        "series": s.value, "runtime_s": elapsed})


def check_4(**_) -> CheckResult:
    out = {}
    ok = True
    worst = 0.0
    for g in ("O+", "O-"):
        val = fj.circle_gap(g, 2, 0.1, 0.5)
        s = ex.circle_gap_series(g, 2, 0.5, 0.1)
        d = abs(val - s.value)
        out[g] = {"abs_error": d, "estimate": s.error_estimate}
        ok &= d <= s.error_estimate and d <= 1e-6
        worst = max(worst, d)
    return CheckResult("4 O(2N+1) series vs Fredholm", ok, worst, 1e-6, out)


# --------------------------------------------------------------------------
# 5: ODE closure

def _sse_closure(series, trust) -> tuple:
    p = SSE_PARAMS
    v = sp.v_from_jue(p)
    st = sp.sigma_from_an_series(series, v, p, 1e-3, trust=trust)
    out = sp.integrate_sigma(v, st, 0.3)
    a, b = sp.sse_affine_terms(v, p)
    _, L1, _ = tp.eval_AN_logderiv(p, 0.3)
    ref = 0.3 * (0.3 - 1) * L1
    got = out.sigma - a * 0.3 - b
    return abs(got - ref), ref


def check_5a(**_) -> CheckResult:
    t0 = time.perf_counter()
    err, ref = _sse_closure(ex.an_boundary_series(0, SSE_PARAMS), trust=None)
    el = time.perf_counter() - t0
    return CheckResult("5a ODE closure, SSE, seed from the printed t->0 expansion",
                       err < 1e-5 and el < 5, err, 1e-5, {"reference": ref, "runtime_s": el})


def check_5b(**_) -> CheckResult:
    t0 = time.perf_counter()
    err, ref = _sse_closure(ex.an_extended_series(SSE_PARAMS, 16), trust=1e-2)
    el = time.perf_counter() - t0
    return CheckResult("5b ODE closure, SSE, seed from the extended t->0 expansion",
                       err < 1e-5 and el < 5, err, 1e-5, {"reference": ref, "runtime_s": el})


def _jue_seed(u0):
    N, a, b, xi = 2, 0.5, 0.5, 1.0
    v = sp.v_from_jacobi(N, a, b)
    L = ex.jue_gap_log_derivatives(N, a, b, xi, u0)
    return sp.jue_sigma_state(v, u0, *L), v


def _jue_closure(u_seed):
    P = fj.JacobiWeightParams(0.5, 0.5, 2)
    st, v = _jue_seed(u_seed)
    if u_seed < 1e-3:
        st = sp.integrate_sigma(v, st, 1e-3)
    out = sp.integrate_sigma(v, st, 0.2)
    u = 0.2
    ref = u * (u - 1) * (-fj.gap_log_derivative(P, 1 - u, 1.0))
    got = sp.jue_log_part(v, out)
    return abs(got - ref), ref


def check_5c(**_) -> CheckResult:
    t0 = time.perf_counter()
    err, ref = _jue_closure(1e-3)
    el = time.perf_counter() - t0
    return CheckResult("5c ODE closure, JUE, seed from the printed series at u=1e-3",
                       err < 1e-5 and el < 5, err, 1e-5, {"reference": ref, "runtime_s": el})


def check_5d(**_) -> CheckResult:
    t0 = time.perf_counter()
    err, ref = _jue_closure(1e-5)
    el = time.perf_counter() - t0
    return CheckResult("5d ODE closure, JUE, printed series at u=1e-5 carried to 1e-3",
                       err < 1e-5 and el < 5, err, 1e-5, {"reference": ref, "runtime_s": el})


# --------------------------------------------------------------------------
# 6: Hamiltonian to sigma-form bridge

def _fd_step_controlled(f, t, d0=2e-2, levels=6):
    """5-point first and second derivatives; the step is halved from d0 and
    the one whose estimates change least against the next halving is kept."""
    ests = []
    d = d0
    for _ in range(levels):
        fs = [f(t + k * d) for k in (-2, -1, 0, 1, 2)]
        h1 = (fs[0] - 8 * fs[1] + 8 * fs[3] - fs[4]) / (12 * d)
        h2 = (-fs[0] + 16 * fs[1] - 30 * fs[2] + 16 * fs[3] - fs[4]) / (12 * d * d)
        ests.append((h1, h2, d))
        d /= 2
    best = min(range(levels - 1),
               key=lambda i: abs(ests[i][0] - ests[i + 1][0]) + abs(ests[i][1] - ests[i + 1][1]))
    return ests[best + 1]


def check_6(**_) -> CheckResult:
    v = sp.PVIParameters(0.35 + 0.1j, 0.8 - 0.05j, -0.45, 1.15 + 0.2j)

    def rhs(t, y):
        qp, pp = sp.hamiltonian_rhs(v, sp.HamiltonianState(t, y[0], y[1]))
        return [qp, pp]

    sol = solve_ivp(rhs, (0.2, 0.8), [0.4 + 0.3j, 0.25 - 0.1j], method="DOP853",
                    rtol=1e-13, atol=1e-13, dense_output=True)
    h_of = lambda t: sp.aux_hamiltonian(v, sp.HamiltonianState(t, *sol.sol(t)))
    worst, steps = 0.0, []
    for t in np.linspace(0.3, 0.7, 9):
        h1, h2, d = _fd_step_controlled(h_of, t)
        steps.append(d)
        worst = max(worst, abs(sp.sigma_form_residual(v, sp.SigmaState(t, h_of(t), h1, h2))))
    return CheckResult("6 Hamiltonian bridge to the sigma form", worst < 1e-6, worst, 1e-6,
                       {"steps": steps, "ode_status": sol.status})


# --------------------------------------------------------------------------
# 7: monodromy

def check_7(rng=None, draws: int = 50, **_) -> CheckResult:
    rng = rng if rng is not None else np.random.default_rng(42)
    # generic draws keep a margin from the resonant set Re = 0, 1 so that
    # traces stay O(10) and float64 rounding of the quartic stays < 1e-11
    z = lambda: rng.uniform(0.2, 0.8) + 1j * rng.uniform(-0.3, 0.3)
    cyc = conn = man = 0.0
    for _ in range(draws):
        th = mo.ThetaSet(z(), z(), z(), z())
        sg, s = z(), 2 * z()
        r = cmath.exp(rng.uniform(-0.5, 0.5) + 1j * rng.uniform(-math.pi, math.pi))
        Q = mo.build_monodromy(th, sg, s, r)
        inv = mo.invariants_from_matrices(Q)
        data = inv.to_data(s0t=s, r=r)
        cyc = max(cyc, Q.cyclic_residual())
        conn = max(conn, abs(mo.connection_residual(th, data, 1)),
                   abs(mo.connection_residual(th, data, -1)))
        man = max(man, abs(mo.manifold_value(*inv.as_tuple())))
    p = SSE_PARAMS
    struct = grad = bridge = 0.0
    suppressed_exact = True
    for case in "ABC":
        Q = mo.sse_case_matrices(case, p, r=0.8 + 0.3j)
        vals = [v for k, v in mo.case_structure(case, Q).items() if k != "Mt_scalar"]
        struct = max(struct, max(vals), Q.cyclic_residual())
        if case == "B":
            struct = max(struct, abs(mo.case_structure(case, Q)["Mt_scalar"] - (-1) ** p.N))
        theta, data = mo.sse_case_data(case, p)
        th_v = theta.as_tuple()
        inv = [2 * cmath.cos(math.pi * x) for x in th_v] + [
            2 * cmath.cos(math.pi * x) for x in (data.sigma0t, data.sigmaT1, data.sigma01)]
        grad = max(grad, max(abs(g) for g in mo.manifold_gradient(*inv)))
        for center, sg, s in (("0", data.sigma0t, data.s0t), ("1", data.sigmaT1, data.sT1),
                              ("inf", data.sigma01, data.s01)):
            cp, cm = ex.jimbo_branch_coefficients(center, th_v, sg, s)
            target = ex.an_boundary_series(center, p, as_printed=True)
            if abs((1 + sg) - target.nonanalytic_exponent) < 1e-12:
                surv, supp = cp, cm
            else:
                surv, supp = cm, cp
            suppressed_exact &= (supp == 0)
            bridge = max(bridge, abs(surv - target.nonanalytic_coeff) / abs(target.nonanalytic_coeff))
    measured = max(cyc / 1e-12, conn / 1e-10, man / 1e-10, struct / 1e-12, grad / 1e-10,
                   bridge / 1e-10)
    passed = measured < 1 and suppressed_exact
    return CheckResult("7 monodromy suite", passed, measured, 1.0,
                       {"cyclic": cyc, "connection": conn, "manifold": man,
                        "case_structure": struct, "case_gradient": grad,
                        "bridge_relative": bridge, "suppressed_exactly_zero": suppressed_exact,
                        "note": "measured = worst ratio of error to its tolerance"})


# --------------------------------------------------------------------------
# 8: determinant identities

def check_8(rng=None, draws: int = 100, **_) -> CheckResult:
    rng = rng if rng is not None else np.random.default_rng(42)
    worst = 0.0
    for _ in range(draws):
        n = int(rng.integers(1, 7))
        c = complex(rng.uniform(0.5, 3), rng.uniform(-1, 1))
        d = complex(rng.uniform(0.5, 3), rng.uniform(-1, 1))
        a, b = tp.gamma_ratio_determinant(c, d, n)
        worst = max(worst, abs(a - b) / max(abs(b), 1e-300))
        zs = [complex(rng.uniform(1, 4), rng.uniform(-1, 1)) for _ in range(n)]
        bb = complex(rng.uniform(-0.9, 0.9), rng.uniform(-0.5, 0.5))
        a, b = tp.gamma_ratio_determinant_general(zs, bb)
        worst = max(worst, abs(a - b) / max(abs(b), 1e-300))
    A, B = 0.5, 0.25
    f = lambda x2, x1: (np.cos(np.pi * (A - B) * (x1 + x2))
                        * abs(1 + np.exp(2j * np.pi * x1)) ** (A + B)
                        * abs(1 + np.exp(2j * np.pi * x2)) ** (A + B)
                        * abs(np.exp(2j * np.pi * x1) - np.exp(2j * np.pi * x2)) ** 2)
    quad, _ = dblquad(f, -0.5, 0.5, -0.5, 0.5, epsabs=1e-12, epsrel=1e-12)
    closed = tp.morris_integral(2, A, B)
    morris = abs(quad - closed) / abs(closed)
    passed = worst < 1e-10 and morris < 1e-6
    return CheckResult("8 determinant identities and Morris integral", passed,
                       max(worst / 1e-10, morris / 1e-6), 1.0,
                       {"gamma_ratio_worst_relative": worst, "morris_relative": morris,
                        "note": "measured = worst ratio of error to its tolerance"})


# --------------------------------------------------------------------------
# 9: convention audit

def check_9(**_) -> CheckResult:
    P = fj.JacobiWeightParams(0.5, 0.5, 2)
    v = sp.v_from_jacobi(2, 0.5, 0.5)
    rep = sp.convention_audit(lambda s: fj.fredholm_det(P, s, 0.7).value, v,
                              [0.3, 0.4, 0.5, 0.6])
    best = min(r for _, r in rep.conventions.values())
    passed = rep.winner is not None and rep.unique
    return CheckResult("9 convention audit on JUE Fredholm data", passed, best, 1e-4,
                       {"winner": rep.winner, "best_rival": rep.best_rival, "flags": rep.flags})


CHECKS = [
    ("1[center 0]", lambda **k: check_1("0", **k)),
    ("1[center 1]", lambda **k: check_1("1", **k)),
    ("1[center inf]", lambda **k: check_1("inf", **k)),
    ("2", check_2), ("3", check_3), ("4", check_4),
    ("5a", check_5a), ("5b", check_5b), ("5c", check_5c), ("5d", check_5d),
    ("6", check_6), ("7", check_7), ("8", check_8), ("9", check_9),
]


def run_suite(suite: str = "fast", seed: int = 42, inject_failure: bool = False):
    """Run all checks; ``full`` enlarges the random samples of 7 and 8."""
    if suite not in ("fast", "full"):
        raise ValueError("suite must be 'fast' or 'full'")
    results = []
    for name, fn in CHECKS:
        rng = np.random.default_rng(seed)
        kw = {"rng": rng}
        if suite == "full" and name in ("7", "8"):
            kw["draws"] = 400
        if inject_failure and name == "2":
            kw["perturb"] = 1e-6
        results.append(_timed(lambda: fn(**kw)))
    return sorted(results, key=lambda r: r.name)
