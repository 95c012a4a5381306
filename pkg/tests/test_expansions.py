import cmath

import numpy as np
import pytest

from pvi_rmt import expansions as ex
from pvi_rmt import monodromy as mo
from pvi_rmt import sigma_pvi as sp
from pvi_rmt.errors import CaseMismatchError, DegenerateParameterError
from pvi_rmt.toeplitz import EnsembleParameters, eval_AN, eval_AN_logderiv

from oracles import (C3_05_05, CO0, COINF, EJ_2_05_05_XI1_T099, EJ_2_M05_05_XI05_XCOS005,
                     JIMBO_C1, JIMBO_CMINUS, JIMBO_CPLUS, JIMBO_TEXP0, S_HAT_GENERIC)

P = EnsembleParameters(2, 0.3, 0.25, 0.1, 0.4)


def _close(a, b, tol=1e-12):
    return abs(a - b) <= tol * max(1.0, abs(b))


@pytest.mark.parametrize("N", [1, 2, 3])
def test_center0_coefficients_oracle(N):
    s = ex.an_boundary_series(0, P.replace(N=N))
    K, c1, cna, e = CO0[N]
    assert _close(s.constant, K) and _close(s.analytic_coeffs[0], c1)
    assert _close(s.nonanalytic_coeff, cna) and _close(s.nonanalytic_exponent, e)
    assert _close(s.prefactor_exponent, -N * 0.3)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_center_inf_coefficients_oracle(N):
    printed = ex.an_boundary_series("inf", P.replace(N=N), as_printed=True)
    default = ex.an_boundary_series("inf", P.replace(N=N))
    K, c1, cna, e = COINF[N]
    assert _close(printed.constant, K) and _close(printed.analytic_coeffs[0], c1)
    assert _close(printed.nonanalytic_coeff, cna)
    assert _close(default.nonanalytic_coeff, -cna)
    # exponent in x = 1/t is minus the exponent in t
    assert _close(default.nonanalytic_exponent, -e)


def test_center0_order_t_coefficient():
    s = ex.an_boundary_series(0, P)
    w, wb = P.omega, P.omega_bar
    assert _close(s.analytic_coeffs[0], 2 * 2 * 0.3 * (0.3 + w) / (2 - 0.3 + wb))


def test_center1_order_coefficient():
    s = ex.an_boundary_series(1, P)
    assert _close(s.analytic_coeffs[0], 2 * 0.3 * (P.omega_bar - P.omega) / (2 * 0.3 + 2 * 0.25))


def test_center0_xi0_no_nonanalytic():
    assert ex.an_boundary_series(0, P.replace(xi_star=0)).nonanalytic_coeff == 0


def test_center1_converges():
    s = ex.an_boundary_series(1, P)
    e3 = abs(s.value(1 - 1e-3) / eval_AN(P, 1 - 1e-3) - 1)
    e4 = abs(s.value(1 - 1e-4) / eval_AN(P, 1 - 1e-4) - 1)
    assert e3 < 1e-4 and e4 < e3 / 10


def test_n1_center0_converges():
    p = P.replace(N=1)
    s = ex.an_boundary_series(0, p)
    e3 = abs(s.value(1e-3) / eval_AN(p, 1e-3) - 1)
    e4 = abs(s.value(1e-4) / eval_AN(p, 1e-4) - 1)
    assert e3 < 1e-3 and e4 < e3 / 5


def test_center_inf_sign_convergence():
    # only the corrected sign makes the error shrink with 1/t
    d = ex.an_boundary_series("inf", P)
    pr = ex.an_boundary_series("inf", P, as_printed=True)
    err = lambda s, t: abs(s.value(t) / eval_AN(P, t) - 1)
    assert err(d, 1e4) < err(d, 1e3) / 5
    assert err(pr, 1e4) > 0.5 * err(pr, 1e3)


def test_extended_series_matches_determinant():
    E = ex.an_extended_series(P, 16)
    for t in (1e-3, 0.05, 0.1):
        A, L1, L2 = eval_AN_logderiv(P, t)
        assert abs(E.value(t) / A - 1) < 1e-10
        l1, l2, _ = E.log_derivatives(t)
        assert abs(l1 / L1 - 1) < 1e-9 and abs(l2 / L2 - 1) < 1e-8


def test_cn_examples():
    assert abs(ex.cn_ab(1, 0, 0) - 1) < 1e-14
    assert abs(ex.cn_ab(2, 1, 1) - 36) < 1e-12
    assert abs(ex.cn_ab(3, 0.5, 0.5) - C3_05_05) < 1e-11


def test_jue_series_examples():
    assert ex.jue_gap_series(2, 0.5, 0.5, 0, 0.01).value == 1
    terms = ex.jue_gap_series_terms(1, 0.5, 0.7, 1.0)
    assert terms[-1][0] == 0  # the xi^2 branch carries the factor N-1
    s = ex.jue_gap_series(2, 0.5, 0.5, 1, 0.01)
    assert abs(s.value - EJ_2_05_05_XI1_T099) / EJ_2_05_05_XI1_T099 < 1e-5


def test_circle_series_examples():
    s0 = ex.circle_gap_series("U", 2, 1, 0.0)
    assert s0.value == 1
    assert ex.circle_gap_series("O-", 2, 0.5, 0.0).value == 1
    # x^4 coefficient (N^2-1)/36 c^2 = c^2/12 at N=2
    c = 2 / np.pi
    x = 1e-2
    lin = 1 - c * x
    quart = (ex.circle_gap_series("U", 2, 1, x).value - lin) / x ** 4
    assert abs(quart - c * c / 12) < 1e-3
    s = ex.circle_gap_series("O+", 2, 0.5, 0.1)  # t = cos^2(x/2)
    assert abs(s.value - EJ_2_M05_05_XI05_XCOS005) < max(s.error_estimate, 1e-12)


def test_jimbo_expansion_oracle():
    e = ex.jimbo_tau_expansion(0, (0.4, 0.4, 0.4, 0.4), 0.5, 1.0)
    assert _close(e.c1, JIMBO_C1) and _close(e.c_plus, JIMBO_CPLUS)
    assert _close(e.c_minus, JIMBO_CMINUS) and _close(e.t_exponent, JIMBO_TEXP0)


def test_jimbo_expansion_guards():
    with pytest.raises(DegenerateParameterError):
        ex.jimbo_tau_expansion(0, (0.4,) * 4, 1.0, 1.0)


def test_s_hat_examples():
    assert ex.s_hat_from_s(0, (0.3, 0.7, 0.4, 0.6), 0.45, 0) == 0
    assert _close(ex.s_hat_from_s(0, (0.3, 0.7, 0.4, 0.6), 0.45, 2 + 1j), S_HAT_GENERIC)


def test_branch_coefficients_match_hat_form():
    th, sg, s = (0.3, 0.7, 0.4, 0.6), 0.45, 2 + 1j
    e = ex.jimbo_tau_expansion(0, th, sg, ex.s_hat_from_s(0, th, sg, s))
    cp, cm = ex.jimbo_branch_coefficients(0, th, sg, s)
    assert _close(cp, e.c_plus) and _close(cm, e.c_minus)


@pytest.mark.parametrize("case", "ABC")
def test_tau_bridge_reproduces_prefactor_and_c1(case):
    theta, data = mo.sse_case_data(case, P)
    v = sp.v_from_jue(P)
    tau = ex.jimbo_tau_expansion(0, theta.as_tuple(), data.sigma0t, 1.0)
    br = ex.jimbo_branch_coefficients(0, theta.as_tuple(), data.sigma0t, data.s0t)
    s = ex.an_from_tau_prefactor(P, theta.as_tuple(), v, tau, br)
    ref = ex.an_boundary_series(0, P)
    assert _close(s.prefactor_exponent, -2 * 0.3)
    assert _close(s.analytic_coeffs[0], ref.analytic_coeffs[0], 1e-10)
    assert _close(s.nonanalytic_coeff, ref.nonanalytic_coeff, 1e-10)
    assert s.suppressed[1] == 0


@pytest.mark.parametrize("mu", [0.1, 0.2, 0.35])
def test_tau_bridge_prefactor_is_minus_n_mu(mu):
    # the t-exponent is -N mu, so it vanishes in the limit mu -> 0
    p = P.replace(mu=mu)
    theta, data = mo.sse_case_data("A", p)
    tau = ex.jimbo_tau_expansion(0, theta.as_tuple(), data.sigma0t, 1.0)
    s = ex.an_from_tau_prefactor(p, theta.as_tuple(), sp.v_from_jue(p), tau)
    assert abs(s.prefactor_exponent + 2 * mu) < 1e-12


def test_tau_bridge_rejects_mismatched_theta():
    tau = ex.jimbo_tau_expansion(0, (0.3, 0.7, 0.4, 0.6), 0.45, 1.0)
    with pytest.raises(CaseMismatchError):
        ex.an_from_tau_prefactor(P, (0.3, 0.7, 0.4, 0.6), sp.v_from_jue(P), tau)
