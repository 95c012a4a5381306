import math

import numpy as np
import pytest

from pvi_rmt.errors import ConvergenceDomainError, DegenerateParameterError
from pvi_rmt.specfun import gamma_complex, rgamma
from pvi_rmt.toeplitz import (EnsembleParameters, cofactor_determinant, eval_AN, eval_AN_logderiv,
                              gamma_ratio_determinant, gamma_ratio_determinant_general,
                              morris_integral, select_center, symbol_coefficient,
                              toeplitz_determinant)

from oracles import AN_N2_T01, MORRIS_2_05_025, W0_CENTER0_T01

P = EnsembleParameters(2, 0.3, 0.25, 0.1, 0.4)


def test_symbol_at_t0_xi0():
    p = P.replace(xi_star=0)
    for n in (-1, 0, 2):
        c = symbol_coefficient(0, n, p, 1e-30)
        expect = (gamma_complex(2 * 0.25 + 1) * rgamma(1 + n + 0.3 + p.omega)
                  * rgamma(1 - n - 0.3 + p.omega_bar))
        assert abs(c.analytic_part - expect) < 1e-12
        assert c.nonanalytic_part == 0


def test_symbol_constant_weight():
    p = EnsembleParameters(1, 0, 0, 0, 0)
    vals = [symbol_coefficient(0, n, p, 0.1).value for n in range(-3, 4)]
    np.testing.assert_allclose(vals, [0, 0, 0, 1, 0, 0, 0], atol=1e-14)


def test_symbol_quadrature_oracle():
    assert abs(symbol_coefficient(0, 0, P, 0.1).value - W0_CENTER0_T01) < 1e-12


def test_symbol_centers_agree_in_overlap():
    # center 0 and center 1 forms describe the same coefficient where both converge
    for n in (-1, 0, 1):
        a = symbol_coefficient(0, n, P, 0.35).value
        b = symbol_coefficient(1, n, P, 0.35).value
        assert abs(a - b) < 1e-11


def test_toeplitz_determinant_trivial():
    w = {0: 2.5 - 1j}
    assert toeplitz_determinant(lambda n: w.get(n, 0), 1) == 2.5 - 1j
    assert abs(toeplitz_determinant(lambda n: 1.0 if n == 0 else 0.0, 3) - 1) < 1e-15


def test_toeplitz_determinant_cofactor():
    rng = np.random.default_rng(0)
    c = {n: complex(*rng.normal(size=2)) for n in range(-2, 3)}
    M = np.array([[c[j - k] for k in range(3)] for j in range(3)])
    assert abs(toeplitz_determinant(c.__getitem__, 3) - cofactor_determinant(M)) < 1e-13


def test_eval_an_n1_is_w0():
    p = P.replace(N=1)
    assert abs(eval_AN(p, 0.1) - symbol_coefficient(0, 0, p, 0.1).value) < 1e-15


def test_eval_an_quadrature_oracle():
    assert abs(eval_AN(P, 0.1) - AN_N2_T01) < 1e-12


def test_eval_an_xi0_constant_term():
    p = P.replace(xi_star=0)
    t = 1e-3
    K = 1.0
    for k in range(2):
        K *= (math.factorial(k) * gamma_complex(2 * 0.25 + k + 1) * rgamma(1 + k + 0.3 + p.omega)
              * rgamma(1 + k - 0.3 + p.omega_bar))
    val = t ** (2 * 0.3) * eval_AN(p, t)
    assert abs(val / K - 1) < 1e-2  # first order in t


def test_eval_an_centers_agree():
    assert abs(eval_AN(P, 0.35, 0) - eval_AN(P, 0.35, 1)) < 1e-11


def test_logderiv_matches_finite_difference():
    t, h = 0.2, 1e-5
    A, L1, L2 = eval_AN_logderiv(P, t)
    fd = (np.log(eval_AN(P, t + h)) - np.log(eval_AN(P, t - h))) / (2 * h)
    assert abs(L1 - fd) < 1e-7


def test_select_center():
    assert select_center(0.1) == "0"
    assert select_center(0.9) == "1"
    assert select_center(10) == "inf"
    with pytest.raises(ConvergenceDomainError):
        select_center(0.5)


def test_degenerate_guard():
    with pytest.raises(DegenerateParameterError):
        eval_AN(EnsembleParameters(2, 0.25, 0.25, 0, 0.4), 0.1)


def test_gamma_ratio_examples():
    for c, d, n in ((0.5, 1.5, 1), (0.7, 1.9, 2), (0.4 + 0.2j, 2.1 - 0.3j, 3)):
        a, b = gamma_ratio_determinant(c, d, n)
        assert abs(a - b) <= 1e-10 * abs(b)
    a, b = gamma_ratio_determinant(0.5, 1.5, 1)
    assert abs(a - gamma_complex(1.5) / gamma_complex(0.5)) < 1e-14


def test_gamma_ratio_general_examples():
    a, b = gamma_ratio_determinant_general([1.7], 0.8)
    assert abs(a - gamma_complex(2.5) / gamma_complex(1.7)) < 1e-14
    a, b = gamma_ratio_determinant_general([1.3, 2.6], 0.8)
    assert abs(a - b) < 1e-10 * abs(b)
    a, b = gamma_ratio_determinant_general([1.3, 1.3], 0.8)
    assert abs(a) < 1e-14 and b == 0


def test_morris_examples():
    assert abs(morris_integral(3, 0, 0) - 6) < 1e-13
    a, b = 0.3, 0.9
    assert abs(morris_integral(1, a, b)
               - gamma_complex(a + b + 1) / (gamma_complex(a + 1) * gamma_complex(b + 1))) < 1e-14
    assert abs(morris_integral(2, 0.5, 0.25) - MORRIS_2_05_025) < 1e-9
