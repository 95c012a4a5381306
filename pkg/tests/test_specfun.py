import cmath
import math

import numpy as np
import pytest

from pvi_rmt.errors import ConvergenceDomainError, DegenerateParameterError, PoleError, RangeError
from pvi_rmt.specfun import (elementary_symmetric, gamma_complex, hyp2f1, hyp2f1_coefficients,
                             is_near_integer, loggamma, poch, rgamma)

from oracles import GAMMA_03_04, HYP2F1_CASE


def test_gamma_one():
    assert abs(gamma_complex(1) - 1) < 1e-15


def test_gamma_half():
    assert abs(gamma_complex(0.5) - math.sqrt(math.pi)) < 1e-14


def test_gamma_complex_oracle():
    assert abs(gamma_complex(0.3 + 0.4j) - GAMMA_03_04) < 1e-13


def test_gamma_reflection_region():
    z = -2.3 + 0.7j
    assert abs(gamma_complex(z) * gamma_complex(1 - z) - cmath.pi / cmath.sin(cmath.pi * z)) < 1e-11


def test_gamma_pole_raises():
    with pytest.raises(PoleError):
        gamma_complex(-3)


def test_rgamma_exact_zero_at_poles():
    for n in range(0, 6):
        assert rgamma(-n) == 0
        assert rgamma(-n + 1e-14) == 0


def test_loggamma_matches_gamma():
    z = 2.5 + 1.0j
    assert abs(cmath.exp(loggamma(z)) - gamma_complex(z)) < 1e-13


def test_poch():
    assert poch(0.5, 0) == 1
    assert abs(poch(0.5, 3) - 0.5 * 1.5 * 2.5) < 1e-15


def test_hyp2f1_zero_argument():
    assert hyp2f1(0.3, 1.2, 2.1, 0) == 1


def test_hyp2f1_log_closed_form():
    assert abs(hyp2f1(1, 1, 2, 0.5) - 2 * math.log(2)) < 1e-12


def test_hyp2f1_complex_oracle():
    assert abs(hyp2f1(-0.6, 0.3 - 0.2j, 1.4 + 0.1j, 0.25) - HYP2F1_CASE) < 1e-14


def test_hyp2f1_domain_and_degenerate():
    with pytest.raises(ConvergenceDomainError):
        hyp2f1(1, 1, 2, 0.99)
    with pytest.raises(DegenerateParameterError):
        hyp2f1(1, 1, -2 + 1e-10, 0.1)


def test_hyp2f1_coefficients():
    c = hyp2f1_coefficients(1, 1, 2, 4)
    np.testing.assert_allclose(c, [1, 1 / 2, 1 / 3, 1 / 4])


def test_elementary_symmetric_examples():
    assert elementary_symmetric(2, [1, 2, 3]) == 11
    assert elementary_symmetric(0, [5, 7]) == 1
    assert elementary_symmetric(2, [-1, -2, 3, 4]) == -7
    with pytest.raises(RangeError):
        elementary_symmetric(3, [1, 2])


def test_is_near_integer_examples():
    assert is_near_integer(3.0000000001, 1e-8)
    assert not is_near_integer(0.5, 1e-8)
    assert is_near_integer(2 + 1e-9j, 1e-8)
