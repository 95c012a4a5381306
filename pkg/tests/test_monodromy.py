import cmath
import math

import numpy as np
import pytest

from pvi_rmt import monodromy as mo
from pvi_rmt.errors import DegenerateParameterError
from pvi_rmt.toeplitz import EnsembleParameters

P = EnsembleParameters(2, 0.3, 0.25, 0.1, 0.4)
TH = mo.ThetaSet(0.3 + 0.1j, 0.7 - 0.05j, 0.4 + 0.2j, 0.6 - 0.1j)
SG, S0T, R = 0.45 + 0.05j, 1.3 - 0.4j, 0.8 + 0.3j


def test_half_sine_examples():
    assert mo.half_sine(0) == 0
    assert abs(mo.half_sine(1) - 1) < 1e-15


def test_trig_identities():
    rng = np.random.default_rng(2)
    for _ in range(20):
        th = mo.ThetaSet(*(complex(*rng.normal(size=2)) * 0.5 for _ in range(4)))
        res = mo.trig_identities(th, complex(*rng.normal(size=2)) * 0.5)
        assert max(abs(x) for x in res.values()) < 1e-12


@pytest.fixture(scope="module")
def quad():
    return mo.build_monodromy(TH, SG, S0T, R)


def test_built_traces(quad):
    for M, th in zip((quad.M0, quad.Mt, quad.M1, quad.MInf), TH.as_tuple()):
        assert abs(np.trace(M) - 2 * cmath.cos(math.pi * th)) < 1e-12


def test_built_cyclic(quad):
    assert quad.cyclic_residual() < 1e-12


def test_built_diagonalisation(quad):
    D = quad.C @ quad.Mt @ quad.M0 @ np.linalg.inv(quad.C)
    E = np.diag([cmath.exp(1j * math.pi * SG), cmath.exp(-1j * math.pi * SG)])
    assert np.max(np.abs(D - E)) < 1e-12


def test_invariants_identity():
    I = np.eye(2)
    inv = mo.invariants_from_matrices(mo.MonodromyQuadruple(I, I, I, I))
    assert inv.as_tuple() == (2,) * 7


def test_invariants_round_trip(quad):
    inv = mo.invariants_from_matrices(quad)
    assert abs(inv.p0t - 2 * cmath.cos(math.pi * SG)) < 1e-10
    assert abs(inv.sigma0t - SG) < 1e-10


def test_connection_both_signs(quad):
    data = mo.invariants_from_matrices(quad).to_data(s0t=S0T, r=R)
    assert abs(mo.connection_residual(TH, data, 1)) < 1e-10
    assert abs(mo.connection_residual(TH, data, -1)) < 1e-10
    doubled = mo.MonodromyData(data.sigma0t, data.sigmaT1, data.sigma01, 2 * S0T, r=R)
    assert abs(mo.connection_residual(TH, doubled, 1)) > 1e-3


def test_scale_invariance():
    a = mo.invariants_from_matrices(mo.build_monodromy(TH, SG, S0T, R))
    b = mo.invariants_from_matrices(mo.build_monodromy(TH, SG, 2 * S0T, 2 * R))
    assert max(abs(x - y) for x, y in zip(a.as_tuple(), b.as_tuple())) < 1e-12


def test_manifold_examples(quad):
    assert mo.manifold_value(*(2,) * 7) == 0
    inv = mo.invariants_from_matrices(quad).as_tuple()
    assert abs(mo.manifold_value(*inv)) < 1e-10
    bumped = inv[:4] + (inv[4] + 0.1,) + inv[5:]
    assert abs(mo.manifold_value(*bumped)) > 1e-4


def test_manifold_gradient_formula_and_fd():
    rng = np.random.default_rng(4)
    p = [complex(*rng.normal(size=2)) for _ in range(7)]
    g = mo.manifold_gradient(*p)
    assert g[0] == p[5] * p[6] + 2 * p[4] - p[0] * p[1] - p[2] * p[3]
    h = 1e-6
    for k in range(3):
        up = list(p); dn = list(p)
        up[4 + k] += h; dn[4 + k] -= h
        fd = (mo.manifold_value(*up) - mo.manifold_value(*dn)) / (2 * h)
        assert abs(fd - g[k]) < 1e-6


def test_build_guards():
    with pytest.raises(DegenerateParameterError):
        mo.build_monodromy(TH, 1.0, S0T)
    with pytest.raises(DegenerateParameterError):
        mo.build_monodromy(mo.ThetaSet(1.0, 0.7, 0.4, 0.6), SG, S0T)
    mo.build_monodromy(mo.ThetaSet(1.0, 0.7, 0.4, 0.6), SG, S0T, override=True)


def test_sse_case_data():
    mu, w, wb, xs = 0.3, P.omega, P.omega_bar, 0.4
    s01 = {}
    for case in "ABC":
        theta, d = mo.sse_case_data(case, P)
        assert abs(d.sigma0t - (2 - mu + wb)) < 1e-15
        s01[case] = d.s01
    _, dA = mo.sse_case_data("A", P)
    ref = 1 + 2j * cmath.sin(math.pi * (mu - wb)) / (xs * cmath.exp(-1j * math.pi * (mu - wb)))
    assert abs(dA.s0t - ref) < 1e-14
    assert s01["A"] == s01["B"] == s01["C"]
    with pytest.raises(DegenerateParameterError):
        mo.sse_case_data("A", P.replace(xi_star=0))


def test_case_a_data_separate_vanishing():
    theta, d = mo.sse_case_data("A", P)
    th0, tht, th1, thi = theta.as_tuple()
    assert abs(th0 + tht - d.sigma0t) < 1e-14
    assert abs(thi + th1 + d.sigma0t - 2 * P.N) < 1e-14


@pytest.mark.parametrize("case", "ABC")
def test_sse_case_matrices(case):
    Q = mo.sse_case_matrices(case, P, R)
    assert Q.cyclic_residual() < 1e-12
    for M in (Q.M0, Q.Mt, Q.M1):
        assert abs(np.linalg.det(M) - 1) < 1e-12
    st = mo.case_structure(case, Q)
    if case == "B":
        assert st["Mt_minus_scalar"] < 1e-12 and st["Mt_scalar"] == (-1) ** P.N
    else:
        assert max(st.values()) < 1e-12
    theta, d = mo.sse_case_data(case, P)
    for M, th in zip((Q.M0, Q.Mt, Q.M1, Q.MInf), theta.as_tuple()):
        assert abs(np.trace(M) - 2 * cmath.cos(math.pi * th)) < 1e-12
    inv = mo.invariants_from_matrices(Q)
    assert abs(inv.p0t - 2 * cmath.cos(math.pi * d.sigma0t)) < 1e-10
    assert abs(mo.manifold_value(*inv.as_tuple())) < 1e-10
    assert max(abs(g) for g in mo.manifold_gradient(*inv.as_tuple())) < 1e-10


def test_case_a_m1_diagonal():
    Q = mo.sse_case_matrices("A", P)
    e = cmath.exp(1j * math.pi * (2 + 0.6))
    assert abs(Q.M1[0, 0] - e) < 1e-14 and abs(Q.M1[1, 1] - 1 / e) < 1e-14


def test_case_b_printed_sign_breaks_det():
    Q = mo.sse_case_matrices("B", P, as_printed=True)
    assert abs(np.linalg.det(Q.M1) - 1) > 1


def test_sigma01_tilde():
    d = mo.MonodromyData(0.5, 0.5, 0.5)
    val = mo.sigma01_tilde(d, mo.ThetaSet(0, 0, 0, 0))
    assert abs(cmath.cos(math.pi * val) - 4) < 1e-12
    d2 = mo.MonodromyData(0.5, 0.5, -0.5)
    assert abs(mo.sigma01_tilde(d2, mo.ThetaSet(0, 0, 0, 0)) - val) < 1e-14
