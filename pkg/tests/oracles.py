"""Frozen reference values computed once with mpmath at 30 digits.

Each value comes from a route independent of the package: mpmath special
functions, adaptive quadrature of defining integrals, or the Gram
determinant of mpmath Jacobi polynomials.  Regenerating them is not part of
the test run.
"""

# mpmath.gamma(0.3+0.4i)
GAMMA_03_04 = 0.9115615278045859 - 1.3671933575854187j
# mpmath.hyp2f1(-0.6, 0.3-0.2i, 1.4+0.1i, 0.25)
HYP2F1_CASE = 0.9687972058955177 + 0.02447756935786051j

# SSE parameters N, mu, omega1, omega2, xi* = (., 0.3, 0.25, 0.1, 0.4)
# w_0 at t = 0.1 by quadrature of the Fourier integral on a deformed contour
W0_CENTER0_T01 = 1.9650065326509787 - 0.3181442697184528j
# A_2 at t = 0.1: Toeplitz determinant of the quadrature coefficients
AN_N2_T01 = 3.643194044457865 - 1.2307483234380212j

# Morris integral M_2(1/2, 1/4) by 2-D adaptive quadrature of its integrand
MORRIS_2_05_025 = 2.4435703186328364
# C_3(1/2, 1/2) from mpmath.gamma
C3_05_05 = 35.65070725258455

# tau expansion at 0 with all theta = 0.4, sigma = 0.5, s_hat = 1
JIMBO_C1 = 0.03125
JIMBO_CPLUS = -0.0025
JIMBO_CMINUS = -0.4225
JIMBO_TEXP0 = -0.0175
# s -> s_hat for theta = (0.3, 0.7, 0.4, 0.6), sigma = 0.45, s = 2+i
S_HAT_GENERIC = 4.197357948546116 + 2.098678974273058j

# h_VI at v = (1, 2, 3, 4), q = 0.5, p = 0.2, t = 0.3 (exact rational arithmetic)
H_VI_1234 = 1.808

# boundary data of A_N (constant, order-x coefficient, non-analytic
# coefficient, non-analytic exponent in t) from independent mpmath Gamma
# arithmetic; the infinity entries carry the coefficient sign as printed
CO0 = {
    1: (0.2458250943496061 - 0.25829372460895056j, 0.336986301369863 + 0.09863013698630137j,
        0.8370584830361687 + 2.096030658162547j, 0.05 + 0.1j),
    2: (-0.0011577358713019436 - 0.1285360551892057j, 0.3344262295081967 + 0.07868852459016394j,
        -0.011280601650257576 - 0.002559324119425164j, -0.95 + 0.1j),
    3: (-0.03225597386108044 - 0.033489258742386334j, 0.33314203730272596 + 0.07230989956958393j,
        -0.0016151953036710502 - 2.109615623929157e-06j, -1.95 + 0.1j),
}
COINF = {
    1: (-1.5741665346481837 + 1.4068130306427933j, 0.336986301369863 - 0.09863013698630137j,
        1.4452569005356457 + 0.16765742373110107j, -0.05 + 0.1j),
    2: (0.3228654980118724 - 4.494466043787749j, 0.3344262295081967 - 0.07868852459016394j,
        -0.0034932860449096385 - 0.006587867545852438j, 0.95 + 0.1j),
    3: (6.29130079738138 + 7.318067897684079j, 0.33314203730272596 - 0.07230989956958393j,
        -0.0002734757754175234 - 0.0010046659504455047j, 1.95 + 0.1j),
}

# Jacobi gap probabilities det(1 - xi G) with mpmath Gram matrices
EJ_2_05_05_XI1_T099 = 0.9916984790289439
EJ_2_05_05_XI07_T04 = 0.2842309385393798
EJ_3_07_13_XI1_T005 = 2.20184924295488e-13
EJ_2_M05_05_XI05_XCOS005 = 0.9997358270179514  # t = cos^2(0.05)
