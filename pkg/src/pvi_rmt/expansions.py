"""Boundary expansions: A_N about t = 0, 1, infinity, gap-probability series,
and the tau-function expansions about the three fixed singularities.

Truncated series are returned together with a crude next-order magnitude so
that callers can judge whether the truncation error is acceptable.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CaseMismatchError, DegenerateParameterError, PoleError
from .specfun import (GUARD_EPS, elementary_symmetric, gamma_complex,
                      hyp2f1_coefficients, is_near_integer, rgamma)
from .toeplitz import EnsembleParameters, _element_parts

__all__ = [
    "BoundarySeries", "SeriesValue", "JimboTauExpansion", "ExtendedSeries",
    "an_boundary_series", "an_extended_series", "cn_ab", "jue_gap_series",
    "circle_gap_series", "jue_gap_series_terms", "jue_gap_log_derivatives", "jimbo_tau_expansion", "jimbo_branch_coefficients",
    "s_hat_from_s", "an_from_tau_prefactor", "theta_for_center",
]

PI = math.pi
G = gamma_complex
RG = rgamma


@dataclass(frozen=True)
class SeriesValue:
    """A truncated-series value with an estimate of the first omitted term."""

    value: complex
    error_estimate: float

    def __complex__(self):
        return complex(self.value)

    def __float__(self):
        return float(complex(self.value).real)


def _center_variable(center, t):
    t = complex(t)
    if center == "0":
        return t, 1.0, 0.0, 0.0
    if center == "1":
        return 1.0 - t, -1.0, 0.0, 0.0
    return 1.0 / t, -1.0 / t ** 2, 2.0 / t ** 3, -6.0 / t ** 4


@dataclass(frozen=True)
class BoundarySeries:
    """Truncated expansion of A_N about one of its fixed singular points.

    With ``x`` equal to t, 1-t or 1/t for centers 0, 1, infinity::

        A_N ~ t**prefactor_exponent * constant
              * (1 + sum_k analytic_coeffs[k-1] x**k + nonanalytic_coeff x**nonanalytic_exponent)

    The constant is the printed product of Gamma factors (or 1 when left
    symbolic).  ``suppressed`` records a second non-analytic branch, if any,
    as ``(exponent, coefficient)``.
    """

    center: str
    prefactor_exponent: complex
    constant: complex
    analytic_coeffs: tuple
    nonanalytic_exponent: complex
    nonanalytic_coeff: complex
    suppressed: tuple = (0j, 0j)
    order: int = 1

    def _S(self, x):
        # S(x) and its first three x-derivatives
        S = [1.0 + 0j, 0j, 0j, 0j]
        for k, c in enumerate(self.analytic_coeffs, start=1):
            for d in range(4):
                if k - d < 0:
                    break
                S[d] += c * math.perm(k, d) * x ** (k - d)
        for lam, c in ((self.nonanalytic_exponent, self.nonanalytic_coeff), self.suppressed):
            if c == 0:
                continue
            xl = cmath.exp(lam * cmath.log(x))
            fac = 1.0 + 0j
            for d in range(4):
                S[d] += c * fac * xl / x ** d
                fac *= lam - d
        return S

    def value(self, t) -> complex:
        t = complex(t)
        x = _center_variable(self.center, t)[0]
        return cmath.exp(self.prefactor_exponent * cmath.log(t)) * self.constant * self._S(x)[0]

    def log_derivatives(self, t):
        """(d/dt, d^2/dt^2, d^3/dt^3) of log A_N from the truncated series."""
        t = complex(t)
        x, x1, x2, x3 = _center_variable(self.center, t)
        S0, Sx, Sxx, Sxxx = self._S(x)
        # derivatives of log S in x
        l1 = Sx / S0
        l2 = Sxx / S0 - l1 ** 2
        l3 = Sxxx / S0 - 3 * Sxx * Sx / S0 ** 2 + 2 * l1 ** 3
        P = self.prefactor_exponent
        L1 = P / t + l1 * x1
        L2 = -P / t ** 2 + l2 * x1 ** 2 + l1 * x2
        L3 = 2 * P / t ** 3 + l3 * x1 ** 3 + 3 * l2 * x1 * x2 + l1 * x3
        return L1, L2, L3

    def error_estimate(self, t) -> float:
        """Relative magnitude of the first omitted orders (heuristic)."""
        x = _center_variable(self.center, complex(t))[0]
        c1 = abs(self.analytic_coeffs[0]) if self.analytic_coeffs else 1.0
        na = abs(self.nonanalytic_coeff * cmath.exp(self.nonanalytic_exponent * cmath.log(x)))
        K = len(self.analytic_coeffs)
        return float(max(abs(x) ** (K + 1) * max(c1, 1.0) ** 2, na * abs(x), na ** 2))


def _guard(val, what, eps=GUARD_EPS):
    if is_near_integer(val, eps):
        raise DegenerateParameterError(f"{what} = {val} is (near) an integer")


def an_boundary_series(center, params: EnsembleParameters,
                       as_printed: bool = False) -> BoundarySeries:
    """Leading expansion of A_N about t = 0, 1 or infinity.

    Parameters
    ----------
    center : {0, 1, 'inf'}
    params : EnsembleParameters
    as_printed : bool
        Only affects center infinity.  The default uses the non-analytic
        coefficient with the sign obtained from the Toeplitz route; True
        reproduces the alternative overall sign of that coefficient.
    """
    from .toeplitz import _norm_center
    center = _norm_center(center)
    N = params.N
    mu, w1 = complex(params.mu), complex(params.omega1)
    w, wb, xs = params.omega, params.omega_bar, complex(params.xi_star)
    if center == "0":
        d = mu - wb
        _guard(d, "mu-omega_bar")
        e = cmath.exp(-1j * PI * d)
        K = (1 + xs * e / (2j * cmath.sin(PI * d))) ** N
        for k in range(N):
            K *= math.factorial(k) * G(2 * w1 + k + 1) * RG(1 + k + mu + w) * RG(1 + k - mu + wb)
        c1 = 2 * N * mu * (mu + w) / (N - mu + wb)
        cna = (-xs * e / (2j * cmath.sin(PI * d) + xs * e)
               * G(1 + mu + w) * G(1 + mu - wb) * G(1 + 2 * mu) * G(N - mu + wb)
               * RG(N) * RG(N + mu + wb) * RG(N + 2 * w1) * RG(2 - N + mu - wb) ** 2)
        return BoundarySeries("0", -N * mu, K, (c1,), 1 - N + d, cna)
    if center == "1":
        g = 2 * mu + 2 * w1
        _guard(g, "2mu+2omega1")
        K = 1.0 + 0j
        for k in range(N):
            K *= math.factorial(k) * G(g + k + 1) * RG(1 + k + mu + w) * RG(1 + k + mu + wb)
        c1 = N * mu * (wb - w) / g
        cna = ((-1) ** (N + 1) / cmath.sin(PI * g)
               * (xs * cmath.exp(-1j * PI * (mu - wb)) / 2j
                  + cmath.sin(2 * PI * mu) * cmath.sin(PI * (mu + w)) / cmath.sin(PI * g))
               * G(1 + 2 * mu) * G(1 + 2 * w1) * G(1 + mu + w) * G(1 + mu + wb)
               * RG(g + 2) ** 2 * RG(g + 1) * RG(N) * RG(-N - g))
        return BoundarySeries("1", 0j, K, (c1,), 1 + g, cna)
    _guard(mu - w, "mu-omega")
    K = (-cmath.exp(-2j * PI * mu) / cmath.sin(PI * (mu - w))
         * (cmath.sin(PI * (mu + w)) + xs * cmath.exp(-1j * PI * (mu + w)) / 2j)) ** N
    for k in range(N):
        K *= math.factorial(k) * G(2 * w1 + k + 1) * RG(1 + k + mu + wb) * RG(1 + k - mu + w)
    c1 = 2 * mu * N * (mu + wb) / (N - mu + w)
    cna = (cmath.exp(1j * PI * (mu - w))
           * (2j * cmath.sin(2 * PI * mu) + xs * cmath.exp(-2j * PI * mu))
           / (2j * cmath.sin(PI * (mu + w)) + xs * cmath.exp(-1j * PI * (mu + w)))
           * G(1 + 2 * mu) * G(1 + mu + wb) * G(1 + mu - w) * G(N - mu + w)
           * RG(N) * RG(N + mu + w) * RG(N + 2 * w1) * RG(2 - N + mu - w) ** 2)
    if not as_printed:
        cna = -cna
    # t^{-1+N-mu+omega} = x^{1-N+mu-omega} with x = 1/t
    return BoundarySeries("inf", N * mu, K, (c1,), 1 - N + mu - w, cna)


# --------------------------------------------------------------------------
# higher-order expansion about t = 0 from the series-expanded determinant

@dataclass
class ExtendedSeries:
    """t^{N mu} A_N = sum_i coeffs[i] t**exponents[i] about t = 0.

    Built by expanding every Toeplitz element into its analytic and
    non-analytic hypergeometric series and multiplying out the Leibniz
    formula, keeping ``order`` powers of each series.  Its leading terms are
    those of :func:`an_boundary_series` at center 0.
    """

    N: int
    mu: complex
    exponents: np.ndarray
    coeffs: np.ndarray
    order: int

    def _derivs(self, t, nd=4):
        t = complex(t)
        lt = cmath.log(t)
        out = []
        fall = np.ones_like(self.exponents)
        tp = np.exp(self.exponents * lt)
        for d in range(nd):
            out.append(complex(np.sum(self.coeffs * fall * tp)) / t ** d)
            fall = fall * (self.exponents - d)
        return out

    def value(self, t) -> complex:
        t = complex(t)
        return cmath.exp(-self.N * self.mu * cmath.log(t)) * self._derivs(t, 1)[0]

    def log_derivatives(self, t):
        t = complex(t)
        S0, S1, S2, S3 = self._derivs(t)
        l1 = S1 / S0
        l2 = S2 / S0 - l1 ** 2
        l3 = S3 / S0 - 3 * S2 * S1 / S0 ** 2 + 2 * l1 ** 3
        P = -self.N * self.mu
        return P / t + l1, -P / t ** 2 + l2, 2 * P / t ** 3 + l3

    def error_estimate(self, t) -> float:
        # size of the highest retained power relative to the leading term
        return float(abs(complex(t)) ** self.order)


def an_extended_series(params: EnsembleParameters, order: int = 14) -> ExtendedSeries:
    """Expansion of t^{N mu} A_N about t = 0 to ``order`` powers per element series."""
    N = params.N
    mu = complex(params.mu)
    d = mu - params.omega_bar
    parts = {}
    for n in range(-(N - 1), N):
        ca, pa, cb, pb, e, _ = _element_parts("0", n, params, GUARD_EPS)
        A = ca * hyp2f1_coefficients(*pa, order) if ca != 0 else np.zeros(order, complex)
        B = cb * hyp2f1_coefficients(*pb, order) if cb != 0 else np.zeros(order, complex)
        parts[n] = (A, B)
    acc = {}
    for perm in itertools.permutations(range(N)):
        sign = _perm_sign(perm)
        for choice in itertools.product((0, 1), repeat=N):
            poly = np.zeros(order, complex)
            poly[0] = sign
            shift, k = 0, 0
            for j, (col, ch) in enumerate(zip(perm, choice)):
                n = j - col
                poly = np.convolve(poly, parts[n][ch])[:order]
                if ch:
                    shift += n
                    k += 1
            key = (shift, k)
            acc[key] = acc.get(key, np.zeros(order, complex)) + poly
    exps, coefs = [], []
    for (shift, k), poly in acc.items():
        for p, c in enumerate(poly):
            if c != 0:
                exps.append(shift + k * d + p)
                coefs.append(c)
    return ExtendedSeries(N, mu, np.array(exps, complex), np.array(coefs, complex), order)


def _perm_sign(perm):
    sign, seen = 1, [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


# --------------------------------------------------------------------------
# gap probability series

def cn_ab(N: int, a: complex, b: complex) -> complex:
    """C_N(a,b) = Gamma(a+b+N+1) Gamma(b+N+1) / (Gamma(N) Gamma(a+N) Gamma(b+1) Gamma(b+2))."""
    return (G(a + b + N + 1) * G(b + N + 1)
            * RG(N) * RG(a + N) * RG(b + 1) * RG(b + 2))


def jue_gap_series(N: int, a: float, b: float, xi: complex, u: float) -> SeriesValue:
    """Small-interval expansion of the Jacobi gap generating function.

    ``u`` is the length of the gap interval (1 - u, 1).  The printed two
    terms of the xi branch and the leading xi^2 term are kept.
    """
    if is_near_integer(b, GUARD_EPS) and round(b) < 0:
        raise DegenerateParameterError("b at a negative integer")
    C = cn_ab(N, a, b)
    lead = xi * C / (b + 1) * u ** (b + 1)
    corr = (b + 1) * (2 * N ** 2 + 2 * (a + b) * N - 2 - 2 * b + a * b) / (b + 2) ** 2
    x2 = (xi ** 2 * C ** 2 * (N - 1) * (N + b + 1) * (N + a - 1) * (N + a + b + 1)
          / ((b + 2) ** 2 * (b ** 2 + 4 * b + 3) ** 2) * u ** (2 * b + 4))
    val = 1 - lead * (1 - corr * u) + x2
    est = abs(lead) * max(abs(corr), 1.0) ** 2 * u ** 2 + abs(x2) * u
    return SeriesValue(val, float(est))


def jue_gap_series_terms(N: int, a: float, b: float, xi: complex):
    """The truncated JUE series as a list of (coefficient, power of u)."""
    if is_near_integer(b, GUARD_EPS) and round(b) < 0:
        raise DegenerateParameterError("b at a negative integer")
    C = cn_ab(N, a, b)
    lead = -xi * C / (b + 1)
    corr = (b + 1) * (2 * N ** 2 + 2 * (a + b) * N - 2 - 2 * b + a * b) / (b + 2) ** 2
    x2 = (xi ** 2 * C ** 2 * (N - 1) * (N + b + 1) * (N + a - 1) * (N + a + b + 1)
          / ((b + 2) ** 2 * (b ** 2 + 4 * b + 3) ** 2))
    return [(1.0 + 0j, 0.0), (lead, b + 1), (-lead * corr, b + 2), (x2, 2 * b + 4)]


def jue_gap_log_derivatives(N: int, a: float, b: float, xi: complex, u: float):
    """First three u-derivatives of log of the truncated JUE series at u."""
    S = [0j, 0j, 0j, 0j]
    for c, p in jue_gap_series_terms(N, a, b, xi):
        fall = 1.0
        for d in range(4):
            if fall == 0:
                break
            S[d] += c * fall * u ** (p - d)
            fall *= p - d
    l1 = S[1] / S[0]
    l2 = S[2] / S[0] - l1 ** 2
    l3 = S[3] / S[0] - 3 * S[2] * S[1] / S[0] ** 2 + 2 * l1 ** 3
    return l1, l2, l3


def circle_gap_series(group: str, N: int, xi: complex, x: float) -> SeriesValue:
    """Small-x expansions for U(N) on (0, 2x) and O^{+/-}(2N+1) on (0, x).

    The error estimate is the next omitted power with unit coefficient,
    scaled by the powers of c present at that order.
    """
    g = group.replace(" ", "").upper()
    if g in ("U", "U(N)", "UN"):
        c = xi * N / PI
        M = N ** 2
        val = (1 - c * x + (M - 1) / 36 * c ** 2 * x ** 4
               - (M - 1) * (2 * M - 3) / 1350 * c ** 2 * x ** 6
               + (M - 1) * (M - 2) * (3 * M - 5) / 52920 * c ** 2 * x ** 8
               - (M - 4) * (M - 1) ** 2 / 291600 * c ** 3 * x ** 9)
        est = (abs(c) ** 2 + abs(c) ** 3) * x ** 10
        return SeriesValue(val, float(est))
    c = 2 * N * xi / PI
    if g in ("O-", "O-(2N+1)", "OMINUS"):
        val = (1 - c * x + (4 * N ** 2 - 1) / 36 * c * x ** 3
               - (48 * N ** 4 - 40 * N ** 2 + 7) / 3600 * c * x ** 5
               + (4 * N ** 4 - 5 * N ** 2 + 1) / 2025 * c ** 2 * x ** 6
               + (192 * N ** 6 - 336 * N ** 4 + 196 * N ** 2 - 31) / 211680 * c * x ** 7
               - (48 * N ** 6 - 112 * N ** 4 + 77 * N ** 2 - 13) / 198450 * c ** 2 * x ** 8)
    elif g in ("O+", "O+(2N+1)", "OPLUS"):
        val = (1 - (4 * N ** 2 - 1) / 36 * c * x ** 3
               + (4 * N ** 2 - 1) * (12 * N ** 2 - 7) / 3600 * c * x ** 5
               - (4 * N ** 2 - 1) * (48 * N ** 4 - 72 * N ** 2 + 31) / 211680 * c * x ** 7)
    else:
        raise ValueError(f"unknown group {group!r}")
    est = (abs(c) + abs(c) ** 2) * x ** 9
    return SeriesValue(val, float(est))


# --------------------------------------------------------------------------
# tau-function expansions

def theta_for_center(center, theta):
    """Reorder (theta0, thetaT, theta1, thetaInf) by the substitution rule of a center."""
    from .toeplitz import _norm_center
    center = _norm_center(center)
    th0, tht, th1, thi = (complex(x) for x in theta)
    if center == "0":
        return th0, tht, th1, thi
    if center == "1":
        return th1, tht, th0, thi
    return thi, tht, th1, th0


@dataclass(frozen=True)
class JimboTauExpansion:
    """Four printed terms of the tau expansion about one fixed singularity.

    tau ~ C x**prefactor_exponent' (1 + c1 x + c_plus x**(1+sigma) + c_minus x**(1-sigma))
    where x = t, 1-t, 1/t.  ``t_exponent`` is the power of t (or 1-t)
    multiplying the braces.  A coefficient set to None was suppressed.
    """

    center: str
    sigma_exponent: complex
    s_hat: complex
    leading_constant: complex
    t_exponent: complex
    c1: complex
    c_plus: complex
    c_minus: complex
    valid: bool = True


def jimbo_tau_expansion(center, theta, sigma: complex, s_hat: complex,
                        C: complex = 1.0) -> JimboTauExpansion:
    """Printed tau-function expansion about t = 0, 1 or infinity.

    For center infinity the braces are in powers of 1/t and the prefactor is
    ``t^{-(sigma^2 - thetaInf^2 + thetaT^2)/4}``.
    """
    from .toeplitz import _norm_center
    center = _norm_center(center)
    sg = complex(sigma)
    if abs(sg) < GUARD_EPS or is_near_integer(sg, GUARD_EPS) and abs(abs(round(sg.real)) - 1) < 0.5:
        raise DegenerateParameterError("sigma near 0 or +-1")
    a0, at, a1, ai = theta_for_center(center, theta)
    th0, tht, th1, thi = (complex(x) for x in theta)
    if center == "0":
        texp = (sg ** 2 - th0 ** 2 - tht ** 2) / 4
    elif center == "1":
        texp = (sg ** 2 - th1 ** 2 - tht ** 2) / 4
    else:
        texp = -(sg ** 2 - thi ** 2 + tht ** 2) / 4
    c1 = (a0 ** 2 - at ** 2 - sg ** 2) * (ai ** 2 - a1 ** 2 - sg ** 2) / (8 * sg ** 2)
    s_hat = complex(s_hat)
    cp = -s_hat * (a0 ** 2 - (at - sg) ** 2) * (ai ** 2 - (a1 - sg) ** 2) / (16 * sg ** 2 * (1 + sg) ** 2)
    cm = (-(a0 ** 2 - (at + sg) ** 2) * (ai ** 2 - (a1 + sg) ** 2) / (16 * sg ** 2 * (1 - sg) ** 2) / s_hat
          if s_hat != 0 else complex("nan"))
    valid = 0 < sg.real < 1
    return JimboTauExpansion(center, sg, s_hat, complex(C), texp, c1, cp, cm, valid)


def s_hat_from_s(center, theta, sigma: complex, s: complex) -> complex:
    """The Gamma-ratio map s -> s_hat, after the center's substitution rule."""
    a0, at, a1, ai = theta_for_center(center, theta)
    sg = complex(sigma)
    num = (G(1 - sg) ** 2 * G(1 + (a0 + at + sg) / 2) * G(1 + (-a0 + at + sg) / 2)
           * G(1 + (ai + a1 + sg) / 2) * G(1 + (-ai + a1 + sg) / 2))
    den = (G(1 + sg) ** 2 * G(1 + (a0 + at - sg) / 2) * G(1 + (-a0 + at - sg) / 2)
           * G(1 + (ai + a1 - sg) / 2) * G(1 + (-ai + a1 - sg) / 2))
    return complex(s) * num / den


def jimbo_branch_coefficients(center, theta, sigma: complex, s: complex):
    """Coefficients of x^{1+sigma} and x^{1-sigma} written with 1/Gamma factors.

    Substituting the s -> s_hat map into the printed coefficients and using
    ``z Gamma(z) = Gamma(1+z)`` turns every potentially vanishing bracket
    into a reciprocal Gamma.  A bracket that vanishes because its argument is
    a non-positive integer then gives an exact zero rather than 0 * inf.

    Returns
    -------
    (c_plus, c_minus) : tuple of complex
    """
    a0, at, a1, ai = theta_for_center(center, theta)
    sg, s = complex(sigma), complex(s)
    cp = (-s * G(1 - sg) ** 2 / (sg ** 2 * (1 + sg) ** 2) * RG(1 + sg) ** 2
          * G(1 + (a0 + at + sg) / 2) * G(1 + (-a0 + at + sg) / 2)
          * G(1 + (ai + a1 + sg) / 2) * G(1 + (-ai + a1 + sg) / 2)
          * RG((a0 + at - sg) / 2) * RG((-a0 + at - sg) / 2)
          * RG((ai + a1 - sg) / 2) * RG((-ai + a1 - sg) / 2))
    cm = (-1 / s * G(1 + sg) ** 2 / (sg ** 2 * (1 - sg) ** 2) * RG(1 - sg) ** 2
          * G(1 + (a0 + at - sg) / 2) * G(1 + (-a0 + at - sg) / 2)
          * G(1 + (ai + a1 - sg) / 2) * G(1 + (-ai + a1 - sg) / 2)
          * RG((a0 + at + sg) / 2) * RG((-a0 + at + sg) / 2)
          * RG((ai + a1 + sg) / 2) * RG((-ai + a1 + sg) / 2))
    return cp, cm


def _mexp_check(theta, v, tol=1e-9):
    th = [complex(x) for x in theta]
    v = [complex(x) for x in v]
    lhs1 = sum(x * x for x in v)
    rhs1 = 0.5 * sum(x * x for x in th)
    lhs2 = 16 * v[0] * v[1] * v[2] * v[3]
    rhs2 = (th[0] ** 2 - th[2] ** 2) * (th[1] ** 2 - th[3] ** 2)
    scale = 1 + abs(rhs1) + abs(rhs2)
    if abs(lhs1 - rhs1) > tol * scale or abs(lhs2 - rhs2) > tol * scale:
        raise CaseMismatchError("theta set and v violate the exponent identities")


def an_from_tau_prefactor(params: EnsembleParameters, theta, v,
                          tau_series: JimboTauExpansion,
                          branch_coeffs=None) -> BoundarySeries:
    """A_N expansion implied by a tau expansion and the t, (1-t) prefactors.

    A_N = C~ t^alpha (1-t)^beta tau with
    alpha = (th0^2+tht^2-th1^2-thinf^2)/8 - e2[v]/2 - mu N and
    beta = (-th0^2+tht^2+th1^2-thinf^2)/8 - e2[v1,v3,v4] + e2[v]/2.
    The constant C~ is left symbolic (normalised to 1).

    ``branch_coeffs`` optionally overrides (c_plus, c_minus), e.g. with the
    1/Gamma forms of :func:`jimbo_branch_coefficients`.
    """
    vv = [complex(x) for x in (v.as_tuple() if hasattr(v, "as_tuple") else v)]
    _mexp_check(theta, vv)
    th0, tht, th1, thi = (complex(x) for x in theta)
    N, mu = params.N, complex(params.mu)
    e2 = elementary_symmetric(2, vv)
    e2p = elementary_symmetric(2, [vv[0], vv[2], vv[3]])
    alpha = (th0 ** 2 + tht ** 2 - th1 ** 2 - thi ** 2) / 8 - e2 / 2 - mu * N
    beta = (-th0 ** 2 + tht ** 2 + th1 ** 2 - thi ** 2) / 8 - e2p + e2 / 2
    ts = tau_series
    cp, cm = (ts.c_plus, ts.c_minus) if branch_coeffs is None else branch_coeffs
    sg = ts.sigma_exponent
    if ts.center == "0":
        pref = alpha + ts.t_exponent
        c1 = ts.c1 - beta
    elif ts.center == "1":
        pref = alpha
        c1 = ts.c1 - alpha
    else:
        pref = alpha + beta + ts.t_exponent
        c1 = ts.c1 - beta
    # surviving branch goes in the main slot, the other is recorded
    branches = [(1 + sg, cp), (1 - sg, cm)]
    branches.sort(key=lambda bc: 0 if (bc[1] != 0 and np.isfinite(abs(bc[1]))) else 1)
    (e_main, c_main), (e_other, c_other) = branches
    return BoundarySeries(ts.center, pref, 1.0, (c1,), e_main, c_main,
                          suppressed=(e_other, c_other))
