"""Toeplitz-determinant evaluation of the spectrum singularity average A_N.

The average is written via Heine's identity as ``det[w_{j-k}]`` where the
Fourier coefficients ``w_n`` of the symbol have closed forms in terms of
Gauss hypergeometric functions about each of t = 0, 1 and infinity.

All fractional powers use the principal branch, ``arg t in (-pi, pi]``.
The symbol is ``t^{-mu} z^{-mu-omega} (1+z)^{2 omega_1} (1+tz)^{2 mu}``
with principal powers, multiplied by ``1 - xi*`` on the arc
``theta in (pi-phi, pi)``.  See :func:`xi_star_for_absolute_weight` for the
translation to the ``|1+tz|^{2 mu}`` form of the weight.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np
import scipy.linalg

from .errors import (ConvergenceDomainError, DegenerateParameterError,
                     PoleError, SingularMatrixError)
from .specfun import (GUARD_EPS, gamma_complex, hyp2f1, is_near_integer,
                      poch, rgamma)

__all__ = [
    "EnsembleParameters", "SymbolCoefficient", "symbol_coefficient",
    "toeplitz_determinant", "eval_AN", "eval_AN_logderiv", "select_center",
    "gamma_ratio_determinant", "gamma_ratio_determinant_general",
    "morris_integral", "arc_symbol_coefficient", "xi_star_from_xi",
    "xi_star_for_absolute_weight", "cofactor_determinant",
]

PI = math.pi


@dataclass(frozen=True)
class EnsembleParameters:
    """Parameters of the spectrum singularity average A_N(t; omega1, omega2, mu; xi*)."""

    N: int
    mu: complex
    omega1: complex
    omega2: complex
    xi_star: complex = 0.0

    def __post_init__(self):
        if int(self.N) != self.N or self.N < 1:
            raise ValueError("N must be a positive integer")
        if (2 * complex(self.omega1)).real <= -1 or (2 * complex(self.mu)).real <= -1:
            raise ValueError("need Re(2 omega1) > -1 and Re(2 mu) > -1")

    @property
    def omega(self) -> complex:
        return complex(self.omega1) + 1j * complex(self.omega2)

    @property
    def omega_bar(self) -> complex:
        return complex(self.omega1) - 1j * complex(self.omega2)

    def replace(self, **kw) -> "EnsembleParameters":
        d = dict(N=self.N, mu=self.mu, omega1=self.omega1, omega2=self.omega2,
                 xi_star=self.xi_star)
        d.update(kw)
        return EnsembleParameters(**d)


def xi_star_from_xi(mu: complex, xi: complex) -> complex:
    """The substitution xi* = 1 - (1 - xi) exp(-i pi mu)."""
    return 1.0 - (1.0 - xi) * cmath.exp(-1j * PI * mu)


def xi_star_for_absolute_weight(mu: complex, xi_star: complex) -> complex:
    """Map xi* of the |1+tz|^{2 mu} weight to the principal-branch symbol.

    On |t| = 1 the weight ``|1+tz|^{2mu}`` and the principal-branch symbol
    differ by the phase ``exp(2 pi i mu)`` on the arc.  The average with the
    absolute-value weight at xi* equals the principal-branch average at the
    returned value xi' with ``1 - xi' = (1 - xi*) exp(2 pi i mu)``.
    """
    return 1.0 - (1.0 - xi_star) * cmath.exp(2j * PI * mu)


# --------------------------------------------------------------------------
# small jet arithmetic: (f, f', f'') along t

class _Jet:
    __slots__ = ("v", "d1", "d2")

    def __init__(self, v, d1=0j, d2=0j):
        self.v, self.d1, self.d2 = v, d1, d2

    def __add__(self, o):
        if not isinstance(o, _Jet):
            return _Jet(self.v + o, self.d1, self.d2)
        return _Jet(self.v + o.v, self.d1 + o.d1, self.d2 + o.d2)

    __radd__ = __add__

    def __mul__(self, o):
        if not isinstance(o, _Jet):
            return _Jet(self.v * o, self.d1 * o, self.d2 * o)
        return _Jet(self.v * o.v, self.d1 * o.v + self.v * o.d1,
                    self.d2 * o.v + 2 * self.d1 * o.d1 + self.v * o.d2)

    __rmul__ = __mul__


def _tpow(t, p):
    # principal t^p with derivatives
    v = cmath.exp(p * cmath.log(t)) if p != 0 else 1.0 + 0j
    return _Jet(v, p * v / t, p * (p - 1) * v / (t * t))


def _omtpow(t, p):
    # principal (1-t)^p with derivatives
    u = 1.0 - t
    v = cmath.exp(p * cmath.log(u)) if p != 0 else 1.0 + 0j
    return _Jet(v, -p * v / u, p * (p - 1) * v / (u * u))


def _hyp_jet(a, b, c, t, kind, delta):
    # 2F1(a,b;c;g(t)) with g = t, 1-t or 1/t
    g = {"t": t, "1-t": 1.0 - t, "1/t": 1.0 / t}[kind]
    f0 = hyp2f1(a, b, c, g, delta=delta)
    f1 = a * b / c * hyp2f1(a + 1, b + 1, c + 1, g, delta=delta)
    f2 = a * (a + 1) * b * (b + 1) / (c * (c + 1)) * hyp2f1(a + 2, b + 2, c + 2, g, delta=delta)
    if kind == "t":
        g1, g2 = 1.0, 0.0
    elif kind == "1-t":
        g1, g2 = -1.0, 0.0
    else:
        g1, g2 = -1.0 / t ** 2, 2.0 / t ** 3
    return _Jet(f0, f1 * g1, f2 * g1 * g1 + f1 * g2)


# --------------------------------------------------------------------------

@dataclass(frozen=True)
class SymbolCoefficient:
    """Structural split of the Fourier coefficient w_n about one center.

    ``w_n = prefactor * (analytic_part + base**nonanalytic_exponent * nonanalytic_part)``
    where ``base`` is t for centers 0 and infinity and 1 - t for center 1.
    ``analytic_part`` and ``nonanalytic_part`` include their 2F1 factors.
    """

    center: str
    n: int
    analytic_part: complex
    nonanalytic_part: complex
    nonanalytic_exponent: complex
    prefactor: complex
    base: complex

    @property
    def value(self) -> complex:
        return self.prefactor * (self.analytic_part
                                 + cmath.exp(self.nonanalytic_exponent * cmath.log(self.base))
                                 * self.nonanalytic_part)


def _norm_center(center) -> str:
    c = str(center).lower()
    if c in ("0",):
        return "0"
    if c in ("1",):
        return "1"
    if c in ("inf", "infinity", "oo", "∞"):
        return "inf"
    raise ValueError(f"unknown center {center!r}")


def _guard(x, what, eps):
    if is_near_integer(x, eps):
        raise DegenerateParameterError(f"{what} = {x} is (near) an integer")


def _element_parts(center, n, p: EnsembleParameters, eps):
    """Constant coefficients and 2F1 parameters of the two parts of w_n."""
    mu, w1 = complex(p.mu), complex(p.omega1)
    w, wb, xs = p.omega, p.omega_bar, complex(p.xi_star)
    if center == "0":
        e = n + mu - wb
        if xs == 0:
            # the xi* factor vanishes identically; no division by sin(pi e)
            f = 0j
        else:
            _guard(e, "n+mu-omega_bar", eps)
            f = xs * cmath.exp(-1j * PI * e) / (2j * cmath.sin(PI * e))
        ca = (1 + f) * gamma_complex(2 * w1 + 1) * rgamma(1 + n + mu + w) * rgamma(1 - n - mu + wb)
        cb = -f * gamma_complex(2 * mu + 1) * rgamma(1 + n + mu - wb) * rgamma(1 - n + mu + wb)
        return (ca, (-2 * mu, -n - mu - w, 1 - n - mu + wb), cb,
                (-2 * w1, n - mu - wb, 1 + n + mu - wb), e, "t")
    if center == "1":
        g = 2 * mu + 2 * w1
        _guard(g, "2mu+2omega1", eps)
        e = 1 + g
        ca = gamma_complex(g + 1) * rgamma(1 + n + mu + w) * rgamma(1 - n + mu + wb)
        cb = (1 / PI) * (xs * cmath.exp(-1j * PI * (n + mu - wb)) / 2j
                         + cmath.sin(2 * PI * mu) * cmath.sin(PI * (n + mu + w)) / cmath.sin(PI * g)) \
            * gamma_complex(1 + 2 * mu) * gamma_complex(1 + 2 * w1) * rgamma(2 + g)
        return (ca, (-2 * w1, n - mu - wb, -g), cb, (1 + 2 * mu, n + 1 + mu + w, 2 + g), e, "1-t")
    # infinity
    e = n - mu + w
    _guard(e, "n-mu+omega", eps)
    se = cmath.sin(PI * e)
    ca = cmath.exp(-2j * PI * mu) / se * (cmath.sin(PI * (n + mu + w))
                                          + xs * cmath.exp(-1j * PI * (n + mu + w)) / 2j) \
        * gamma_complex(2 * w1 + 1) * rgamma(1 + n - mu + w) * rgamma(1 - n + mu + wb)
    cb = cmath.exp(-1j * PI * (n + mu + w)) / se * (cmath.sin(2 * PI * mu)
                                                    + xs * cmath.exp(-2j * PI * mu) / 2j) \
        * gamma_complex(2 * mu + 1) * rgamma(1 + n + mu + w) * rgamma(1 - n + mu - w)
    return (ca, (-2 * mu, n - mu - wb, 1 + n - mu + w), -cb,
            (-2 * w1, -n - mu - w, 1 - n + mu - w), e, "1/t")


def symbol_coefficient(center, n: int, params: EnsembleParameters, t: complex,
                       delta: float = 0.05, eps: float = GUARD_EPS) -> SymbolCoefficient:
    """Fourier coefficient w_n split into analytic and non-analytic parts.

    Parameters
    ----------
    center : {0, 1, 'inf'}
        Expansion center whose hypergeometric form is used.
    n : int
        Fourier index.
    params : EnsembleParameters
    t : complex
        Point of evaluation; the 2F1 argument (t, 1-t or 1/t) must satisfy
        ``|arg| <= 1 - delta``.

    Returns
    -------
    SymbolCoefficient
    """
    center = _norm_center(center)
    t = complex(t)
    ca, pa, cb, pb, e, kind = _element_parts(center, n, params, eps)
    g = {"t": t, "1-t": 1.0 - t, "1/t": 1.0 / t}[kind]
    if abs(g) > 1.0 - delta:
        raise ConvergenceDomainError(f"|{kind}| = {abs(g):.3g} outside the series domain")
    a = ca * hyp2f1(*pa, g, delta=delta) if ca != 0 else 0j
    b = cb * hyp2f1(*pb, g, delta=delta) if cb != 0 else 0j
    mu = complex(params.mu)
    if center == "0":
        pref, base = cmath.exp(-mu * cmath.log(t)), t
    elif center == "1":
        pref, base = cmath.exp((n - params.omega_bar) * cmath.log(t)), 1.0 - t
    else:
        pref, base = cmath.exp(mu * cmath.log(t)), t
    return SymbolCoefficient(center, n, a, b, e, pref, base)


def _element_jet(center, n, params, t, delta, eps):
    ca, pa, cb, pb, e, kind = _element_parts(center, n, params, eps)
    mu = complex(params.mu)
    if center == "0":
        out = _tpow(t, -mu) * _hyp_jet(*pa, t, kind, delta) * ca
        if cb != 0:
            out = out + _tpow(t, e - mu) * _hyp_jet(*pb, t, kind, delta) * cb
    elif center == "1":
        inner = _hyp_jet(*pa, t, kind, delta) * ca
        if cb != 0:
            inner = inner + _omtpow(t, e) * _hyp_jet(*pb, t, kind, delta) * cb
        out = _tpow(t, n - params.omega_bar) * inner
    else:
        out = _tpow(t, mu) * _hyp_jet(*pa, t, kind, delta) * ca
        if cb != 0:
            out = out + _tpow(t, e + mu) * _hyp_jet(*pb, t, kind, delta) * cb
    return out


def cofactor_determinant(M) -> complex:
    """Determinant by Laplace expansion along the first row (test oracle)."""
    M = [list(r) for r in M]
    n = len(M)
    if n == 1:
        return M[0][0]
    total = 0
    for k in range(n):
        minor = [row[:k] + row[k + 1:] for row in M[1:]]
        total += (-1) ** k * M[0][k] * cofactor_determinant(minor)
    return total


def _lu_det(M: np.ndarray) -> complex:
    lu, piv = scipy.linalg.lu_factor(M, check_finite=True)
    d = np.diag(lu)
    scale = np.max(np.abs(M)) if M.size else 1.0
    if np.min(np.abs(d)) <= np.finfo(float).tiny or np.min(np.abs(d)) < 1e-300 * max(scale, 1.0):
        raise SingularMatrixError("pivot underflow in LU factorisation")
    sign = (-1) ** int(np.sum(piv != np.arange(len(piv))))
    return complex(sign * np.prod(d))


def toeplitz_determinant(coeff_provider: Callable[[int], complex], N: int) -> complex:
    """det[w_{j-k}]_{0<=j,k<N} by partially pivoted LU in complex arithmetic."""
    if N < 1:
        raise ValueError("N must be positive")
    cache = {m: complex(coeff_provider(m)) for m in range(-(N - 1), N)}
    M = np.array([[cache[j - k] for k in range(N)] for j in range(N)], dtype=complex)
    if N == 1:
        return M[0, 0]
    import warnings
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
        return _lu_det(M)


def select_center(t: complex) -> str:
    """Center chosen automatically from |t| (0: |t|<=0.4, 1: |1-t|<=0.4, inf: |t|>=2.5)."""
    t = complex(t)
    if abs(t) <= 0.4:
        return "0"
    if abs(1 - t) <= 0.4:
        return "1"
    if abs(t) >= 2.5:
        return "inf"
    raise ConvergenceDomainError(
        f"t={t} lies outside all three hypergeometric series regions; use the ODE route")


def eval_AN(params: EnsembleParameters, t: complex, center=None,
            delta: float = 0.05, eps: float = GUARD_EPS) -> complex:
    """A_N(t) as a Toeplitz determinant of hypergeometric symbol coefficients.

    The center is auto-selected from |t| unless given explicitly.
    """
    t = complex(t)
    center = select_center(t) if center is None else _norm_center(center)
    return toeplitz_determinant(
        lambda n: symbol_coefficient(center, n, params, t, delta, eps).value, params.N)


def eval_AN_logderiv(params: EnsembleParameters, t: complex, center=None,
                     delta: float = 0.05, eps: float = GUARD_EPS):
    """A_N together with d/dt log A_N and d^2/dt^2 log A_N (exact element derivatives).

    Returns
    -------
    (A, L1, L2) : tuple of complex
    """
    t = complex(t)
    center = select_center(t) if center is None else _norm_center(center)
    N = params.N
    jets = {m: _element_jet(center, m, params, t, delta, eps) for m in range(-(N - 1), N)}
    M = np.array([[jets[j - k].v for k in range(N)] for j in range(N)], dtype=complex)
    M1 = np.array([[jets[j - k].d1 for k in range(N)] for j in range(N)], dtype=complex)
    M2 = np.array([[jets[j - k].d2 for k in range(N)] for j in range(N)], dtype=complex)
    A = _lu_det(M) if N > 1 else M[0, 0]
    X = np.linalg.solve(M, M1)
    Y = np.linalg.solve(M, M2)
    L1 = np.trace(X)
    L2 = np.trace(Y) - np.trace(X @ X)
    return complex(A), complex(L1), complex(L2)


def arc_symbol_coefficient(n: int, xi: complex, length: float) -> complex:
    """Fourier coefficient of the elementary symbol 1 - xi * 1_{(0, length)}(theta)."""
    if n == 0:
        return 1.0 - xi * length / (2 * PI)
    return -xi * (1.0 - cmath.exp(-1j * n * length)) / (1j * n * 2 * PI)


# --------------------------------------------------------------------------
# closed-form determinant identities

def gamma_ratio_determinant(c: complex, d: complex, n: int):
    """Both sides of det(Gamma(d+k-j)/Gamma(c+k-j)) = prod j! ... .

    Returns
    -------
    (direct, closed_form) : tuple of complex
    """
    c, d = complex(c), complex(d)
    M = np.array([[gamma_complex(d + k - j) * rgamma(c + k - j) for k in range(n)]
                  for j in range(n)], dtype=complex)
    direct = complex(np.linalg.det(M))
    prod = 1.0 + 0j
    for j in range(n):
        prod *= (math.factorial(j) * gamma_complex(1 + d - c) * rgamma(1 + d - c - j)
                 * gamma_complex(d - n + 1 + j) * rgamma(c + j))
    return direct, prod


def gamma_ratio_determinant_general(z, b: complex):
    """Both sides of det(Gamma(z_k+b-j)/Gamma(z_k-j)) = Vandermonde * prod ... ."""
    z = [complex(x) for x in z]
    b = complex(b)
    n = len(z)
    M = np.array([[gamma_complex(z[k] + b - j) * rgamma(z[k] - j) for k in range(n)]
                  for j in range(n)], dtype=complex)
    direct = complex(np.linalg.det(M))
    prod = 1.0 + 0j
    for j in range(n):
        for k in range(j + 1, n):
            prod *= z[k] - z[j]
    for j in range(n):
        prod *= (-1) ** j * poch(-b, j) * gamma_complex(z[j] + b - n + 1) * rgamma(z[j])
    return direct, prod


def morris_integral(N: int, a: complex, b: complex) -> complex:
    """Closed form prod_{j<N} Gamma(a+b+j+1) Gamma(j+2) / (Gamma(a+j+1) Gamma(b+j+1))."""
    out = 1.0 + 0j
    for j in range(N):
        out *= (gamma_complex(a + b + j + 1) * math.factorial(j + 1)
                * rgamma(a + j + 1) * rgamma(b + j + 1))
    return out
