"""Complex special functions used throughout the package.

Gamma is a Lanczos approximation (Godfrey's g = 607/128 coefficient set)
with reflection for Re z < 1/2.  The Gauss function 2F1 is summed directly
from its power series and refuses arguments outside |z| <= 1 - delta.
"""
from __future__ import annotations

import cmath
import itertools
import math

import numpy as np

from .errors import (ConvergenceDomainError, DegenerateParameterError,
                     PoleError, RangeError)

__all__ = [
    "gamma_complex", "rgamma", "loggamma", "poch", "hyp2f1",
    "hyp2f1_coefficients", "elementary_symmetric", "is_near_integer",
    "GUARD_EPS",
]

GUARD_EPS = 1e-8
_POLE_EPS = 1e-12

_LANCZOS_G = 607.0 / 128.0
_LANCZOS_C = (
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


def _check_finite(z):
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"non-finite argument {z!r}")


def _near_pole(z, eps=_POLE_EPS):
    """Return True if z sits within eps (relative) of 0, -1, -2, ..."""
    n = round(z.real)
    if n > 0:
        return False
    return abs(z - n) < eps * max(1.0, abs(n))


def _loggamma_right(z):
    # valid for Re z >= 1/2; log Gamma(z) on a branch continuous in the half plane
    z = z - 1.0
    x = _LANCZOS_C[0]
    for k in range(1, len(_LANCZOS_C)):
        x += _LANCZOS_C[k] / (z + k)
    t = z + _LANCZOS_G + 0.5
    return _LOG_SQRT_2PI + (z + 0.5) * cmath.log(t) - t + cmath.log(x)


def gamma_complex(z: complex) -> complex:
    """Gamma function for complex argument.

    Parameters
    ----------
    z : complex
        Argument.  Must not lie within 1e-12 of a non-positive integer.

    Returns
    -------
    complex
        Gamma(z), with relative error around 1e-14 on |Re z|, |Im z| <= 20.

    Raises
    ------
    PoleError
        At (or numerically at) a non-positive integer.
    """
    z = complex(z)
    _check_finite(z)
    if _near_pole(z):
        raise PoleError(f"Gamma has a pole at {z}")
    if z.real < 0.5:
        # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return cmath.pi / (cmath.sin(cmath.pi * z) * cmath.exp(_loggamma_right(1.0 - z)))
    return cmath.exp(_loggamma_right(z))


def rgamma(z: complex) -> complex:
    """Reciprocal Gamma function, entire; exactly 0 at non-positive integers.

    Arguments within 1e-12 (relative) of a pole are snapped to the pole so
    that 1/Gamma suppression factors vanish identically in floating point.
    """
    z = complex(z)
    _check_finite(z)
    if _near_pole(z):
        return 0j
    if z.real < 0.5:
        return cmath.sin(cmath.pi * z) * cmath.exp(_loggamma_right(1.0 - z)) / cmath.pi
    return cmath.exp(-_loggamma_right(z))


def loggamma(z: complex) -> complex:
    """log Gamma(z) for Re z >= 1/2 (principal-type branch, no reflection)."""
    z = complex(z)
    if z.real < 0.5:
        return cmath.log(gamma_complex(z))
    return _loggamma_right(z)


def poch(a: complex, k: int) -> complex:
    """Rising factorial (a)_k for integer k >= 0."""
    out = 1.0 + 0j
    for j in range(k):
        out *= a + j
    return out


def is_near_integer(z: complex, eps: float = GUARD_EPS) -> bool:
    """True iff the distance from z to the nearest integer is below eps."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    z = complex(z)
    return abs(z - round(z.real)) < eps


def _check_c(c, eps):
    if c.real < 0.5 and is_near_integer(c, eps) and round(c.real) <= 0:
        raise DegenerateParameterError(f"2F1 lower parameter c={c} is near a non-positive integer")


def hyp2f1_coefficients(a: complex, b: complex, c: complex, m: int,
                        eps: float = GUARD_EPS) -> np.ndarray:
    """Taylor coefficients (a)_k (b)_k / ((c)_k k!) for k < m."""
    a, b, c = complex(a), complex(b), complex(c)
    _check_c(c, eps)
    out = np.empty(m, dtype=complex)
    term = 1.0 + 0j
    for k in range(m):
        out[k] = term
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1))
    return out


def hyp2f1(a: complex, b: complex, c: complex, z: complex,
           delta: float = 0.05, eps: float = GUARD_EPS,
           tol: float = 1e-16, maxiter: int = 5000) -> complex:
    """Gauss hypergeometric function by direct summation of its series.

    Parameters
    ----------
    a, b, c : complex
        Parameters; c must not be near a non-positive integer.
    z : complex
        Argument with |z| <= 1 - delta.
    delta : float
        Safety margin from the unit circle.
    tol : float
        Relative size of the estimated tail at which summation stops.

    Raises
    ------
    ConvergenceDomainError
        If |z| > 1 - delta.
    DegenerateParameterError
        If c is within eps of a non-positive integer.
    """
    a, b, c, z = complex(a), complex(b), complex(c), complex(z)
    _check_c(c, eps)
    if abs(z) > 1.0 - delta:
        raise ConvergenceDomainError(f"|z|={abs(z):.3g} exceeds 1-delta={1 - delta:.3g}")
    if z == 0:
        return 1.0 + 0j
    s = 1.0 + 0j
    term = 1.0 + 0j
    az = abs(z)
    for k in range(maxiter):
        term = term * (a + k) * (b + k) / ((c + k) * (k + 1)) * z
        s += term
        if term == 0:
            return s
        # tail bound once the term ratio has settled below |z|-ish values
        ratio = abs((a + k + 1) * (b + k + 1) / ((c + k + 1) * (k + 2))) * az
        if ratio < 1.0 and abs(term) * ratio / (1.0 - ratio) <= tol * abs(s):
            return s
    raise ConvergenceDomainError("2F1 series did not converge within maxiter terms")


def elementary_symmetric(p: int, values) -> complex:
    """Elementary symmetric polynomial e_p of the given values (e_0 = 1)."""
    values = list(values)
    if p < 0 or p > len(values):
        raise RangeError(f"p={p} out of range for {len(values)} values")
    if p == 0:
        return 1
    total = 0
    for combo in itertools.combinations(values, p):
        prod = 1
        for x in combo:
            prod = prod * x
        total = total + prod
    return total
