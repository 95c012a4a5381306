"""The sigma form of Painleve VI, the Okamoto Hamiltonian, parameter maps
between ensembles and the (v, theta) parameterisations, integration of the
sigma form along straight complex paths, and an empirical convention audit.
"""
from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import (BranchLossError, PathSingularityError, PoleError,
                     TrustRegionError)
from .specfun import elementary_symmetric
from .toeplitz import EnsembleParameters

__all__ = [
    "PVIParameters", "SigmaState", "HamiltonianState", "AuditReport",
    "v_from_jue", "v_from_jacobi", "v_from_cyue",
    "sigma_form_residual", "theta_form_residual", "sigma_form_i_residual",
    "cyue_sigma_residual", "sigma_double_prime_roots", "hamiltonian",
    "hamiltonian_rhs", "aux_hamiltonian", "zeta_from_tau", "integrate_sigma",
    "sigma_from_an_series", "sse_affine_terms", "jue_sigma_state", "jue_log_part",
    "convention_audit",
]


@dataclass(frozen=True)
class PVIParameters:
    """The four parameters v1..v4 of the sigma form."""

    v1: complex
    v2: complex
    v3: complex
    v4: complex

    def as_tuple(self):
        return (complex(self.v1), complex(self.v2), complex(self.v3), complex(self.v4))

    @property
    def product(self) -> complex:
        v1, v2, v3, v4 = self.as_tuple()
        return v1 * v2 * v3 * v4

    # parameters of the y-form
    @property
    def alpha(self):
        return 0.5 * (self.v1 - self.v2) ** 2

    @property
    def beta(self):
        return -0.5 * (self.v3 + self.v4) ** 2

    @property
    def gamma(self):
        return 0.5 * (self.v3 - self.v4) ** 2

    @property
    def delta(self):
        return 0.5 * (1 - (1 - self.v1 - self.v2) ** 2)

    @classmethod
    def from_theta(cls, theta) -> "PVIParameters":
        """v = ((tht+thinf)/2, (tht-thinf)/2, (th0+th1)/2, (th0-th1)/2)."""
        th0, tht, th1, thi = (complex(x) for x in _theta_tuple(theta))
        return cls((tht + thi) / 2, (tht - thi) / 2, (th0 + th1) / 2, (th0 - th1) / 2)


def _theta_tuple(theta):
    if hasattr(theta, "as_tuple"):
        return theta.as_tuple()
    return tuple(theta)


def _v_tuple(v):
    if isinstance(v, PVIParameters):
        return v.as_tuple()
    return tuple(complex(x) for x in v)


@dataclass(frozen=True)
class SigmaState:
    t: complex
    sigma: complex
    sigma_prime: complex
    sigma_double_prime: complex

    def as_tuple(self):
        return (self.t, self.sigma, self.sigma_prime, self.sigma_double_prime)


@dataclass(frozen=True)
class HamiltonianState:
    t: complex
    q: complex
    p: complex


def v_from_jue(params: EnsembleParameters) -> PVIParameters:
    """Sigma-form parameters of the spectrum singularity average A_N."""
    N, mu = params.N, complex(params.mu)
    w, wb = params.omega, params.omega_bar
    return PVIParameters((N + w - mu) / 2, wb + (N + w + mu) / 2,
                         (N - w + mu) / 2, -mu - (N + w + mu) / 2)


def v_from_jacobi(N: int, a: complex, b: complex) -> PVIParameters:
    """Sigma-form parameters attached to the Jacobi gap probability."""
    s = (a + b) / 2
    return PVIParameters(N + s, N + s, s, (a - b) / 2)


def v_from_cyue(N: int, a: complex) -> PVIParameters:
    """Parameters (-a, 0, N+a, a) of the Cauchy ensemble reduction."""
    return PVIParameters(-a, 0, N + a, a)


# --------------------------------------------------------------------------
# residuals

def _F(t, s, s1, s2, v):
    v1, v2, v3, v4 = v
    return (s1 * (t * (t - 1) * s2) ** 2 + (s1 * (2 * s - (2 * t - 1) * s1) + v1 * v2 * v3 * v4) ** 2
            - (s1 + v1 ** 2) * (s1 + v2 ** 2) * (s1 + v3 ** 2) * (s1 + v4 ** 2))


def sigma_form_residual(v, state: SigmaState) -> complex:
    """Left minus right side of the sigma form at a state."""
    return complex(_F(complex(state.t), complex(state.sigma), complex(state.sigma_prime),
                      complex(state.sigma_double_prime), _v_tuple(v)))


def theta_form_residual(theta, state: SigmaState) -> complex:
    """Residual of the sigma form written in the formal monodromy exponents."""
    th0, tht, th1, thi = (complex(x) for x in _theta_tuple(theta))
    t, z, z1, z2 = (complex(x) for x in state.as_tuple())
    lhs = (z1 * (t * (t - 1) * z2) ** 2
           + (2 * z1 * (t * z1 - z) - z1 ** 2 - (tht ** 2 - thi ** 2) * (th0 ** 2 - th1 ** 2) / 16) ** 2)
    rhs = ((z1 + (tht + thi) ** 2 / 4) * (z1 + (tht - thi) ** 2 / 4)
           * (z1 + (th0 + th1) ** 2 / 4) * (z1 + (th0 - th1) ** 2 / 4))
    return lhs - rhs


def sigma_form_i_residual(v, s, h, h1, h2) -> complex:
    """Left side of the sigma form after t = (is+1)/2, sigma = (i/2) h."""
    v1, v2, v3, v4 = _v_tuple(v)
    return (h1 * ((1 + s * s) * h2) ** 2 + 4 * (h1 * (h - s * h1) - 1j * v1 * v2 * v3 * v4) ** 2
            + 4 * (h1 + v1 ** 2) * (h1 + v2 ** 2) * (h1 + v3 ** 2) * (h1 + v4 ** 2))


def cyue_sigma_residual(N, a, s, sig, sig1, sig2) -> complex:
    """Left side of the Cauchy-ensemble sigma equation."""
    return ((1 + s * s) ** 2 * sig2 ** 2 + 4 * (1 + s * s) * sig1 ** 3 - 8 * s * sig * sig1 ** 2
            + 4 * sig ** 2 * (sig1 - a * a) + 8 * a * a * s * sig * sig1
            + 4 * (N * (N + 2 * a) - a * a * s * s) * sig1 ** 2)


def sigma_double_prime_roots(v, t, s, s1):
    """The two roots +-r of the sigma form read as a quadratic in sigma''.

    Returns (r, discriminant) with sigma'' = +-r.
    """
    v1, v2, v3, v4 = _v_tuple(v)
    t, s, s1 = complex(t), complex(s), complex(s1)
    B = s1 * (2 * s - (2 * t - 1) * s1) + v1 * v2 * v3 * v4
    prod = (s1 + v1 ** 2) * (s1 + v2 ** 2) * (s1 + v3 ** 2) * (s1 + v4 ** 2)
    if s1 == 0:
        raise BranchLossError("sigma' = 0: sigma'' undetermined by the sigma form")
    D = (prod - B * B) / s1
    return cmath.sqrt(D) / (t * (t - 1)), D


def _nearest_root(v, t, s, s1, ref):
    r, _ = sigma_double_prime_roots(v, t, s, s1)
    return r if abs(r - ref) <= abs(-r - ref) else -r


def zeta_from_tau(theta, t, dlog_tau) -> complex:
    """The theta-form sigma function from t and d/dt log tau."""
    th0, tht, th1, thi = (complex(x) for x in _theta_tuple(theta))
    return (t * (t - 1) * dlog_tau + (tht ** 2 - thi ** 2) * t / 4
            - (tht ** 2 + th0 ** 2 - thi ** 2 - th1 ** 2) / 8)


# --------------------------------------------------------------------------
# Hamiltonian

def _guard_ham(state: HamiltonianState, eps=1e-12):
    t, q = complex(state.t), complex(state.q)
    if abs(t) < eps or abs(t - 1) < eps:
        raise PoleError("t at a fixed singularity")
    if min(abs(q), abs(q - 1), abs(q - t)) < eps:
        raise PoleError("q collides with 0, 1 or t")


def _ham_parts(v, t, q, p):
    v1, v2, v3, v4 = _v_tuple(v)
    L = (v3 + v4) * (q - 1) * (q - t) + (v3 - v4) * q * (q - t) - (v1 + v2) * q * (q - 1)
    dL = (v3 + v4) * (2 * q - 1 - t) + (v3 - v4) * (2 * q - t) - (v1 + v2) * (2 * q - 1)
    C = (v3 - v1) * (v3 - v2)
    K = q * (q - 1) * (q - t) * p * p - L * p + C * (q - t)
    return K, L, dL, C


def hamiltonian(v, state: HamiltonianState) -> complex:
    """H_VI(q, p, t)."""
    _guard_ham(state)
    t, q, p = complex(state.t), complex(state.q), complex(state.p)
    return _ham_parts(v, t, q, p)[0] / (t * (t - 1))


def hamiltonian_rhs(v, state: HamiltonianState):
    """(q', p') = (dH/dp, -dH/dq)."""
    _guard_ham(state)
    t, q, p = complex(state.t), complex(state.q), complex(state.p)
    _, L, dL, C = _ham_parts(v, t, q, p)
    tt = t * (t - 1)
    dq_cubic = 3 * q * q - 2 * (1 + t) * q + t
    qp = (2 * q * (q - 1) * (q - t) * p - L) / tt
    pp = -(dq_cubic * p * p - dL * p + C) / tt
    return qp, pp


def aux_hamiltonian(v, state: HamiltonianState) -> complex:
    """h_VI = t(t-1) H + e2[-v1,-v2,v3] t - e2[-v1,-v2,v3,v4] / 2."""
    _guard_ham(state)
    v1, v2, v3, v4 = _v_tuple(v)
    t, q, p = complex(state.t), complex(state.q), complex(state.p)
    K = _ham_parts(v, t, q, p)[0]
    return (K + elementary_symmetric(2, [-v1, -v2, v3]) * t
            - 0.5 * elementary_symmetric(2, [-v1, -v2, v3, v4]))


# --------------------------------------------------------------------------
# integration

# Dormand-Prince 5(4) tableau
_C = (0.0, 1 / 5, 3 / 10, 4 / 5, 8 / 9, 1.0, 1.0)
_A = (
    (),
    (1 / 5,),
    (3 / 40, 9 / 40),
    (44 / 45, -56 / 15, 32 / 9),
    (19372 / 6561, -25360 / 2187, 64448 / 6561, -212 / 729),
    (9017 / 3168, -355 / 33, 46732 / 5247, 49 / 176, -5103 / 18656),
    (35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84),
)
_B5 = np.array([35 / 384, 0.0, 500 / 1113, 125 / 192, -2187 / 6784, 11 / 84, 0.0])
_B4 = np.array([5179 / 57600, 0.0, 7571 / 16695, 393 / 640, -92097 / 339200, 187 / 2100, 1 / 40])


def _check_path(t0, t1, radius):
    for z in (0.0, 1.0):
        d = t1 - t0
        lam = 0.0 if d == 0 else min(1.0, max(0.0, ((z - t0) * d.conjugate()).real / abs(d) ** 2))
        dmin = abs(t0 + lam * d - z)
        allowed = min(radius, abs(t0 - z), abs(t1 - z))
        if dmin < allowed * (1 - 1e-12) or dmin < 1e-12:
            raise PathSingularityError(
                f"path {t0} -> {t1} passes within {dmin:.3g} of t={z:g}")


def integrate_sigma(v, initial: SigmaState, t_target: complex, tol: float = 1e-10,
                    exclusion: float = 0.02, h0: float | None = None,
                    max_steps: int = 100000) -> SigmaState:
    """Integrate the sigma form along the straight segment to ``t_target``.

    The state (sigma, sigma') is advanced by a Dormand-Prince 5(4) pair with
    PI step control; sigma'' is the root of the quadratic nearest to the
    linear extrapolation of the previously accepted values.  When the
    discriminant is tiny relative to the state the sign is taken from the
    differentiated (third-order) equation instead.

    A path may start or end inside the exclusion disks about 0 and 1 but must
    not come closer to those points than its endpoints (or ``exclusion``).
    """
    v = _v_tuple(v)
    t0, t1 = complex(initial.t), complex(t_target)
    if t1 == t0:
        return initial
    _check_path(t0, t1, exclusion)
    d = t1 - t0
    y = np.array([initial.sigma, initial.sigma_prime], dtype=complex)
    lam = 0.0
    s2_prev = complex(initial.sigma_double_prime)
    s3_prev = _third_derivative(v, t0, y[0], y[1], s2_prev)
    lam_prev = 0.0

    def f(l, yy):
        t = t0 + l * d
        ref = s2_prev + (l - lam_prev) * d * s3_prev
        r, D = sigma_double_prime_roots(v, t, yy[0], yy[1])
        scale = 1.0 + abs(ref)
        if abs(r) < 1e-7 * scale and abs(ref) < 1e-7 * scale:
            raise BranchLossError(f"sigma'' branch unresolved near t={t}")
        s2 = r if abs(r - ref) <= abs(-r - ref) else -r
        return np.array([yy[1], s2], dtype=complex) * d, s2

    h = h0 if h0 is not None else min(1e-3, 0.01 * min(abs(t0), abs(t0 - 1), 1.0) / abs(d) + 1e-6)
    err_prev = 1.0
    k1, s2cur = f(0.0, y)
    steps = 0
    while lam < 1.0:
        steps += 1
        if steps > max_steps:
            raise BranchLossError("step budget exhausted")
        h = min(h, 1.0 - lam)
        K = [k1]
        try:
            for i in range(1, 7):
                yi = y + h * sum(a * K[j] for j, a in enumerate(_A[i]))
                ki, s2i = f(lam + _C[i] * h, yi)
                K.append(ki)
        except BranchLossError:
            if h < 1e-14:
                raise
            h *= 0.25
            continue
        K = np.array(K)
        y5 = y + h * (_B5 @ K)
        y4 = y + h * (_B4 @ K)
        sc = tol * (1.0 + np.maximum(np.abs(y), np.abs(y5)))
        err = float(np.max(np.abs(y5 - y4) / sc)) + 1e-300
        if err <= 1.0:
            lam_new = lam + h
            t_new = t0 + lam_new * d
            # FSAL stage gives sigma'' at the new point
            s2_new = s2i
            s3_prev = (s2_new - s2_prev) / (h * d) if h > 0 else s3_prev
            s2_prev, lam_prev = s2_new, lam_new
            y, lam = y5, lam_new
            k1 = K[6]
            fac = 0.9 * err ** (-0.7 / 5) * err_prev ** (0.4 / 5)
            h *= min(5.0, max(0.2, fac))
            err_prev = max(err, 1e-4)
        else:
            h *= max(0.1, 0.9 * err ** (-1 / 5))
        if h < 1e-15:
            raise BranchLossError("step size underflow")
    t_end = t0 + d
    s2 = _nearest_root(v, t_end, y[0], y[1], s2_prev)
    return SigmaState(t_end, complex(y[0]), complex(y[1]), s2)


def _third_derivative(v, t, s, s1, s2):
    """sigma''' from the differentiated sigma form."""
    hh = 1e-6 * (1 + abs(t))
    Ft = (_F(t + hh, s, s1, s2, v) - _F(t - hh, s, s1, s2, v)) / (2 * hh)
    hs = 1e-6 * (1 + abs(s))
    Fs = (_F(t, s + hs, s1, s2, v) - _F(t, s - hs, s1, s2, v)) / (2 * hs)
    h1 = 1e-6 * (1 + abs(s1))
    F1 = (_F(t, s, s1 + h1, s2, v) - _F(t, s, s1 - h1, s2, v)) / (2 * h1)
    den = 2 * s1 * (t * (t - 1)) ** 2 * s2
    if den == 0:
        return 0j
    return -(Ft + Fs * s1 + F1 * s2) / den


# --------------------------------------------------------------------------
# seeding from A_N expansions

def sse_affine_terms(v, params: EnsembleParameters, as_printed: bool = False):
    """Slope and intercept (a, b) with sigma = a t + b + t(t-1) d/dt log A_N.

    The default uses a = e2[v1,v3,v4] + N mu and b = -e2[v]/2 - N mu, which
    makes the sigma form hold for the determinant; ``as_printed`` selects
    a = e2[-v1,-v2,v3] + N mu and b = -e2[-v1,-v2,v3,v4]/2 - N mu.
    """
    v1, v2, v3, v4 = _v_tuple(v)
    Nmu = params.N * complex(params.mu)
    if as_printed:
        a = elementary_symmetric(2, [-v1, -v2, v3]) + Nmu
        b = -0.5 * elementary_symmetric(2, [-v1, -v2, v3, v4]) - Nmu
    else:
        a = elementary_symmetric(2, [v1, v3, v4]) + Nmu
        b = -0.5 * elementary_symmetric(2, [v1, v2, v3, v4]) - Nmu
    return complex(a), complex(b)


def sigma_from_an_series(series, v, params: EnsembleParameters, t0: complex,
                         as_printed: bool = False, project: bool = True,
                         trust: float = 1e-2) -> SigmaState:
    """Sigma state at t0 from a series for A_N.

    ``series`` is any object with ``log_derivatives(t)`` returning the first
    three t-derivatives of log A_N and ``error_estimate(t)``.  With
    ``project`` the term-wise sigma'' is replaced by the nearest root of the
    quadratic, so the returned state satisfies the sigma form exactly.

    Raises
    ------
    TrustRegionError
        If the series' own error estimate at t0 exceeds ``trust``.
    """
    t0 = complex(t0)
    est = series.error_estimate(t0)
    if trust is not None and est > trust:
        raise TrustRegionError(f"series error estimate {est:.3g} at t={t0} exceeds {trust:g}")
    L1, L2, L3 = series.log_derivatives(t0)
    a, b = sse_affine_terms(v, params, as_printed)
    tt = t0 * (t0 - 1)
    s = a * t0 + b + tt * L1
    s1 = a + (2 * t0 - 1) * L1 + tt * L2
    s2 = 2 * L1 + 2 * (2 * t0 - 1) * L2 + tt * L3
    if project:
        s2 = _nearest_root(v, t0, s, s1, s2)
    return SigmaState(t0, s, s1, s2)


def jue_sigma_state(v, u: complex, L1, L2, L3) -> SigmaState:
    """Sigma state from derivatives of log E(1-u) in the interval length u.

    sigma = u(u-1) d/du log E(1-u) - v1 v2 u + (v1 v2 + v3 v4)/2, with
    sigma'' projected onto the nearest root of the quadratic.
    """
    v1, v2, v3, v4 = _v_tuple(v)
    u = complex(u)
    tt = u * (u - 1)
    s = tt * L1 - v1 * v2 * u + (v1 * v2 + v3 * v4) / 2
    s1 = (2 * u - 1) * L1 + tt * L2 - v1 * v2
    s2 = 2 * L1 + 2 * (2 * u - 1) * L2 + tt * L3
    return SigmaState(u, s, s1, _nearest_root((v1, v2, v3, v4), u, s, s1, s2))


def jue_log_part(v, state: SigmaState) -> complex:
    """u(u-1) d/du log E(1-u) recovered from a JUE sigma state."""
    v1, v2, v3, v4 = _v_tuple(v)
    return state.sigma + v1 * v2 * state.t - (v1 * v2 + v3 * v4) / 2


# --------------------------------------------------------------------------
# convention audit

_OFFSETS = {
    "+(-v1v2+v3v4)/2": lambda v: (-v[0] * v[1] + v[2] * v[3]) / 2,
    "+(v1v2+v3v4)/2": lambda v: (v[0] * v[1] + v[2] * v[3]) / 2,
    "-(-v1v2+v3v4)/2": lambda v: (v[0] * v[1] - v[2] * v[3]) / 2,
    "-(v1v2+v3v4)/2": lambda v: -(v[0] * v[1] + v[2] * v[3]) / 2,
}


@dataclass
class AuditReport:
    """Outcome of :func:`convention_audit`.

    ``entries`` holds one row per candidate: (orientation, log-derivative
    sign, slope sign, offset label, max residual).  ``conventions`` groups
    rows by the (sign, slope, offset) triple and keeps the best orientation.
    """

    entries: list
    conventions: dict
    winner: tuple | None
    unique: bool
    best_rival: float
    flags: list = field(default_factory=list)


def _fd_derivs(f, t, h):
    fs = [f(t + k * h) for k in (-3, -2, -1, 0, 1, 2, 3)]
    m3, m2, m1, z, p1, p2, p3 = fs
    d1 = (p3 - 9 * p2 + 45 * p1 - 45 * m1 + 9 * m2 - m3) / (60 * h)
    d2 = (2 * p3 - 27 * p2 + 270 * p1 - 490 * z + 270 * m1 - 27 * m2 + 2 * m3) / (180 * h * h)
    d3 = (-p3 + 8 * p2 - 13 * p1 + 13 * m1 - 8 * m2 + m3) / (8 * h ** 3)
    return d1, d2, d3


def convention_audit(E_values: Callable[[float], complex], v, window: Sequence[float],
                     h: float = 2e-3, threshold: float = 1e-4,
                     rival_floor: float = 1e-1) -> AuditReport:
    """Find the sign and offset convention that turns log E into a sigma function.

    ``E_values(s)`` is the gap generating function for the interval (s, 1).
    Candidates are sigma = e1 t(t-1) d/dt log E(x(t)) + e2 v1 v2 t + c with
    x(t) = 1-t or t, e1, e2 = +-1 and c one of +-(-v1v2+v3v4)/2,
    +-(v1v2+v3v4)/2.  Derivatives use 7-point central differences with step h.

    Candidates that define the same function on the window (possible when
    v3 v4 = 0) are merged under the first label.  A convention wins if some
    orientation gives max residual below ``threshold``; it is unique if every
    other convention stays above ``rival_floor`` in both orientations.
    """
    vv = _v_tuple(v)
    window = [float(t) for t in window]
    logs = {}
    for orient in ("1-t", "t"):
        g = (lambda t, o=orient: cmath.log(E_values(1 - t if o == "1-t" else t)))
        logs[orient] = [(t,) + _fd_derivs(g, t, h) for t in window]
    entries = []
    seen = {}
    aliases = []
    for orient, e1, e2, lab in itertools.product(("1-t", "t"), (1, -1), (1, -1), _OFFSETS):
        c = _OFFSETS[lab](vv)
        res, sig_vals = 0.0, []
        for t, d1, d2, d3 in logs[orient]:
            tt = t * (t - 1)
            s = e1 * tt * d1 + e2 * vv[0] * vv[1] * t + c
            s1 = e1 * ((2 * t - 1) * d1 + tt * d2) + e2 * vv[0] * vv[1]
            s2 = e1 * (2 * d1 + 2 * (2 * t - 1) * d2 + tt * d3)
            res = max(res, abs(_F(t, s, s1, s2, vv)))
            sig_vals.append(s)
        key = (e1, e2, lab)
        dup = None
        for (o2, k2), vals in seen.items():
            if o2 == orient and k2 != key and np.allclose(vals, sig_vals, rtol=1e-12, atol=1e-12):
                dup = k2
                break
        if dup is not None:
            aliases.append((key, dup))
            continue
        seen[(orient, key)] = sig_vals
        entries.append((orient, e1, e2, lab, res))
    conventions = {}
    for orient, e1, e2, lab, res in entries:
        k = (e1, e2, lab)
        if k not in conventions or res < conventions[k][1]:
            conventions[k] = (orient, res)
    ranked = sorted(conventions.items(), key=lambda kv: kv[1][1])
    flags = []
    winner, unique, best_rival = None, False, math.inf
    if ranked and ranked[0][1][1] < threshold:
        winner = ranked[0][0] + (ranked[0][1][0],)
        best_rival = ranked[1][1][1] if len(ranked) > 1 else math.inf
        unique = best_rival > rival_floor
        orients = [o for o, e1, e2, lab, r in entries
                   if (e1, e2, lab) == ranked[0][0] and r < threshold]
        if len(orients) > 1:
            flags.append("orientation_degenerate")
    if aliases:
        flags.append("aliased_offsets")
    return AuditReport(entries, conventions, winner, unique, best_rival, flags)
