"""Monodromy data of the Fuchsian system behind Painleve VI.

Jimbo's explicit parameterisation of the monodromy matrices, the connection
relation, the monodromy manifold and its gradient, and the monodromy data of
the spectrum singularity ensemble in its three generic cases.

Loop convention: M_inf M_1 M_t M_0 = I.
"""
from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import DegenerateParameterError, NonInvertibleC
from .specfun import GUARD_EPS, is_near_integer
from .toeplitz import EnsembleParameters

__all__ = [
    "ThetaSet", "MonodromyData", "MonodromyQuadruple", "MonodromyInvariants",
    "half_sine", "trig_identities", "build_monodromy", "invariants_from_matrices",
    "connection_residual", "manifold_value", "manifold_gradient",
    "sse_case_data", "sse_case_matrices", "case_structure", "sigma01_tilde",
]

log = logging.getLogger(__name__)
PI = math.pi


@dataclass(frozen=True)
class ThetaSet:
    """Formal monodromy exponents at 0, t, 1 and infinity."""

    theta0: complex
    thetaT: complex
    theta1: complex
    thetaInf: complex

    def as_tuple(self):
        return (complex(self.theta0), complex(self.thetaT),
                complex(self.theta1), complex(self.thetaInf))

    def non_integer(self, eps=GUARD_EPS) -> bool:
        """True when no exponent is (numerically) an integer."""
        return not any(is_near_integer(x, eps) for x in self.as_tuple())

    def generic_for(self, sigma: complex, eps=GUARD_EPS) -> bool:
        """True when th0 +- tht +- sigma and thinf +- th1 +- sigma avoid 2Z."""
        th0, tht, th1, thi = self.as_tuple()
        for a, b in ((th0, tht), (thi, th1)):
            for s1 in (1, -1):
                for s2 in (1, -1):
                    if is_near_integer((a + s1 * b + s2 * sigma) / 2, eps):
                        return False
        return True


@dataclass(frozen=True)
class MonodromyData:
    """Invariants sigma_{mu nu} and coefficients s_{mu nu}; ``r`` is the scale of C."""

    sigma0t: complex
    sigmaT1: complex
    sigma01: complex
    s0t: complex = 1.0
    sT1: complex = 1.0
    s01: complex = 1.0
    r: complex = 1.0


@dataclass
class MonodromyQuadruple:
    M0: np.ndarray
    Mt: np.ndarray
    M1: np.ndarray
    MInf: np.ndarray
    C: Optional[np.ndarray] = None

    def cyclic_residual(self) -> float:
        return float(np.max(np.abs(self.MInf @ self.M1 @ self.Mt @ self.M0 - np.eye(2))))


@dataclass(frozen=True)
class MonodromyInvariants:
    """Traces p_mu = Tr M_mu and p_{mu nu} = Tr M_mu M_nu."""

    p0: complex
    pt: complex
    p1: complex
    pInf: complex
    p0t: complex
    pt1: complex
    p01: complex

    def as_tuple(self):
        return (self.p0, self.pt, self.p1, self.pInf, self.p0t, self.pt1, self.p01)

    @staticmethod
    def _sigma(p):
        s = cmath.acos(p / 2) / PI
        return s

    @property
    def sigma0t(self):
        return self._sigma(self.p0t)

    @property
    def sigmaT1(self):
        return self._sigma(self.pt1)

    @property
    def sigma01(self):
        return self._sigma(self.p01)

    @property
    def valid(self) -> bool:
        """Principal-branch sigmas strictly inside 0 < Re < 1."""
        return all(0 < s.real < 1 for s in (self.sigma0t, self.sigmaT1, self.sigma01))

    def to_data(self, s0t=1.0, sT1=1.0, s01=1.0, r=1.0) -> MonodromyData:
        return MonodromyData(self.sigma0t, self.sigmaT1, self.sigma01, s0t, sT1, s01, r)


def half_sine(x: complex) -> complex:
    """sin(pi x / 2)."""
    return cmath.sin(PI * complex(x) / 2)


S = half_sine


def trig_identities(theta: ThetaSet, sigma: complex) -> dict:
    """Residuals (left minus right) of the ten half-sine product identities."""
    th0, tht, th1, thi = theta.as_tuple()
    sg = complex(sigma)
    c = lambda x: cmath.cos(PI * x)
    s = lambda x: cmath.sin(PI * x)
    c0, ct, c1, ci, cs = c(th0), c(tht), c(th1), c(thi), c(sg)
    s0, st, s1, si, ss = s(th0), s(tht), s(th1), s(thi), s(sg)
    return {
        "a": 2 * S(thi - th1 + sg) * S(thi + th1 + sg) - (c1 - ci * cs + si * ss),
        "b": 2 * S(thi + th1 - sg) * S(thi - th1 - sg) - (c1 - ci * cs - si * ss),
        "c": 2 * S(thi - th1 + sg) * S(thi - th1 - sg) - (cs - c1 * ci - s1 * si),
        "d": 2 * S(thi + th1 + sg) * S(thi + th1 - sg) - (cs - c1 * ci + s1 * si),
        "e": 2 * S(thi - th1 + sg) * S(thi + th1 - sg) - (-ci + c1 * cs + s1 * ss),
        "f": 2 * S(thi + th1 + sg) * S(thi - th1 - sg) - (-ci + c1 * cs - s1 * ss),
        "g": 2 * S(th0 - tht + sg) * S(th0 + tht + sg) - (ct - c0 * cs + s0 * ss),
        "h": 2 * S(th0 + tht - sg) * S(th0 - tht - sg) - (ct - c0 * cs - s0 * ss),
        "i": 2 * S(th0 - tht + sg) * S(th0 + tht - sg) - (-c0 + ct * cs + st * ss),
        "j": 2 * S(th0 + tht + sg) * S(th0 - tht - sg) - (-c0 + ct * cs - st * ss),
    }


def build_monodromy(theta: ThetaSet, sigma0t: complex, s0t: complex, r: complex = 1.0,
                    override: bool = False) -> MonodromyQuadruple:
    """Jimbo's monodromy matrices for given exponents and (sigma0t, s0t).

    M0 and Mt are returned after conjugating the printed C M C^{-1} back by
    C^{-1}.  The traces depend on s0t and r only through s0t / r.

    Parameters
    ----------
    override : bool
        Accept exponents violating Jimbo's genericity conditions (logged).

    Raises
    ------
    DegenerateParameterError
        sin(pi sigma) or sin(pi thetaInf) numerically zero, or the genericity
        conditions fail without ``override``.
    NonInvertibleC
        det C underflows.
    """
    th0, tht, th1, thi = theta.as_tuple()
    sg, s, r = complex(sigma0t), complex(s0t), complex(r)
    if abs(cmath.sin(PI * sg)) < GUARD_EPS or abs(cmath.sin(PI * thi)) < GUARD_EPS:
        raise DegenerateParameterError("sin(pi sigma) or sin(pi thetaInf) vanishes")
    if s == 0 or r == 0:
        raise DegenerateParameterError("s0t and r must be non-zero")
    ok = theta.non_integer() and 0 < sg.real < 1 and theta.generic_for(sg)
    if not ok:
        if not override:
            raise DegenerateParameterError("genericity conditions violated (pass override=True)")
        log.info("building monodromy outside the genericity conditions")
    e = cmath.exp
    ip = 1j * PI
    MInf = np.diag([e(ip * thi), e(-ip * thi)])
    M1 = np.array([
        [cmath.cos(PI * sg) - e(-ip * thi) * cmath.cos(PI * th1),
         -2 * r * e(-ip * thi) * S(thi + th1 + sg) * S(thi + th1 - sg)],
        [2 / r * e(ip * thi) * S(thi - th1 + sg) * S(thi - th1 - sg),
         -cmath.cos(PI * sg) + e(ip * thi) * cmath.cos(PI * th1)],
    ]) / (1j * cmath.sin(PI * thi))
    CMt = np.array([
        [e(ip * sg) * cmath.cos(PI * tht) - cmath.cos(PI * th0),
         -2 * s * e(ip * sg) * S(th0 + tht - sg) * S(th0 - tht + sg)],
        [2 / s * e(-ip * sg) * S(th0 + tht + sg) * S(th0 - tht - sg),
         -e(-ip * sg) * cmath.cos(PI * tht) + cmath.cos(PI * th0)],
    ]) / (1j * cmath.sin(PI * sg))
    CM0 = np.array([
        [e(ip * sg) * cmath.cos(PI * th0) - cmath.cos(PI * tht),
         2 * s * S(th0 + tht - sg) * S(th0 - tht + sg)],
        [-2 / s * S(th0 - tht - sg) * S(th0 + tht + sg),
         -e(-ip * sg) * cmath.cos(PI * th0) + cmath.cos(PI * tht)],
    ]) / (1j * cmath.sin(PI * sg))
    C = np.array([[S(thi - th1 - sg), r * S(thi + th1 + sg)],
                  [S(thi - th1 + sg) / r, S(thi + th1 - sg)]])
    detC = np.linalg.det(C)
    if abs(detC) < 1e-14 * max(1.0, float(np.max(np.abs(C))) ** 2):
        raise NonInvertibleC(f"det C = {detC}")
    Ci = np.linalg.inv(C)
    return MonodromyQuadruple(Ci @ CM0 @ C, Ci @ CMt @ C, M1, MInf, C)


def invariants_from_matrices(M: MonodromyQuadruple) -> MonodromyInvariants:
    tr = lambda A: complex(np.trace(A))
    return MonodromyInvariants(tr(M.M0), tr(M.Mt), tr(M.M1), tr(M.MInf),
                               tr(M.M0 @ M.Mt), tr(M.Mt @ M.M1), tr(M.M0 @ M.M1))


def connection_residual(theta: ThetaSet, data: MonodromyData, sign: int = 1) -> complex:
    """Left minus right side of the connection relation for sign = +1 or -1.

    The coefficient entering is s0t / r, matching :func:`build_monodromy`.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    th0, tht, th1, thi = theta.as_tuple()
    sg = complex(data.sigma0t)
    s = complex(data.s0t) / complex(data.r)
    c = lambda x: cmath.cos(PI * complex(x))
    lhs = (4 * s ** sign * S(th0 + tht - sign * sg) * S(th0 - tht + sign * sg)
           * S(thi + th1 - sign * sg) * S(thi - th1 + sign * sg))
    rhs = (cmath.exp(sign * 1j * PI * sg)
           * (sign * 1j * cmath.sin(PI * sg) * c(data.sigmaT1) - c(tht) * c(thi) - c(th0) * c(th1))
           + sign * 1j * cmath.sin(PI * sg) * c(data.sigma01) + c(tht) * c(th1) + c(thi) * c(th0))
    return lhs - rhs


def manifold_value(p0, pt, p1, pInf, p0t, pt1, p01) -> complex:
    """The cubic defining the monodromy manifold."""
    return (p0t * pt1 * p01 + p0t ** 2 + pt1 ** 2 + p01 ** 2
            - (p0 * pt + p1 * pInf) * p0t - (pt * p1 + p0 * pInf) * pt1
            - (p0 * p1 + pt * pInf) * p01
            + p0 ** 2 + pt ** 2 + p1 ** 2 + pInf ** 2 + p0 * pt * p1 * pInf - 4)


def manifold_gradient(p0, pt, p1, pInf, p0t, pt1, p01):
    """Partial derivatives of the manifold cubic in p0t, pt1, p01."""
    return (pt1 * p01 + 2 * p0t - p0 * pt - p1 * pInf,
            p0t * p01 + 2 * pt1 - pt * p1 - p0 * pInf,
            p0t * pt1 + 2 * p01 - p0 * p1 - pt * pInf)


# --------------------------------------------------------------------------
# spectrum singularity ensemble

def _case(case):
    c = str(case).upper()
    if c not in ("A", "B", "C"):
        raise ValueError(f"case must be A, B or C, got {case!r}")
    return c


def _sse_guard(params):
    mu = complex(params.mu)
    w, wb = params.omega, params.omega_bar
    for val, what in ((mu - wb, "mu-omega_bar"), (mu - w, "mu-omega"),
                      (2 * mu + 2 * params.omega1, "2mu+2omega1"), (2 * mu, "2mu"),
                      (2 * params.omega1, "2omega1"), (mu + w, "mu+omega"),
                      (mu + wb, "mu+omega_bar")):
        if is_near_integer(val):
            raise DegenerateParameterError(f"{what} = {val} is (near) an integer")


def sse_case_data(case, params: EnsembleParameters):
    """Exponents and monodromy data of the spectrum singularity ensemble.

    For cases B and C the coefficient s_t1 is obtained by solving the linear
    relation that defines it.  s01 is identical in all cases.
    """
    case = _case(case)
    _sse_guard(params)
    N, mu, w1 = params.N, complex(params.mu), complex(params.omega1)
    w, wb, xs = params.omega, params.omega_bar, complex(params.xi_star)
    sn = lambda x: cmath.sin(PI * x)
    e = cmath.exp
    theta = {
        "A": ThetaSet(-mu - w, N + 2 * w1, N + 2 * mu, -mu - wb),
        "B": ThetaSet(mu - wb, N, N + 2 * mu + 2 * w1, mu - w),
        "C": ThetaSet(-2 * w1, N + mu + w, N + mu + wb, 2 * mu),
    }[case]
    if xs == 0:
        raise DegenerateParameterError("xi* = 0 makes s0t infinite")
    s0t = 1 + 2j * sn(mu - wb) / (xs * e(-1j * PI * (mu - wb)))
    g = 2 * mu + 2 * w1
    if case == "A":
        st1 = 1 + xs * e(-1j * PI * (mu - wb)) / 2j * sn(g) / (sn(2 * mu) * sn(mu + w))
    else:
        st1 = ((sn(2 * mu) * sn(mu + w) / sn(g) + xs * e(-1j * PI * (mu - wb)) / 2j)
               * sn(g) / (sn(2 * w1) * sn(mu + wb)))
    s01 = -(xs - 1 + e(2j * PI * (mu + w))) / (xs - 1 + e(4j * PI * mu))
    data = MonodromyData(N - mu + wb, g, N - mu + w, s0t, st1, s01, 1.0)
    return theta, data


def sse_case_matrices(case, params: EnsembleParameters, r: complex = 1.0,
                      as_printed: bool = False) -> MonodromyQuadruple:
    """Monodromy matrices M0, Mt, M1 of the three cases; MInf = (M1 Mt M0)^{-1}.

    In case B the (1,2) entry of M1 carries a minus sign; ``as_printed``
    reproduces the opposite sign, for which det M1 != 1 and the cyclic
    relation fails.
    """
    case = _case(case)
    _sse_guard(params)
    _, data = sse_case_data(case, params) if params.xi_star != 0 else (None, None)
    N, mu, w1 = params.N, complex(params.mu), complex(params.omega1)
    w, wb = params.omega, params.omega_bar
    r = complex(r)
    sn = lambda x: cmath.sin(PI * x)
    cs = lambda x: cmath.cos(PI * x)
    e = lambda x: cmath.exp(1j * PI * x)
    sgnN = (-1) ** N
    if case in ("A", "C") and data is None:
        raise DegenerateParameterError("xi* = 0 makes s0t infinite")
    if case == "A":
        s0t = data.s0t
        m0 = 2j / sn(mu - wb) * (sn(2 * w1) * sn(mu + wb) / s0t - sn(2 * mu) * sn(mu + w) / r)
        mt = (2j * sgnN * sn(2 * w1) / sn(mu - wb)
              * (-sn(mu + wb) / s0t * e(mu - wb) + sn(2 * mu) / r))
        m1 = -2j * sgnN * sn(2 * mu) / r * e(-(mu + wb))
        M0 = np.array([[e(-(mu + w)), 0], [m0, e(mu + w)]])
        Mt = np.array([[e(N + 2 * w1), 0], [mt, e(-(N + 2 * w1))]])
        M1 = np.array([[e(N + 2 * mu), 0], [m1, e(-(N + 2 * mu))]])
    elif case == "B":
        f = 1j / sn(mu - w)
        g = 2 * mu + 2 * w1
        M0 = f * np.array([
            [e(-(mu - w)) * cs(mu - wb) - cs(g), 2 * r * sn(mu + wb) * sn(2 * mu)],
            [-2 / r * sn(mu + w) * sn(2 * w1), -e(mu - w) * cs(mu - wb) + cs(g)]])
        Mt = sgnN * np.eye(2, dtype=complex)
        sgn12 = 1 if as_printed else -1
        M1 = f * sgnN * np.array([
            [e(-(mu - w)) * cs(g) - cs(mu - wb), sgn12 * 2 * r * e(-(mu - w)) * sn(mu + wb) * sn(2 * mu)],
            [2 / r * e(mu - w) * sn(mu + w) * sn(2 * w1), cs(mu - wb) - e(mu - w) * cs(g)]])
    else:
        s0t = data.s0t
        m0 = 2j / sn(mu - wb) * (-sn(2 * mu) * sn(mu + w) * s0t + sn(2 * w1) * sn(mu + wb) * r)
        mt = (2j * sgnN * sn(mu + w) / sn(mu - wb)
              * (sn(2 * mu) * e(-(mu - wb)) * s0t - sn(mu + wb) * r))
        m1 = 2j * sn(mu + wb) * e(-(N + 2 * mu)) * r
        M0 = np.array([[e(2 * w1), m0], [0, e(-2 * w1)]])
        Mt = np.array([[e(-(N + mu + w)), mt], [0, e(N + mu + w)]])
        M1 = np.array([[e(-(N + mu + wb)), m1], [0, e(N + mu + wb)]])
    M0, Mt, M1 = (np.asarray(M, dtype=complex) for M in (M0, Mt, M1))
    MInf = np.linalg.inv(M1 @ Mt @ M0)
    return MonodromyQuadruple(M0, Mt, M1, MInf, None)


def case_structure(case, Q: MonodromyQuadruple) -> dict:
    """Entry-wise sizes behind the structural claims of each case."""
    case = _case(case)
    mats = {"M0": Q.M0, "Mt": Q.Mt, "M1": Q.M1}
    if case == "A":
        return {f"{k}_upper_right": float(abs(M[0, 1])) for k, M in mats.items()}
    if case == "C":
        return {f"{k}_lower_left": float(abs(M[1, 0])) for k, M in mats.items()}
    sgn = Q.Mt[0, 0].real
    sgn = 1.0 if sgn >= 0 else -1.0
    return {"Mt_minus_scalar": float(np.max(np.abs(Q.Mt - sgn * np.eye(2)))),
            "Mt_scalar": sgn}


def sigma01_tilde(data: MonodromyData, theta: ThetaSet) -> complex:
    """sigma~01 from its cosine (principal complex arccos)."""
    th0, tht, th1, thi = theta.as_tuple()
    c = lambda x: cmath.cos(PI * complex(x))
    val = (-c(data.sigma0t) - 2 * c(data.sigma01) * c(data.sigmaT1)
           + 2 * (c(th0) * c(tht) + c(thi) * c(th1)))
    return cmath.acos(val) / PI
