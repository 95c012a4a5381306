"""Gap probabilities of the Jacobi ensemble as Fredholm determinants of the
Christoffel-Darboux kernel, and the circular-ensemble gaps built on them.

Two determinant routes are always computed: a Nystrom discretisation of the
kernel and the exact N x N Gram determinant of the orthonormal functions,
each with its own quadrature.  They must agree.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import betaln, roots_jacobi, roots_legendre

from .errors import OrderTooLow, RangeError
from .toeplitz import arc_symbol_coefficient, toeplitz_determinant

__all__ = [
    "JacobiWeightParams", "KernelDiscretization", "FredholmResult",
    "recurrence_coefficients", "monic_jacobi", "monic_jacobi_with_derivative",
    "norms", "cd_kernel", "discretize", "fredholm_det", "gap_log_derivative", "circle_gap",
]


@dataclass(frozen=True)
class JacobiWeightParams:
    """Weight x^a (1-x)^b on (0, 1) and the number of eigenvalues N."""

    a: float
    b: float
    N: int

    def __post_init__(self):
        if not (self.a > -1 and self.b > -1):
            raise ValueError("a and b must exceed -1")
        if int(self.N) != self.N or self.N < 1:
            raise ValueError("N must be a positive integer")

    def weight(self, x):
        x = np.asarray(x, dtype=float)
        return x ** self.a * (1 - x) ** self.b


@dataclass(frozen=True)
class KernelDiscretization:
    interval: tuple
    nodes: np.ndarray
    weights: np.ndarray
    order: int


@dataclass(frozen=True)
class FredholmResult:
    """Nystrom value, Gram value and their difference."""

    value: complex
    gram: complex
    difference: float

    def __complex__(self):
        return complex(self.value)


def recurrence_coefficients(a: float, b: float, n: int):
    """(alpha_j, beta_j), j < n, with x p_j = p_{j+1} + alpha_j p_j + beta_j p_{j-1}."""
    al = np.empty(n)
    be = np.zeros(n)
    s = a + b
    for j in range(n):
        if j == 0:
            at = (b - a) / (s + 2)
        else:
            at = (b * b - a * a) / ((2 * j + s) * (2 * j + s + 2))
        al[j] = (1 - at) / 2
        if j == 1:
            bt = 4 * (1 + a) * (1 + b) / ((2 + s) ** 2 * (3 + s))
        elif j > 1:
            bt = (4 * j * (j + a) * (j + b) * (j + s)
                  / ((2 * j + s) ** 2 * (2 * j + s + 1) * (2 * j + s - 1)))
        else:
            bt = 0.0
        be[j] = bt / 4
    return al, be


def monic_jacobi_with_derivative(j: int, params: JacobiWeightParams, x):
    """Values and x-derivatives of the monic p_0..p_j at x (arrays of shape (j+1, ...))."""
    if j < 0:
        raise RangeError("degree must be non-negative")
    x = np.asarray(x, dtype=float)
    al, be = recurrence_coefficients(params.a, params.b, max(j, 1))
    P = [np.ones_like(x)]
    D = [np.zeros_like(x)]
    if j >= 1:
        P.append(x - al[0])
        D.append(np.ones_like(x))
    for k in range(1, j):
        P.append((x - al[k]) * P[k] - be[k] * P[k - 1])
        D.append(P[k] + (x - al[k]) * D[k] - be[k] * D[k - 1])
    return np.array(P), np.array(D)


def monic_jacobi(j: int, params: JacobiWeightParams, x):
    """Monic orthogonal polynomial of degree j for the weight x^a (1-x)^b."""
    if j > params.N:
        raise RangeError(f"degree {j} exceeds N={params.N}")
    return monic_jacobi_with_derivative(j, params, x)[0][j]


def norms(params: JacobiWeightParams, n: int) -> np.ndarray:
    """(p_j, p_j) for j < n."""
    _, be = recurrence_coefficients(params.a, params.b, max(n, 1))
    h = np.empty(n)
    h[0] = math.exp(betaln(params.a + 1, params.b + 1))
    for k in range(1, n):
        h[k] = h[k - 1] * be[k]
    return h


def cd_kernel(params: JacobiWeightParams, x, y):
    """Christoffel-Darboux kernel with the sqrt(w(x) w(y)) factor.

    On the diagonal the confluent form w(x)(p_N' p_{N-1} - p_{N-1}' p_N)/h_{N-1}
    is used.
    """
    N = params.N
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x, y = np.broadcast_arrays(x, y)
    hN1 = norms(params, N)[N - 1]
    Px, Dx = monic_jacobi_with_derivative(N, params, x)
    Py, _ = monic_jacobi_with_derivative(N, params, y)
    sw = np.sqrt(params.weight(x) * params.weight(y))
    num = Px[N] * Py[N - 1] - Px[N - 1] * Py[N]
    diff = x - y
    close = np.abs(diff) < 1e-12
    with np.errstate(divide="ignore", invalid="ignore"):
        off = num / np.where(close, 1.0, diff)
    diag = Dx[N] * Px[N - 1] - Dx[N - 1] * Px[N]
    out = sw * np.where(close, diag, off) / hN1
    return out if out.shape else float(out)


@lru_cache(maxsize=64)
def _gauss_jacobi(m: int, b: float):
    y, w = roots_jacobi(m, b, 0.0)
    return y, w


@lru_cache(maxsize=64)
def _gauss_legendre(m: int):
    return roots_legendre(m)


def discretize(params: JacobiWeightParams, t: float, m: int):
    """Nodes and weights for integrals of f(x)(1-x)^b over (t, 1).

    Returns (nodes, weights) where ``weights`` already include the
    (1-x)^b factor, i.e. sum f(x_q) weights_q ~ int_t^1 f(x) (1-x)^b dx with
    f smooth.  Near the hard edge at 0 a geometric panel mesh is used.
    """
    b = params.b
    split = 0.5
    if t >= split:
        y, w = _gauss_jacobi(m, b)
        L = (1 - t) / 2
        return t + L * (1 + y), w * L ** (b + 1)
    # graded Gauss-Legendre panels on (t, split), Gauss-Jacobi on (split, 1)
    edges = [t]
    while edges[-1] < split:
        edges.append(min(split, max(2 * edges[-1], edges[-1] + 0.05)))
    xs, ws = [], []
    yl, wl = _gauss_legendre(m)
    for lo, hi in zip(edges[:-1], edges[1:]):
        L = (hi - lo) / 2
        xq = lo + L * (1 + yl)
        xs.append(xq)
        ws.append(wl * L * (1 - xq) ** b)
    y, w = _gauss_jacobi(m, b)
    L = (1 - split) / 2
    xs.append(split + L * (1 + y))
    ws.append(w * L ** (b + 1))
    return np.concatenate(xs), np.concatenate(ws)


def _phi_reg(params, x):
    """Orthonormal functions divided by (1-x)^{b/2}, shape (N, len(x))."""
    N = params.N
    P, _ = monic_jacobi_with_derivative(N - 1, params, x)
    h = norms(params, N)
    return P * (x ** (params.a / 2))[None, :] / np.sqrt(h)[:, None]


def fredholm_det(params: JacobiWeightParams, t: float, xi: complex, m: int | None = None,
                 tol: float = 1e-9) -> FredholmResult:
    """det(1 - xi K) on (t, 1) for the Jacobi Christoffel-Darboux kernel.

    Parameters
    ----------
    m : int
        Nodes per quadrature panel; at least 2N + 8 (default max(2N+16, 40)).
    tol : float
        Maximum admissible |Nystrom - Gram|.

    Raises
    ------
    OrderTooLow
        m is below 2N+8 or the two routes disagree by more than ``tol``.
    """
    N = params.N
    if m is None:
        m = max(2 * N + 16, 40)
    if m < 2 * N + 8:
        raise OrderTooLow(f"m={m} below the minimum 2N+8={2 * N + 8}")
    if not 0 < t < 1:
        raise RangeError("t must lie in (0, 1)")
    xi = complex(xi)
    # Nystrom on the (1-x)^b-weighted rule
    x, w = discretize(params, t, m)
    sw = np.sqrt(w)
    hN1 = norms(params, N)[N - 1]
    Px, Dx = monic_jacobi_with_derivative(N, params, x)
    xa = x ** (params.a / 2)
    X, Y = np.meshgrid(x, x, indexing="ij")
    num = np.outer(Px[N], Px[N - 1]) - np.outer(Px[N - 1], Px[N])
    diff = X - Y
    np.fill_diagonal(diff, 1.0)
    K = num / diff
    np.fill_diagonal(K, Dx[N] * Px[N - 1] - Dx[N - 1] * Px[N])
    K = K * np.outer(xa, xa) / hN1
    A = np.eye(len(x)) - xi * (sw[:, None] * K * sw[None, :])
    sign, logdet = np.linalg.slogdet(A)
    nys = complex(sign * np.exp(logdet))
    # Gram route with a finer rule
    x2, w2 = discretize(params, t, 2 * m + 20)
    Phi = _phi_reg(params, x2)
    G = (Phi * w2[None, :]) @ Phi.T
    gram = complex(np.linalg.det(np.eye(N) - xi * G))
    d = abs(nys - gram)
    if d > tol:
        raise OrderTooLow(f"Nystrom and Gram determinants differ by {d:.3g}")
    return FredholmResult(nys, gram, float(d))


def gap_log_derivative(params: JacobiWeightParams, t: float, xi: complex,
                       m: int | None = None) -> complex:
    """d/dt log det(1 - xi K) on (t, 1), from the Gram form.

    With G(t) the Gram matrix of the orthonormal functions phi on (t, 1),
    dG/dt = -phi(t) phi(t)^T, hence d/dt log E = xi phi^T (1 - xi G)^{-1} phi.
    """
    N = params.N
    if m is None:
        m = max(2 * N + 16, 40)
    xi = complex(xi)
    x2, w2 = discretize(params, t, 2 * m + 20)
    Phi = _phi_reg(params, x2)
    G = (Phi * w2[None, :]) @ Phi.T
    phi = _phi_reg(params, np.array([float(t)]))[:, 0] * (1 - t) ** (params.b / 2)
    return complex(xi * phi @ np.linalg.solve(np.eye(N) - xi * G, phi))


def circle_gap(group: str, N: int, x: float, xi: complex, m: int | None = None) -> complex:
    """Gap generating functions of U(N) and O^{+/-}(2N+1).

    U(N): the interval is (0, 2x) on the circle and the Toeplitz determinant
    of the symbol 1 - xi 1_{(0,2x)} is evaluated.  O^{+/-}(2N+1): the interval
    is (0, x) and the Jacobi determinant at t = cos^2(x/2) with
    (a, b) = (-1/2, 1/2) for O+ and (1/2, -1/2) for O- is used.
    """
    g = group.replace(" ", "").upper()
    if x == 0:
        return 1.0 + 0j
    if g in ("U", "U(N)", "UN"):
        return toeplitz_determinant(lambda n: arc_symbol_coefficient(n, xi, 2 * x), N)
    if g in ("O+", "O+(2N+1)", "OPLUS"):
        a, b = -0.5, 0.5
    elif g in ("O-", "O-(2N+1)", "OMINUS"):
        a, b = 0.5, -0.5
    else:
        raise ValueError(f"unknown group {group!r}")
    t = math.cos(x / 2) ** 2
    return fredholm_det(JacobiWeightParams(a, b, N), t, xi, m).value
