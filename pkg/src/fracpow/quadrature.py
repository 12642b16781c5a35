"""Gauss-Jacobi rules by the Golub-Welsch method.

The rule for the weight ``(1-t)^(-alpha) (1+t)^(alpha-1)`` drives the
rational approximation. Nodes are eigenvalues of the Jacobi matrix built from
the monic three-term recurrence; weights are ``mu0`` times the squared first
components of the normalized eigenvectors.

All arithmetic in the recurrence and the eigen-solver is written against
plain scalar operations, so passing ``dps`` runs the whole construction in
mpmath multiprecision instead of binary64.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import ConvergenceError, DomainError


@dataclass(frozen=True)
class JacobiParams:
    """Exponents of the Jacobi weight ``(1-t)^a (1+t)^b``."""

    a: float
    b: float

    def __post_init__(self):
        if not (self.a > -1 and self.b > -1):
            raise DomainError(f"Jacobi exponents must exceed -1, got a={self.a}, b={self.b}")

    @classmethod
    def for_alpha(cls, alpha: float) -> "JacobiParams":
        _check_alpha(alpha)
        return cls(-alpha, alpha - 1.0)


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """Monic recurrence ``p_{n+1} = (t - diag[n]) p_n - offdiag_sq[n] p_{n-1}``.

    ``offdiag_sq[0]`` holds the total mass ``mu0``.
    """

    diag: np.ndarray
    offdiag_sq: np.ndarray


@dataclass(frozen=True)
class QuadratureRule:
    nodes: np.ndarray
    weights: np.ndarray

    def __len__(self):
        return len(self.nodes)


def _check_alpha(alpha):
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")


def _frozen(values, dtype=float):
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


def _total_mass(a, b, dps=None):
    if dps is None:
        return math.exp((a + b + 1.0) * math.log(2.0) + math.lgamma(a + 1.0)
                        + math.lgamma(b + 1.0) - math.lgamma(a + b + 2.0))
    return mpmath.power(2, a + b + 1) * mpmath.beta(a + 1, b + 1)


def jacobi_moment(m: int, params: JacobiParams) -> float:
    """Moment ``int_{-1}^{1} t^m (1-t)^a (1+t)^b dt``.

    Uses the two-term recurrence obtained by integrating
    ``d/dt [t^m (1-t)^(a+1) (1+t)^(b+1)]`` over the interval:
    ``(m + a + b + 2) M_{m+1} = m M_{m-1} + (b - a) M_m``.
    """
    if m < 0 or int(m) != m:
        raise DomainError("moment order must be a non-negative integer")
    a, b = params.a, params.b
    prev, cur = 0.0, _total_mass(a, b)
    for n in range(int(m)):
        prev, cur = cur, (n * prev + (b - a) * cur) / (n + a + b + 2.0)
    return cur


def _recurrence_lists(k, a, b, mu0):
    # generic in the scalar type of a, b, mu0 (float or mpf)
    s = a + b
    diag = [(b - a) / (s + 2)]
    for n in range(1, k):
        diag.append((b * b - a * a) / ((2 * n + s) * (2 * n + s + 2)))
    beta = [mu0]
    if k > 1:
        # n = 1 term with the (n + a + b) factor cancelled; finite at a + b = -1
        beta.append(4 * (1 + a) * (1 + b) / ((s + 2) ** 2 * (s + 3)))
    for n in range(2, k):
        t = 2 * n + s
        beta.append(4 * n * (n + a) * (n + b) * (n + s) / (t * t * (t + 1) * (t - 1)))
    return diag, beta


def jacobi_recurrence(k: int, params: JacobiParams) -> RecurrenceCoefficients:
    """First ``k`` monic Jacobi recurrence coefficients for ``params``."""
    if k < 1:
        raise DomainError("k must be >= 1")
    diag, beta = _recurrence_lists(k, params.a, params.b, _total_mass(params.a, params.b))
    return RecurrenceCoefficients(_frozen(diag), _frozen(beta))


def _scalar_ops(sample):
    if isinstance(sample, mpmath.mpf):
        return mpmath.hypot, mpmath.eps
    return math.hypot, 2.0 ** -52


def symm_tridiag_eigen(diag, offdiag, max_iter: int = 60):
    """Eigenvalues and first eigenvector components of a symmetric tridiagonal.

    Implicit-shift QL with Wilkinson-type shifts; only the first row of the
    accumulated rotation matrix is carried. Entries may be floats or mpmath
    numbers (the caller owns the working precision).

    Returns
    -------
    eigenvalues : list, ascending
    first_components : list, first entry of each normalized eigenvector,
        in the same order
    """
    n = len(diag)
    if len(offdiag) != max(n - 1, 0):
        raise DomainError("offdiag must have length len(diag) - 1")
    if n == 0:
        return [], []
    d = list(diag)
    e = list(offdiag) + [d[0] * 0]
    z = [d[0] * 0 + 1] + [d[0] * 0] * (n - 1)
    hypot, eps = _scalar_ops(d[0])

    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd:
                    break
                m += 1
            if m == l:
                break
            if it == max_iter:
                raise ConvergenceError(f"QL iteration stalled at index {l}")
            it += 1
            g = (d[l + 1] - d[l]) / (2 * e[l])
            r = hypot(g, 1)
            g = d[m] - d[l] + e[l] / (g + (r if g >= 0 else -r))
            s = c = d[0] * 0 + 1
            p = d[0] * 0
            i = m - 1
            deflated = False
            while i >= l:
                f = s * e[i]
                bb = c * e[i]
                r = hypot(f, g)
                e[i + 1] = r
                if r == 0:
                    d[i + 1] -= p
                    e[m] = 0 * r
                    deflated = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2 * c * bb
                p = s * r
                d[i + 1] = g + p
                g = c * r - bb
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
                i -= 1
            if deflated:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0 * g

    order = sorted(range(n), key=lambda j: d[j])
    return [d[j] for j in order], [z[j] for j in order]


def gauss_jacobi(k: int, alpha: float, dps: int | None = None) -> QuadratureRule:
    """k-point Gauss rule for the weight ``(1-t)^(-alpha) (1+t)^(alpha-1)``.

    With ``dps`` set, the recurrence and eigenproblem are solved in mpmath
    with that many decimal digits and the rule holds ``mpf`` entries
    (object arrays).
    """
    if int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    k = int(k)
    _check_alpha(alpha)
    if dps is None:
        p = JacobiParams.for_alpha(alpha)
        rec = jacobi_recurrence(k, p)
        diag, beta = list(rec.diag), list(rec.offdiag_sq)
        nodes, first = symm_tridiag_eigen(diag, [math.sqrt(x) for x in beta[1:]])
        mu0 = beta[0]
        return QuadratureRule(_frozen(nodes), _frozen([mu0 * v * v for v in first]))

    with mpmath.workdps(dps):
        al = mpmath.mpf(alpha)
        a, b = -al, al - 1
        diag, beta = _recurrence_lists(k, a, b, _total_mass(a, b, dps))
        nodes, first = symm_tridiag_eigen(diag, [mpmath.sqrt(x) for x in beta[1:]])
        weights = [beta[0] * v * v for v in first]
    return QuadratureRule(_frozen(nodes, object), _frozen(weights, object))
