"""Truncation-error formulas, a-priori bounds, and measured operator errors.

Notation: ``z = 1 - lambda/tau``; the normalized error ``E`` relates to the
scalar error by ``lambda^(-alpha) - R(lambda) = tau^(-alpha) E``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linop import Eigendecomposition
from .rational import RationalForm, eval_scalar
from .specfun import DEFAULT_SERIES, SeriesControl, hyp2f1, log_gamma
from .tau import Regime, lambda_bar


class BoundKind(str, enum.Enum):
    UNBOUNDED = "unbounded"
    BOUNDED = "bounded"
    COND_NUMBER = "cond_number"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ErrorReport:
    k: int
    alpha: float
    tau: float
    regime: Regime
    measured_error: float
    bound: float
    bound_kind: BoundKind

    def __post_init__(self):
        if self.measured_error < 0 or self.bound < 0:
            raise DomainError("errors and bounds are non-negative")


BOUND_FOR_REGIME = {
    Regime.UNBOUNDED_LAMBERT: BoundKind.UNBOUNDED,
    Regime.BOUNDED_QUADRATIC: BoundKind.BOUNDED,
    Regime.GEOMETRIC_MEAN: BoundKind.COND_NUMBER,
}


def truncation_error_exact(k: int, alpha: float, z: float,
                           ctrl: SeriesControl = DEFAULT_SERIES) -> float:
    """Closed-form error of the (k-1, k) Pade approximant of ``(1-z)^(-alpha)``.

    ``Gamma(k+1-alpha) Gamma(k+1) / (Gamma(1-alpha) Gamma(2k+1))
    * 2F1(k+1, k+alpha; 2k+1; z) / 2F1(-k, k; alpha; 1/z) * (-z)^k``.
    The denominator is a degree-k polynomial in ``1/z`` and is summed exactly.
    """
    if not z < 1:
        raise DomainError(f"z must be < 1, got {z!r}")
    if z == 0:
        return 0.0
    log_pref = (log_gamma(k + 1 - alpha) + log_gamma(k + 1)
                - log_gamma(1 - alpha) - log_gamma(2 * k + 1))
    num = hyp2f1(k + 1, k + alpha, 2 * k + 1, z, ctrl)
    den = hyp2f1(-k, k, alpha, 1.0 / z, ctrl)
    return math.exp(log_pref) * num / den * (-z) ** k


def truncation_error_asymptotic(k: int, alpha: float, lam: float, tau: float) -> float:
    """Leading-order error ``2 sin(alpha pi) f(lam, tau)``."""
    return 2.0 * math.sin(alpha * math.pi) * f_factor(k, alpha, lam, tau)


def f_factor(k: int, alpha: float, lam, tau: float):
    """``(lam/tau)^(-alpha) ((sqrt(lam) - sqrt(tau)) / (sqrt(lam) + sqrt(tau)))^(2k)``."""
    if np.any(np.asarray(lam) <= 0) or not tau > 0:
        raise DomainError("lam and tau must be positive")
    r = np.asarray(lam, dtype=float) / tau
    s = np.sqrt(r)
    out = r ** (-alpha) * ((s - 1.0) / (s + 1.0)) ** (2 * k)
    return float(out) if out.ndim == 0 else out


def bound_unbounded(k: int, alpha: float, c: float) -> float:
    """A-priori bound for the Lambert-W rule on ``[c, inf)``:
    ``2 sin(alpha pi) c^(-alpha) (2k sqrt(e)/alpha)^(-4 alpha) (2 ln(2k/alpha) + 1)^(2 alpha)``.
    """
    if k < 1 or not 0 < alpha < 1 or not c > 0:
        raise DomainError("need k >= 1, 0 < alpha < 1, c > 0")
    return (2.0 * math.sin(alpha * math.pi) * c ** (-alpha)
            * (2.0 * k * math.sqrt(math.e) / alpha) ** (-4.0 * alpha)
            * (2.0 * math.log(2.0 * k / alpha) + 1.0) ** (2.0 * alpha))


def bound_bounded(k: int, alpha: float, c: float, lambda_max: float) -> float:
    """A-priori bound for the quadratic rule on ``[c, lambda_max]``:
    ``2 sin(alpha pi) (c lambda_max)^(-alpha/2) exp(-4k (c/lambda_max)^(1/4))``.
    """
    if k < 1 or not 0 < alpha < 1 or not 0 < c <= lambda_max:
        raise DomainError("need k >= 1, 0 < alpha < 1, 0 < c <= lambda_max")
    return (2.0 * math.sin(alpha * math.pi) * (c * lambda_max) ** (-alpha / 2.0)
            * math.exp(-4.0 * k * (c / lambda_max) ** 0.25))


def bound_cond_number(k: int, kappa: float) -> float:
    """k-dependent factor ``((kappa^(1/4) - 1) / (kappa^(1/4) + 1))^(2k)``; constant taken as 1."""
    if not kappa >= 1:
        raise DomainError("condition number must be >= 1")
    q = kappa ** 0.25
    return ((q - 1.0) / (q + 1.0)) ** (2 * k)


def measured_operator_error(eig, form: RationalForm) -> float:
    """Spectral-norm error ``max_i |lambda_i^(-alpha) - R(lambda_i)|``.

    ``eig`` is an Eigendecomposition or a plain array of eigenvalues.
    """
    vals = eig.eigenvalues if isinstance(eig, Eigendecomposition) else eig
    vals = np.asarray(vals, dtype=float)
    if not np.all(vals > 0):
        raise DomainError("eigenvalues must be positive")
    return float(np.max(np.abs(vals ** (-form.alpha) - eval_scalar(form, vals))))

