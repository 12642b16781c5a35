"""Choice of the centre ``tau`` of the rational approximation.

Three closed-form rules plus a brute-force min-max search used to check them:

* geometric mean ``sqrt(c * lambda_max)``, independent of k;
* the Lambert-W rule for a spectrum bounded only from below;
* the quadratic rule for a spectrum inside ``[c, lambda_max]``, used once the
  error-maximizing point of the Lambert-W rule leaves the spectrum.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .linop import SpectrumInfo
from .quadrature import gauss_jacobi
from .rational import eval_scalar, form_from_rule
from .specfun import lambert_w0


class Regime(str, enum.Enum):
    GEOMETRIC_MEAN = "geometric_mean"
    UNBOUNDED_LAMBERT = "unbounded_lambert"
    BOUNDED_QUADRATIC = "bounded_quadratic"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class TauChoice:
    tau: float
    regime: Regime
    k: int | None = None
    alpha: float | None = None

    def __post_init__(self):
        if not self.tau > 0:
            raise DomainError(f"tau must be positive, got {self.tau!r}")


def _check(k, alpha):
    if int(k) != k or k < 1:
        raise DomainError(f"k must be a positive integer, got {k!r}")
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")


def _require_bounded(spec: SpectrumInfo):
    if not spec.bounded:
        raise DomainError("this rule needs a bounded spectrum (lambda_max)")


def tau_geometric(spec: SpectrumInfo) -> TauChoice:
    _require_bounded(spec)
    return TauChoice(math.sqrt(spec.c * spec.lambda_max), Regime.GEOMETRIC_MEAN)


def lambda_bar(k: int, alpha: float, tau: float) -> float:
    """Location of the interior maximum of the leading error term, right of ``tau``."""
    _check(k, alpha)
    return (k + math.sqrt(k * k + 1.0)) ** 2 / alpha ** 2 * tau


def tau_unbounded(k: int, alpha: float, c: float) -> TauChoice:
    """Lambert-W rule ``c (alpha/(2ke))^2 exp(2 W(4k^2 e / alpha^2))``.

    Evaluated as ``c (4k^2/alpha^2) / W^2`` using ``exp(W(z)) = z / W(z)``.
    """
    _check(k, alpha)
    if not c > 0:
        raise DomainError("c must be positive")
    q = 4.0 * k * k / (alpha * alpha)
    w = lambert_w0(q * math.e)
    return TauChoice(c * q / (w * w), Regime.UNBOUNDED_LAMBERT, int(k), alpha)


def tau_unbounded_asymptotic(k: int, alpha: float, c: float) -> float:
    """Log form ``c (4k^2/alpha^2) ln(4k^2 e/alpha^2)^(-2)`` of the Lambert-W rule."""
    _check(k, alpha)
    if not c > 0:
        raise DomainError("c must be positive")
    q = 4.0 * k * k / (alpha * alpha)
    return c * q / math.log(q * math.e) ** 2


def tau_bounded(k: int, alpha: float, spec: SpectrumInfo) -> TauChoice:
    """Positive root in ``sqrt(tau)`` of
    ``tau + (alpha/(4k)) sqrt(lmax) ln(lmax/c) sqrt(tau) - sqrt(c lmax) = 0``.
    """
    _check(k, alpha)
    _require_bounded(spec)
    c, lmax = spec.c, spec.lambda_max
    half_b = alpha * math.sqrt(lmax) * math.log(lmax / c) / (8.0 * k)
    g = math.sqrt(c * lmax)
    # -B + sqrt(B^2 + g) rewritten without cancellation
    root = g / (half_b + math.sqrt(half_b * half_b + g))
    return TauChoice(root * root, Regime.BOUNDED_QUADRATIC, int(k), alpha)


def select_tau(k: int, alpha: float, spec: SpectrumInfo) -> TauChoice:
    """Lambert-W rule unless its error maximizer lies beyond ``lambda_max``."""
    tu = tau_unbounded(k, alpha, spec.c)
    if not spec.bounded or lambda_bar(k, alpha, tu.tau) <= spec.lambda_max:
        return tu
    return tau_bounded(k, alpha, spec)


def _lambda_grid(spec, k, alpha, tau, grid):
    hi = spec.lambda_max if spec.bounded else 1e6 * lambda_bar(k, alpha, tau)
    return np.geomspace(spec.c, hi, grid)


def max_scalar_error(form, spec: SpectrumInfo, grid: int = 400) -> float:
    """Max of ``|lam^(-alpha) - R(lam)|`` over a log-spaced grid of the spectrum."""
    lam = _lambda_grid(spec, form.k, form.alpha, form.tau, grid)
    return float(np.max(np.abs(lam ** (-form.alpha) - eval_scalar(form, lam))))


def minmax_oracle(k: int, alpha: float, spec: SpectrumInfo, grid: int = 400,
                  rounds: int = 3, zoom: float = 10.0) -> tuple[float, float]:
    """Brute-force ``min_tau max_lambda |error|`` by grid search with zooming.

    The rational forms are rebuilt exactly for every trial ``tau`` (from one
    shared quadrature rule); no asymptotic error model is involved.
    """
    _check(k, alpha)
    if grid < 100:
        raise DomainError("grid must be >= 100")
    rule = gauss_jacobi(k, alpha)
    c = spec.c
    hi = spec.lambda_max if spec.bounded else 10.0 * c * 4.0 * k * k / alpha ** 2
    lo_log, hi_log = math.log(c / 10.0), math.log(hi)

    def objective(tau):
        return max_scalar_error(form_from_rule(rule, alpha, tau), spec, grid)

    best_tau, best_err = None, math.inf
    for _ in range(rounds + 1):
        taus = np.exp(np.linspace(lo_log, hi_log, grid))
        errs = [objective(t) for t in taus]
        i = int(np.argmin(errs))
        if errs[i] < best_err:
            best_tau, best_err = float(taus[i]), float(errs[i])
        half = (hi_log - lo_log) / (2.0 * zoom)
        centre = math.log(best_tau)
        lo_log, hi_log = centre - half, centre + half
    return best_tau, best_err
