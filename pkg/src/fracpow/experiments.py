"""Error-versus-k sweeps on the two model operators.

``ex1``: diagonal ``diag(1..N)^p`` on ``[1, N^p]``, mimicking an unbounded
operator. ``ex2``: the 1D Dirichlet Laplacian on ``[pi^2, 4(N+1)^2]``.
Errors are spectral norms computed from closed-form eigenvalues.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from . import linop
from .bounds import (BOUND_FOR_REGIME, BoundKind, ErrorReport, bound_bounded,
                     bound_cond_number, bound_unbounded, measured_operator_error)
from .errors import ConvergenceError, DomainError
from .linop import SpectrumInfo
from .rational import apply, build_rational_form
from .tau import (TauChoice, select_tau, tau_bounded, tau_geometric,
                  tau_unbounded)

log = logging.getLogger(__name__)

EXPERIMENTS = ("ex1", "ex2")
STRATEGIES = ("geometric", "lambert", "bounded", "auto")


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    N: int
    alpha: float
    k_min: int
    k_max: int
    tau_strategy: str = "auto"
    p: int | None = None

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise DomainError(f"unknown experiment {self.experiment!r}")
        if self.tau_strategy not in STRATEGIES:
            raise DomainError(f"unknown tau strategy {self.tau_strategy!r}")
        if self.experiment == "ex1" and (self.p is None or self.p < 1):
            raise DomainError("ex1 needs a positive exponent p")
        if self.N < 1:
            raise DomainError("N must be >= 1")
        if not 1 <= self.k_min <= self.k_max:
            raise DomainError("need 1 <= k_min <= k_max")
        if not 0 < self.alpha < 1:
            raise DomainError("alpha must lie in (0, 1)")


def experiment_spectrum(config: ExperimentConfig) -> tuple[np.ndarray, SpectrumInfo]:
    """Eigenvalues and enclosing interval for the configured operator."""
    if config.experiment == "ex1":
        vals = np.arange(1, config.N + 1, dtype=float) ** config.p
        return vals, SpectrumInfo(1.0, float(config.N) ** config.p)
    return linop.laplacian_eigenvalues(config.N), linop.laplacian_spectrum(config.N)


def choose_tau(strategy: str, k: int, alpha: float, spec: SpectrumInfo) -> TauChoice:
    if strategy == "geometric":
        return tau_geometric(spec)
    if strategy == "lambert":
        return tau_unbounded(k, alpha, spec.c)
    if strategy == "bounded":
        return tau_bounded(k, alpha, spec)
    if strategy == "auto":
        return select_tau(k, alpha, spec)
    raise DomainError(f"unknown tau strategy {strategy!r}")


def regime_bound(kind: BoundKind, k: int, alpha: float, spec: SpectrumInfo) -> float:
    if kind is BoundKind.UNBOUNDED:
        return bound_unbounded(k, alpha, spec.c)
    if kind is BoundKind.BOUNDED:
        return bound_bounded(k, alpha, spec.c, spec.lambda_max)
    return bound_cond_number(k, spec.condition_number)


def error_report(k: int, alpha: float, choice: TauChoice, eigenvalues,
                 spec: SpectrumInfo) -> ErrorReport:
    form = build_rational_form(k, alpha, choice.tau)
    kind = BOUND_FOR_REGIME[choice.regime]
    return ErrorReport(k, alpha, choice.tau, choice.regime,
                       measured_operator_error(eigenvalues, form),
                       regime_bound(kind, k, alpha, spec), kind)


def check_solver_path(N: int, alpha: float, k: int, tau: float,
                      measured_error: float, seed: int = 0) -> float:
    """Apply the form to a unit vector through tridiagonal solves and compare
    with the closed-form eigen-expansion.

    The discrepancy is bounded by the spectral-norm error plus solve roundoff;
    a larger value means the solver path and the eigenvalue path disagree.
    Returns the discrepancy.
    """
    op = linop.make_laplacian_1d(N)
    b = np.random.default_rng(seed).standard_normal(N)
    b /= np.linalg.norm(b)
    exact = linop.exact_fractional_apply(linop.laplacian_eigendecomposition(N), alpha, b)
    approx = apply(build_rational_form(k, alpha, tau), op, b)
    diff = float(np.linalg.norm(approx - exact))
    tol = measured_error + 1e-8 * float(np.linalg.norm(exact))
    log.info("solver path check N=%d k=%d: |diff|=%.3e, allowed %.3e", N, k, diff, tol)
    if diff > tol:
        raise ConvergenceError(
            f"tridiagonal solver path deviates by {diff:.3e} (allowed {tol:.3e})")
    return diff


def run_experiment(config: ExperimentConfig, check_solver: bool = True) -> list[ErrorReport]:
    """One ErrorReport per k in ``[k_min, k_max]``, in k order."""
    vals, spec = experiment_spectrum(config)
    rows = []
    for k in range(config.k_min, config.k_max + 1):
        choice = choose_tau(config.tau_strategy, k, config.alpha, spec)
        rows.append(error_report(k, config.alpha, choice, vals, spec))
    if check_solver and config.experiment == "ex2":
        last = rows[-1]
        check_solver_path(config.N, config.alpha, last.k, last.tau, last.measured_error)
    return rows
