"""Pole/residue form of the Gauss-Jacobi rational approximation.

``lambda^(-alpha) ~ sum_j gamma_j / (eta_j + lambda)`` where the poles
``-eta_j`` and residues ``gamma_j`` come from a k-point Gauss-Jacobi rule
mapped through ``t -> tau (1 - t) / (1 + t)``. As a function of
``lambda / tau`` this is the (k-1, k) Pade approximant of ``x^(-alpha)``
about ``x = 1``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath
import numpy as np

from .errors import DomainError
from .linop import LinearOperator
from .quadrature import QuadratureRule, gauss_jacobi


@dataclass(frozen=True, eq=False)
class RationalForm:
    k: int
    alpha: float
    tau: float
    gammas: np.ndarray
    etas: np.ndarray
    dps: int | None = None

    @property
    def poles(self) -> np.ndarray:
        return -self.etas


def form_from_rule(rule: QuadratureRule, alpha: float, tau: float,
                   dps: int | None = None) -> RationalForm:
    """Map quadrature nodes/weights to residues and pole magnitudes."""
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau!r}")
    k = len(rule)
    if dps is None:
        t, w = rule.nodes, rule.weights
        scale = 2.0 * math.sin(alpha * math.pi) * tau ** (1.0 - alpha) / math.pi
        gammas = scale * w / (1.0 + t)
        etas = tau * (1.0 - t) / (1.0 + t)
    else:
        with mpmath.workdps(dps):
            al, ta = mpmath.mpf(alpha), mpmath.mpf(tau)
            scale = 2 * mpmath.sin(al * mpmath.pi) * ta ** (1 - al) / mpmath.pi
            gammas = np.array([scale * w / (1 + t) for t, w in zip(rule.nodes, rule.weights)],
                              dtype=object)
            etas = np.array([ta * (1 - t) / (1 + t) for t in rule.nodes], dtype=object)
    gammas.setflags(write=False)
    etas.setflags(write=False)
    return RationalForm(k, float(alpha), float(tau), gammas, etas, dps)


def build_rational_form(k: int, alpha: float, tau: float,
                        dps: int | None = None) -> RationalForm:
    """Rational approximant of ``lambda^(-alpha)`` with k poles, centred at ``tau``.

    ``dps`` carries the construction out in mpmath with that many digits;
    useful when the approximation error must be resolved below 1e-16.
    """
    if not tau > 0:
        raise DomainError(f"tau must be positive, got {tau!r}")
    return form_from_rule(gauss_jacobi(k, alpha, dps=dps), alpha, tau, dps=dps)


def eval_scalar(form: RationalForm, lam):
    """Evaluate ``sum_j gamma_j / (eta_j + lam)`` for scalar or array ``lam``."""
    if form.dps is not None:
        with mpmath.workdps(form.dps):
            def one(x):
                x = mpmath.mpf(x)
                s = mpmath.mpf(0)
                for g, e in zip(form.gammas, form.etas):
                    s += g / (e + x)
                return s
            if np.ndim(lam) == 0:
                return one(lam)
            return np.array([one(x) for x in np.ravel(lam)], dtype=object).reshape(np.shape(lam))
    lam_arr = np.asarray(lam, dtype=float)
    out = (form.gammas / (form.etas + lam_arr[..., None])).sum(axis=-1)
    return float(out) if out.ndim == 0 else out


def scalar_error(form: RationalForm, lam):
    """Signed error ``lam^(-alpha) - R(lam)``; vanishes at ``lam = tau``."""
    if form.dps is not None:
        with mpmath.workdps(form.dps):
            r = eval_scalar(form, lam)
            if np.ndim(lam) == 0:
                return mpmath.mpf(lam) ** (-mpmath.mpf(form.alpha)) - r
            al = mpmath.mpf(form.alpha)
            return np.array([mpmath.mpf(x) ** (-al) for x in np.ravel(lam)],
                            dtype=object).reshape(np.shape(lam)) - r
    lam_arr = np.asarray(lam, dtype=float)
    out = lam_arr ** (-form.alpha) - eval_scalar(form, lam_arr)
    return float(out) if np.ndim(out) == 0 else out


def apply(form: RationalForm, op: LinearOperator, b) -> np.ndarray:
    """``sum_j gamma_j (eta_j I + L)^(-1) b``, accumulated in pole order."""
    b = np.asarray(b, dtype=float)
    if b.shape != (op.dim,):
        raise DomainError(f"rhs has shape {b.shape}, operator dimension is {op.dim}")
    out = np.zeros(op.dim)
    for g, e in zip(form.gammas, form.etas):
        out += float(g) * op.shifted_solve(float(e), b)
    return out


def apply_power_complement(op: LinearOperator, f, alpha: float, k: int,
                           tau: float) -> np.ndarray:
    """Approximate ``L^(1-alpha) f`` as the fractional inverse applied to ``L f``."""
    return apply(build_rational_form(k, alpha, tau), op, op.apply(f))
