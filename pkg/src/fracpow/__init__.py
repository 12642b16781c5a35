"""Rational approximation of fractional powers ``L^(-alpha)`` of SPD operators.

Gauss-Jacobi quadrature of the resolvent integral gives ``k`` shifted solves
``(eta_j I + L)^(-1)`` with weights ``gamma_j``; the free centre ``tau`` is
picked by the rules in :mod:`fracpow.tau`, and :mod:`fracpow.bounds` holds
the matching a-priori error bounds.
"""
from .errors import ConvergenceError, DomainError, NotPositiveDefiniteError
from .linop import (DenseSymmetricOperator, DiagonalOperator, LinearOperator,
                    SpectrumInfo, TridiagonalOperator)
from .quadrature import QuadratureRule, gauss_jacobi
from .rational import (RationalForm, apply, apply_power_complement,
                       build_rational_form, eval_scalar, scalar_error)
from .tau import Regime, TauChoice, select_tau

__all__ = [
    "ConvergenceError", "DomainError", "NotPositiveDefiniteError",
    "DenseSymmetricOperator", "DiagonalOperator", "LinearOperator",
    "SpectrumInfo", "TridiagonalOperator", "QuadratureRule", "gauss_jacobi",
    "RationalForm", "apply", "apply_power_complement", "build_rational_form",
    "eval_scalar", "scalar_error", "Regime", "TauChoice", "select_tau",
]
