"""Symmetric positive-definite operators with shifted solves.

Each operator exposes ``apply`` and ``shifted_solve(shift, rhs)``, which
solves ``(shift * I + L) x = rhs``. The rational approximation only ever
touches an operator through these two calls.
"""
from __future__ import annotations

import abc
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import scipy.linalg

from .errors import DomainError, NotPositiveDefiniteError

EIGEN_CAP = 2000


@dataclass(frozen=True)
class SpectrumInfo:
    """Spectral interval ``[c, lambda_max]``; ``lambda_max=None`` is unbounded."""

    c: float
    lambda_max: float | None = None

    def __post_init__(self):
        if not self.c > 0:
            raise DomainError(f"lower spectral bound must be positive, got {self.c!r}")
        if self.lambda_max is not None and not self.lambda_max >= self.c:
            raise DomainError("lambda_max must be >= c")

    @property
    def bounded(self) -> bool:
        return self.lambda_max is not None

    @property
    def condition_number(self) -> float:
        if self.lambda_max is None:
            return float("inf")
        return self.lambda_max / self.c


def _check_shift(shift):
    if not shift > 0:
        raise DomainError(f"shift must be positive, got {shift!r}")


def _as_vector(x, n):
    v = np.asarray(x, dtype=float)
    if v.shape != (n,):
        raise DomainError(f"expected a vector of length {n}, got shape {v.shape}")
    return v


class LinearOperator(abc.ABC):
    """Abstract SPD operator of finite dimension."""

    @property
    @abc.abstractmethod
    def dim(self) -> int: ...

    @abc.abstractmethod
    def apply(self, x) -> np.ndarray: ...

    @abc.abstractmethod
    def shifted_solve(self, shift: float, rhs) -> np.ndarray: ...

    @abc.abstractmethod
    def to_dense(self) -> np.ndarray: ...

    def spectrum(self) -> SpectrumInfo:
        """Extreme eigenvalues as a SpectrumInfo."""
        ev = np.linalg.eigvalsh(self.to_dense())
        return SpectrumInfo(float(ev[0]), float(ev[-1]))


class DiagonalOperator(LinearOperator):
    def __init__(self, entries):
        entries = np.array(entries, dtype=float).ravel()
        if entries.size == 0 or not np.all(entries > 0):
            raise DomainError("diagonal entries must be positive")
        entries.setflags(write=False)
        self.entries = entries

    @property
    def dim(self):
        return self.entries.size

    def apply(self, x):
        return self.entries * _as_vector(x, self.dim)

    def shifted_solve(self, shift, rhs):
        _check_shift(shift)
        return _as_vector(rhs, self.dim) / (shift + self.entries)

    def to_dense(self):
        return np.diag(self.entries)

    def spectrum(self):
        return SpectrumInfo(float(self.entries.min()), float(self.entries.max()))


class TridiagonalOperator(LinearOperator):
    """Symmetric tridiagonal operator; SPD is verified by an LDL^T sweep."""

    def __init__(self, diag, offdiag):
        diag = np.array(diag, dtype=float).ravel()
        offdiag = np.array(offdiag, dtype=float).ravel()
        if diag.size == 0 or offdiag.size != diag.size - 1:
            raise DomainError("offdiag must have length len(diag) - 1")
        diag.setflags(write=False)
        offdiag.setflags(write=False)
        self.diag = diag
        self.offdiag = offdiag
        self._ldl(0.0)

    @property
    def dim(self):
        return self.diag.size

    def _ldl(self, shift):
        d = self.diag.tolist()
        e = self.offdiag.tolist()
        piv = [0.0] * len(d)
        mult = [0.0] * len(e)
        p = d[0] + shift
        for i in range(len(e)):
            if not p > 0:
                raise NotPositiveDefiniteError(f"non-positive pivot {p!r} at row {i}")
            piv[i] = p
            mult[i] = e[i] / p
            p = d[i + 1] + shift - mult[i] * e[i]
        if not p > 0:
            raise NotPositiveDefiniteError(f"non-positive pivot {p!r} at row {len(d) - 1}")
        piv[-1] = p
        return piv, mult

    def apply(self, x):
        x = _as_vector(x, self.dim)
        y = self.diag * x
        y[:-1] += self.offdiag * x[1:]
        y[1:] += self.offdiag * x[:-1]
        return y

    def shifted_solve(self, shift, rhs):
        """Thomas algorithm on ``shift * I + L`` (symmetric LDL^T form)."""
        _check_shift(shift)
        b = _as_vector(rhs, self.dim).tolist()
        piv, mult = self._ldl(shift)
        n = len(b)
        for i in range(n - 1):
            b[i + 1] -= mult[i] * b[i]
        x = [0.0] * n
        x[-1] = b[-1] / piv[-1]
        for i in range(n - 2, -1, -1):
            x[i] = b[i] / piv[i] - mult[i] * x[i + 1]
        return np.array(x)

    def to_dense(self):
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    def spectrum(self):
        ev = scipy.linalg.eigvalsh_tridiagonal(self.diag, self.offdiag)
        return SpectrumInfo(float(ev[0]), float(ev[-1]))


class DenseSymmetricOperator(LinearOperator):
    """Dense symmetric operator built from the upper triangle of ``entries``.

    Positive definiteness is checked on the first solve, not at construction.
    """

    def __init__(self, entries):
        a = np.array(entries, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
            raise DomainError("dense operator needs a non-empty square matrix")
        upper = np.triu(a)
        a = upper + np.triu(a, 1).T
        a.setflags(write=False)
        self.entries = a
        self._spd_checked = False

    @property
    def dim(self):
        return self.entries.shape[0]

    def apply(self, x):
        return self.entries @ _as_vector(x, self.dim)

    def _cholesky(self, m):
        try:
            return scipy.linalg.cho_factor(m, lower=True)
        except np.linalg.LinAlgError as exc:
            raise NotPositiveDefiniteError(str(exc)) from None

    def shifted_solve(self, shift, rhs):
        _check_shift(shift)
        b = _as_vector(rhs, self.dim)
        if not self._spd_checked:
            self._cholesky(self.entries)
            self._spd_checked = True
        fac = self._cholesky(self.entries + shift * np.eye(self.dim))
        return scipy.linalg.cho_solve(fac, b)

    def to_dense(self):
        return np.array(self.entries)


class Eigendecomposition(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def eigendecomposition_small(op: LinearOperator, cap: int = EIGEN_CAP) -> Eigendecomposition:
    """Reference eigendecomposition of a modest-size operator (LAPACK ``syevd``)."""
    if op.dim > cap:
        raise DomainError(f"dimension {op.dim} exceeds the reference cap {cap}")
    vals, vecs = np.linalg.eigh(op.to_dense())
    return Eigendecomposition(vals, vecs)


def exact_fractional_apply(eig: Eigendecomposition, alpha: float, b) -> np.ndarray:
    """``sum_i lambda_i^(-alpha) <b, v_i> v_i``."""
    vals, vecs = eig
    if not np.all(vals > 0):
        raise DomainError("fractional power needs positive eigenvalues")
    b = _as_vector(b, len(vals))
    return vecs @ (vals ** (-alpha) * (vecs.T @ b))


def make_laplacian_1d(N: int) -> TridiagonalOperator:
    """Dirichlet finite-difference Laplacian ``(N+1)^2 tridiag(-1, 2, -1)``."""
    if N < 1:
        raise DomainError("N must be >= 1")
    h2 = float((N + 1) ** 2)
    return TridiagonalOperator(np.full(N, 2.0 * h2), np.full(N - 1, -h2))


def laplacian_eigenvalues(N: int) -> np.ndarray:
    """Closed-form spectrum ``4 (N+1)^2 sin^2(j pi / (2(N+1)))``, ascending."""
    if N < 1:
        raise DomainError("N must be >= 1")
    j = np.arange(1, N + 1)
    return 4.0 * (N + 1) ** 2 * np.sin(j * np.pi / (2 * (N + 1))) ** 2


def laplacian_eigendecomposition(N: int) -> Eigendecomposition:
    """Closed-form eigenpairs; eigenvectors are discrete sine modes."""
    j = np.arange(1, N + 1)
    vecs = np.sqrt(2.0 / (N + 1)) * np.sin(np.outer(j, j) * np.pi / (N + 1))
    return Eigendecomposition(laplacian_eigenvalues(N), vecs)


def laplacian_spectrum(N: int) -> SpectrumInfo:
    """Nominal interval ``[pi^2, 4 (N+1)^2]`` for the discrete Laplacian.

    The smallest eigenvalue lies a hair below ``pi^2`` (relative gap about
    ``pi^2 / (12 (N+1)^2)``); the continuum value is kept as the lower edge.
    """
    return SpectrumInfo(np.pi ** 2, 4.0 * (N + 1) ** 2)


def power_diagonal(N: int, p: int) -> DiagonalOperator:
    """``diag(1, 2, ..., N)^p``, a wide-spectrum stand-in for an unbounded operator."""
    if N < 1 or p < 1:
        raise DomainError("N and p must be >= 1")
    return DiagonalOperator(np.arange(1, N + 1, dtype=float) ** p)
