"""Scalar special functions: log-gamma, principal Lambert W, Gauss 2F1.

Everything here works on Python floats and is pure.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError

_INV_E = math.exp(-1.0)


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for hypergeometric series."""

    max_terms: int = 10000
    rel_tol: float = 1e-13

    def __post_init__(self):
        if self.max_terms < 1:
            raise DomainError("max_terms must be >= 1")
        if not 0.0 < self.rel_tol < 1.0:
            raise DomainError("rel_tol must lie in (0, 1)")


DEFAULT_SERIES = SeriesControl()


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def lambert_w0(x: float, max_iter: int = 50) -> float:
    """Principal branch of the Lambert W function, ``w * exp(w) = x``.

    Halley iteration started from ``ln x - ln ln x`` for large arguments,
    ``log1p(x)`` on the middle range, and the branch-point series near -1/e.
    """
    x = float(x)
    if x < -_INV_E:
        raise DomainError(f"lambert_w0 requires x >= -1/e, got {x!r}")
    if x == 0.0:
        return 0.0
    if x == -_INV_E:
        return -1.0
    if x > math.e:
        lx = math.log(x)
        w = lx - math.log(lx)
    elif x > -0.25:
        w = math.log1p(x)
    else:
        p = math.sqrt(2.0 * (math.e * x + 1.0))
        w = -1.0 + p - p * p / 3.0

    for _ in range(max_iter):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= dw
        if abs(dw) <= 4e-16 * (1.0 + abs(w)):
            break
    else:
        raise ConvergenceError(f"lambert_w0 did not converge for x={x!r}")
    return w


def _is_nonpositive_int(v: float) -> bool:
    return v <= 0 and v == math.floor(v)


def _terminating_sum(n_terms: int, a: float, b: float, c: float, z: float) -> float:
    # a = -n_terms; the (n_terms+1)-th coefficient and beyond vanish
    s = t = 1.0
    for n in range(n_terms):
        t *= (a + n) * (b + n) / ((c + n) * (n + 1)) * z
        s += t
    return s


def _series(a: float, b: float, c: float, z: float, ctrl: SeriesControl) -> float:
    s = t = 1.0
    az = abs(z)
    for n in range(ctrl.max_terms):
        ratio = (a + n) * (b + n) / ((c + n) * (n + 1))
        t *= ratio * z
        s += t
        q = max(abs(ratio) * az, az)
        # geometric tail estimate, valid once the terms shrink
        if q < 1.0 and abs(t) * q / (1.0 - q) <= ctrl.rel_tol * abs(s):
            return s
        if t == 0.0:
            return s
    raise ConvergenceError(
        f"2F1({a}, {b}; {c}; {z}) needs more than {ctrl.max_terms} terms"
    )


def hyp2f1(a: float, b: float, c: float, z: float,
           ctrl: SeriesControl = DEFAULT_SERIES) -> float:
    """Gauss hypergeometric function 2F1(a, b; c; z) for real z < 1.

    Terminating series (``a`` or ``b`` a non-positive integer) are summed
    exactly for any real ``z``. Otherwise the power series is used directly
    on ``|z| <= 1/2``, after the Pfaff transformation for ``z < -1/2`` and
    after the Euler transformation for ``1/2 < z < 1``.

    Raises
    ------
    DomainError
        For ``z >= 1`` on a non-terminating series, or ``c`` a non-positive
        integer that is reached before the series terminates.
    ConvergenceError
        If ``ctrl.max_terms`` terms do not reach ``ctrl.rel_tol``.
    """
    a, b, c, z = float(a), float(b), float(c), float(z)
    # canonical parameter order makes the result exactly symmetric in (a, b)
    ta, tb = _is_nonpositive_int(a), _is_nonpositive_int(b)
    if (tb and (not ta or b > a)) or (not ta and not tb and a > b):
        a, b = b, a

    if z == 0.0:
        return 1.0
    if _is_nonpositive_int(a):
        m = int(-a)
        if _is_nonpositive_int(c) and -c < m:
            raise DomainError(f"c={c} is a pole before the series terminates")
        return _terminating_sum(m, a, b, c, z)
    if _is_nonpositive_int(c):
        raise DomainError(f"c={c} is a non-positive integer")
    if z >= 1.0:
        raise DomainError(f"z={z} outside the supported range z < 1")

    if z < -0.5:
        # Pfaff: (1-z)^(-a) 2F1(a, c-b; c; z/(z-1)), new argument in (1/3, 1)
        return (1.0 - z) ** (-a) * hyp2f1(a, c - b, c, z / (z - 1.0), ctrl)
    if z > 0.5:
        # Euler: (1-z)^(c-a-b) 2F1(c-a, c-b; c; z)
        ea, eb = c - a, c - b
        pref = (1.0 - z) ** (c - a - b)
        if _is_nonpositive_int(ea) or _is_nonpositive_int(eb):
            return pref * hyp2f1(ea, eb, c, z, ctrl)
        return pref * _series(ea, eb, c, z, ctrl)
    return _series(a, b, c, z, ctrl)
