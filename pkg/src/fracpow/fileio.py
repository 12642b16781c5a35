"""Plain-text operator and vector files.

Operator files are whitespace-tokenized; ``#`` starts a comment. The first
two tokens are ``dim N``, the third is the storage kind, then the numbers::

    dim 3            dim 3              dim 2
    diag             tridiag            dense
    1 4 9            2 2 2              4 1
                     -1 -1              1 3

* ``diag``: N entries.
* ``tridiag``: N diagonal entries, then N-1 off-diagonal entries.
* ``dense``: N*N entries row by row; only the upper triangle is read.

Vector files hold N numbers, whitespace separated. Written numbers use 17
significant digits, one per line.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError
from .linop import (DenseSymmetricOperator, DiagonalOperator, LinearOperator,
                    TridiagonalOperator)


class FormatError(DomainError):
    """Malformed operator or vector file."""


def fmt(x: float) -> str:
    return format(float(x), ".17g")


def _tokens(text):
    out = []
    for line in text.splitlines():
        out.extend(line.split("#", 1)[0].split())
    return out


def _floats(tokens, where):
    try:
        return np.array([float(t) for t in tokens])
    except ValueError as exc:
        raise FormatError(f"{where}: {exc}") from None


def parse_operator(text: str) -> LinearOperator:
    toks = _tokens(text)
    if len(toks) < 3 or toks[0] != "dim":
        raise FormatError("operator file must start with 'dim N' and a kind")
    try:
        n = int(toks[1])
    except ValueError:
        raise FormatError(f"bad dimension {toks[1]!r}") from None
    if n < 1:
        raise FormatError("dimension must be >= 1")
    kind, body = toks[2], toks[3:]
    expected = {"diag": n, "tridiag": 2 * n - 1, "dense": n * n}
    if kind not in expected:
        raise FormatError(f"unknown operator kind {kind!r}")
    if len(body) != expected[kind]:
        raise FormatError(f"{kind} of dim {n} needs {expected[kind]} numbers, got {len(body)}")
    vals = _floats(body, kind)
    if kind == "diag":
        return DiagonalOperator(vals)
    if kind == "tridiag":
        return TridiagonalOperator(vals[:n], vals[n:])
    return DenseSymmetricOperator(vals.reshape(n, n))


def read_operator(path) -> LinearOperator:
    with open(path) as fh:
        return parse_operator(fh.read())


def format_operator(op: LinearOperator) -> str:
    lines = [f"dim {op.dim}"]
    if isinstance(op, DiagonalOperator):
        lines += ["diag", " ".join(map(fmt, op.entries))]
    elif isinstance(op, TridiagonalOperator):
        lines += ["tridiag", " ".join(map(fmt, op.diag)), " ".join(map(fmt, op.offdiag))]
    else:
        lines.append("dense")
        lines += [" ".join(map(fmt, row)) for row in op.to_dense()]
    return "\n".join(lines) + "\n"


def write_operator(path, op: LinearOperator) -> None:
    with open(path, "w") as fh:
        fh.write(format_operator(op))


def parse_vector(text: str) -> np.ndarray:
    toks = _tokens(text)
    if not toks:
        raise FormatError("empty vector file")
    return _floats(toks, "vector")


def read_vector(path) -> np.ndarray:
    with open(path) as fh:
        return parse_vector(fh.read())


def format_vector(v) -> str:
    return "".join(fmt(x) + "\n" for x in v)


def write_vector(path, v) -> None:
    with open(path, "w") as fh:
        fh.write(format_vector(v))
