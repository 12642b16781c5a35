import numpy as np
import pytest

from fracpow.fileio import (FormatError, format_operator, format_vector, parse_operator,
                            parse_vector, read_operator, read_vector, write_operator,
                            write_vector)
from fracpow.linop import (DenseSymmetricOperator, DiagonalOperator, TridiagonalOperator,
                           make_laplacian_1d)


def test_parse_each_kind():
    op = parse_operator("dim 3\ndiag\n1 4 9\n")
    assert isinstance(op, DiagonalOperator)
    np.testing.assert_array_equal(op.entries, [1, 4, 9])
    op = parse_operator("# model\ndim 3 tridiag\n2 2 2  # diagonal\n-1 -1\n")
    assert isinstance(op, TridiagonalOperator)
    np.testing.assert_array_equal(op.offdiag, [-1, -1])
    op = parse_operator("dim 2\ndense\n4 1\n7 3\n")
    assert isinstance(op, DenseSymmetricOperator)
    np.testing.assert_array_equal(op.to_dense(), [[4, 1], [1, 3]])


@pytest.mark.parametrize("text", [
    "",
    "size 2 diag 1 2",
    "dim x diag 1",
    "dim 0 diag",
    "dim 2 band 1 2",
    "dim 2 diag 1",
    "dim 2 tridiag 1 2 3 4",
    "dim 2 diag 1 abc",
])
def test_parse_rejects_malformed(text):
    with pytest.raises(FormatError):
        parse_operator(text)


def test_vector_parsing():
    np.testing.assert_array_equal(parse_vector("1\n2.5 -3e2 # tail\n"), [1, 2.5, -300])
    with pytest.raises(FormatError):
        parse_vector("# nothing\n")
    with pytest.raises(FormatError):
        parse_vector("1 nan? 2")


def test_roundtrip_is_exact(tmp_path):
    rng = np.random.default_rng(5)
    ops = [DiagonalOperator(rng.uniform(0.1, 10, 4)), make_laplacian_1d(5),
           DenseSymmetricOperator(np.eye(3) * 2 + 0.1 * np.ones((3, 3)) / 3)]
    for i, op in enumerate(ops):
        path = tmp_path / f"op{i}.txt"
        write_operator(path, op)
        back = read_operator(path)
        assert type(back) is type(op)
        np.testing.assert_array_equal(back.to_dense(), op.to_dense())
        assert format_operator(back) == format_operator(op)
    v = rng.standard_normal(7)
    write_vector(tmp_path / "v.txt", v)
    np.testing.assert_array_equal(read_vector(tmp_path / "v.txt"), v)
    assert format_vector([0.1]) == "0.10000000000000001\n"
