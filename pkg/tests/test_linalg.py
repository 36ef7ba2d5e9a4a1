import random
from fractions import Fraction

import pytest

from weakhopf.errors import DimensionMismatch
from weakhopf.fields import GF, Field, QQ
from weakhopf.linalg import (Matrix, Vector, column_space_basis, in_span, inverse,
                             kernel_basis, kron, rank, solve)

from oracles import dense_matmul, dense_nullspace, dense_rank, to_dense


def _random_matrix(rng, field, rows, cols, density=0.6, span=3):
    data = {}
    for i in range(rows):
        for j in range(cols):
            if rng.random() < density:
                v = rng.randint(-span, span)
                if v:
                    data[(i, j)] = field.from_int(v)
    return Matrix(field, rows, cols, data)


# -- fields -----------------------------------------------------------------


def test_gf_arithmetic():
    F5 = GF(5)
    assert F5(2) + F5(4) == F5(1)
    assert F5(2) * F5(4) == F5(3)
    assert F5(1) / F5(3) == F5(2)
    assert -F5(2) == F5(3)
    assert F5(2) ** 3 == F5(3)
    assert bool(F5(0)) is False and bool(F5(3)) is True
    with pytest.raises(ZeroDivisionError):
        F5(1) / F5(0)


def test_gf_requires_prime():
    with pytest.raises(ValueError):
        GF(6)


def test_field_parse_format_roundtrip():
    q = Field.rationals()
    for text in ("3", "-3/4", "0", "7/2"):
        assert q.format(q.parse(text)) == str(Fraction(text))
    f3 = Field.prime(3)
    assert f3.parse(5) == f3(2)
    assert f3.format(f3(2)) == 2
    assert list(f3.elements()) == [f3(0), f3(1), f3(2)]


def test_rationals_always_reduced():
    q = Field.rationals()
    x = q.parse("2/4")
    assert (x.numerator, x.denominator) == (1, 2)


# -- vectors and matrices ---------------------------------------------------


def test_vector_ops():
    v = Vector.from_list(QQ, [Fraction(1), Fraction(0), Fraction(-2)])
    w = Vector.unit(QQ, 3, 1)
    assert (v + w).to_list() == [Fraction(1), Fraction(1), Fraction(-2)]
    assert (v - v).is_zero()
    assert v.scale(Fraction(1, 2)).get(2) == Fraction(-1)
    assert v.dot(v) == Fraction(5)
    with pytest.raises(DimensionMismatch):
        v + Vector.zero(QQ, 2)


def test_matrix_product_against_dense_oracle():
    rng = random.Random(7)
    for _ in range(10):
        a = _random_matrix(rng, QQ, 3, 4)
        b = _random_matrix(rng, QQ, 4, 2)
        expected = dense_matmul(to_dense(a), to_dense(b), QQ)
        assert to_dense(a * b) == expected


def test_matrix_apply_matches_product():
    rng = random.Random(8)
    a = _random_matrix(rng, QQ, 4, 4)
    v = Vector.from_list(QQ, [Fraction(1), Fraction(-1), Fraction(2), Fraction(0)])
    as_col = Matrix.from_columns(QQ, 4, [v])
    assert (a * as_col).column(0) == a.apply(v)


# -- kernels ----------------------------------------------------------------


def test_kernel_identity_trivial():
    assert kernel_basis(Matrix.identity(QQ, 2)) == []


def test_kernel_rank_one_row():
    m = Matrix.from_rows_dense(QQ, [[Fraction(1), Fraction(1)]])
    basis = kernel_basis(m)
    assert len(basis) == 1
    assert basis[0].to_list() == [Fraction(-1), Fraction(1)]


def test_kernel_vectors_are_annihilated_and_independent():
    rng = random.Random(11)
    for trial in range(20):
        m = _random_matrix(rng, QQ, rng.randint(1, 6), rng.randint(1, 6))
        basis = kernel_basis(m)
        for v in basis:
            assert m.apply(v).is_zero()
        if basis:
            stacked = Matrix.from_columns(QQ, m.cols, basis)
            assert rank(stacked) == len(basis)
        assert rank(m) + len(basis) == m.cols


def test_kernel_against_dense_oracle():
    rng = random.Random(13)
    for trial in range(25):
        m = _random_matrix(rng, QQ, rng.randint(1, 7), rng.randint(1, 7), density=0.5)
        ours = kernel_basis(m)
        oracle = [Vector.from_list(QQ, v) for v in dense_nullspace(to_dense(m), m.cols, QQ)]
        assert len(ours) == len(oracle)
        for v in oracle:
            assert in_span(ours, v)
        for v in ours:
            assert in_span(oracle, v)


def test_kernel_deterministic():
    rng = random.Random(17)
    m = _random_matrix(rng, QQ, 5, 5, density=0.4)
    again = Matrix(QQ, 5, 5, dict(m.data))
    assert kernel_basis(m) == kernel_basis(again)


def test_rank_against_dense_oracle_over_gf():
    f5 = Field.prime(5)
    rng = random.Random(19)
    for _ in range(10):
        m = _random_matrix(rng, f5, 4, 5)
        assert rank(m) == dense_rank(to_dense(m), m.cols, f5)


def test_solve_and_inverse():
    m = Matrix.from_rows_dense(QQ, [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(1)]])
    b = Vector.from_list(QQ, [Fraction(3), Fraction(2)])
    x = solve(m, b)
    assert m.apply(x) == b
    inv = inverse(m)
    assert inv * m == Matrix.identity(QQ, 2)
    assert m * inv == Matrix.identity(QQ, 2)
    singular = Matrix.from_rows_dense(QQ, [[Fraction(1), Fraction(1)], [Fraction(2), Fraction(2)]])
    assert inverse(singular) is None
    assert solve(singular, Vector.from_list(QQ, [Fraction(0), Fraction(1)])) is None


def test_column_space_basis_spans_columns():
    rng = random.Random(23)
    m = _random_matrix(rng, QQ, 5, 6, density=0.4)
    basis = column_space_basis(m)
    for j in range(m.cols):
        assert in_span(basis, m.column(j))
    assert len(basis) == rank(m)


# -- kronecker product --------------------------------------------------------


def test_kron_identity():
    assert kron(Matrix.identity(QQ, 2), Matrix.identity(QQ, 2)) == Matrix.identity(QQ, 4)


def test_kron_unit_factor():
    n = Matrix(QQ, 2, 2, {(0, 1): Fraction(1)})
    one = Matrix.identity(QQ, 1)
    assert kron(n, one) == n
    assert kron(one, n) == n


def test_kron_mixed_product_property():
    rng = random.Random(29)
    for _ in range(10):
        a, b, c, d = (_random_matrix(rng, QQ, 2, 2, density=0.8) for _ in range(4))
        assert kron(a, b) * kron(c, d) == kron(a * c, b * d)


def test_kron_associative_with_row_major_flattening():
    rng = random.Random(31)
    a = _random_matrix(rng, QQ, 2, 2)
    b = _random_matrix(rng, QQ, 3, 3)
    c = _random_matrix(rng, QQ, 2, 2)
    assert kron(kron(a, b), c) == kron(a, kron(b, c))
