"""Checks for the exact arithmetic substrate: fields, matrices, flips, set maps."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybx.exact import (
    GF,
    QQ,
    Field,
    Matrix,
    SetFn,
    compose,
    flip,
    identity,
    kron,
    kron_apply,
    linearize,
    permutation_matrix,
)

F5 = GF(5)
F7 = GF(7)


def naive_mul(a: Matrix, b: Matrix) -> Matrix:
    """Triple-loop product oracle."""
    F = a.field
    out = []
    for i in range(a.rows):
        row = []
        for k in range(b.cols):
            acc = F.zero
            for j in range(a.cols):
                acc = F.add(acc, F.mul(a.data[i][j], b.data[j][k]))
            row.append(acc)
        out.append(row)
    return Matrix(F, out)


def naive_kron(a: Matrix, b: Matrix) -> Matrix:
    """Quadruple-loop Kronecker oracle."""
    F = a.field
    out = [[F.zero] * (a.cols * b.cols) for _ in range(a.rows * b.rows)]
    for i in range(a.rows):
        for j in range(a.cols):
            for k in range(b.rows):
                for l in range(b.cols):
                    out[i * b.rows + k][j * b.cols + l] = F.mul(a.data[i][j], b.data[k][l])
    return Matrix(F, out)


def rand_matrix(rng: random.Random, field: Field, rows: int, cols: int) -> Matrix:
    return Matrix(field, [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)])


@st.composite
def q_matrices(draw, max_dim=3):
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    entries = st.integers(-4, 4)
    return Matrix(QQ, [[draw(entries) for _ in range(cols)] for _ in range(rows)])


class TestField:
    def test_prime_field_requires_prime(self):
        with pytest.raises(ValueError):
            GF(4)

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            Field("reals")

    def test_coerce_canonicalizes(self):
        assert QQ.coerce("2/4") == Fraction(1, 2)
        assert F7.coerce(-3) == 4
        assert F7.coerce("1/2") == 4  # 2 * 4 = 8 = 1 mod 7

    def test_encode_forms(self):
        assert QQ.encode(Fraction(-2, 3)) == "-2/3"
        assert QQ.encode(Fraction(6, 2)) == 3
        assert F7.encode(5) == 5

    def test_inverse_of_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            F5.inv(0)


class TestKron:
    def test_identity_factors(self):
        assert kron(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3)) == Matrix.identity(QQ, 6)

    def test_scalar_case(self):
        two = Matrix(QQ, [[2]])
        three = Matrix(QQ, [[3]])
        assert kron(two, three) == Matrix(QQ, [[6]])

    def test_right_unit_factor_over_f7(self):
        rng = random.Random(7)
        one = Matrix.identity(F7, 1)
        for _ in range(20):
            a = rand_matrix(rng, F7, 2, 2)
            assert kron(a, one) == a
            assert kron(a, one) == naive_kron(a, one)

    @given(q_matrices(), q_matrices())
    @settings(max_examples=40, deadline=None)
    def test_matches_naive_oracle(self, a, b):
        assert kron(a, b) == naive_kron(a, b)

    @given(q_matrices(max_dim=2), q_matrices(max_dim=2), q_matrices(max_dim=2))
    @settings(max_examples=25, deadline=None)
    def test_associative(self, a, b, c):
        assert kron(kron(a, b), c) == kron(a, kron(b, c))

    def test_field_mismatch_rejected(self):
        with pytest.raises(ValueError):
            kron(Matrix.identity(QQ, 2), Matrix.identity(F5, 2))


class TestFlip:
    def test_unit_factor_is_identity(self):
        assert flip(1, 5, QQ) == Matrix.identity(QQ, 5)
        assert flip(5, 1) == SetFn.identity(5)

    def test_two_by_two_permutation(self):
        assert flip(2, 2).table == (0, 2, 1, 3)

    def test_involution(self):
        assert compose(flip(2, 3), flip(3, 2)) == SetFn.identity(6)
        assert compose(flip(2, 3, QQ), flip(3, 2, QQ)) == Matrix.identity(QQ, 6)

    @given(q_matrices(), q_matrices())
    @settings(max_examples=40, deadline=None)
    def test_naturality(self, a, b):
        lhs = compose(flip(a.rows, b.rows, QQ), kron(a, b))
        rhs = compose(kron(b, a), flip(a.cols, b.cols, QQ))
        assert lhs == rhs


class TestCompose:
    def test_identity_is_neutral(self):
        rng = random.Random(3)
        a = rand_matrix(rng, F5, 3, 3)
        assert compose(Matrix.identity(F5, 3), a) == a

    def test_matches_naive_oracle_f5(self):
        rng = random.Random(5)
        for _ in range(25):
            a = rand_matrix(rng, F5, 3, 3)
            b = rand_matrix(rng, F5, 3, 3)
            assert compose(a, b) == naive_mul(a, b)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(ValueError):
            compose(Matrix.identity(QQ, 2), Matrix.identity(QQ, 3))


class TestMatrix:
    def test_ragged_rows_rejected(self):
        with pytest.raises(ValueError):
            Matrix(QQ, [[1, 2], [3]])

    def test_inverse_roundtrip(self):
        rng = random.Random(11)
        found = 0
        while found < 5:
            a = rand_matrix(rng, QQ, 3, 3)
            try:
                inv = a.inverse()
            except ValueError:
                continue
            found += 1
            assert a @ inv == Matrix.identity(QQ, 3)
            assert inv @ a == Matrix.identity(QQ, 3)

    def test_singular_inverse_rejected(self):
        with pytest.raises(ValueError):
            Matrix(QQ, [[1, 1], [1, 1]]).inverse()

    def test_power(self):
        f = flip(2, 2, QQ)
        assert f.power(0) == Matrix.identity(QQ, 4)
        assert f.power(2) == Matrix.identity(QQ, 4)

    def test_entries_stay_reduced(self):
        a = Matrix(QQ, [["1/3", "1/6"]])
        b = a.add(a)
        assert b.data[0] == (Fraction(2, 3), Fraction(1, 3))
        # re-coercing is idempotent on canonical entries
        assert Matrix(QQ, [list(r) for r in b.data]) == b


class TestSetFn:
    def test_compose_and_apply(self):
        f = SetFn(3, 3, [1, 2, 0])
        g = SetFn(3, 3, [2, 2, 2])
        assert compose(f, g).table == (0, 0, 0)
        assert f(1) == 2

    def test_kron_pair_indexing(self):
        f = SetFn(2, 2, [1, 0])
        g = SetFn(3, 3, [0, 0, 0])
        fg = kron(f, g)
        # (x, y) lives at x*3+y and maps to f(x)*3+g(y)
        assert fg(1 * 3 + 2) == 0 * 3 + 0
        assert fg(0 * 3 + 1) == 1 * 3 + 0

    def test_inverse_roundtrip(self):
        f = SetFn(4, 4, [2, 3, 1, 0])
        assert compose(f.inverse(), f) == SetFn.identity(4)

    def test_non_bijective_inverse_rejected(self):
        with pytest.raises(ValueError):
            SetFn(2, 2, [0, 0]).inverse()

    def test_out_of_range_table_rejected(self):
        with pytest.raises(ValueError):
            SetFn(2, 2, [0, 5])


class TestKronApply:
    @given(q_matrices(max_dim=2), q_matrices(max_dim=2), q_matrices(max_dim=2))
    @settings(max_examples=30, deadline=None)
    def test_matches_materialized_kron(self, a, b, m):
        # pad m so its rows match the joint domain of (a (x) b)
        rows = a.cols * b.cols
        grid = [[m.data[i % m.rows][j % m.cols] for j in range(2)] for i in range(rows)]
        thin = Matrix(QQ, grid)
        assert kron_apply([a, b], thin) == kron(a, b) @ thin

    def test_three_factors(self):
        rng = random.Random(2)
        mats = [rand_matrix(rng, QQ, 2, 2) for _ in range(3)]
        start = Matrix.identity(QQ, 8)
        assert kron_apply(mats, start) == kron(kron(mats[0], mats[1]), mats[2])

    def test_shape_mismatch_rejected(self):
        with pytest.raises(ValueError):
            kron_apply([Matrix.identity(QQ, 2)], Matrix.identity(QQ, 3))


class TestLinearize:
    def test_permutation_matrix_matches_flip(self):
        assert linearize(flip(2, 3), QQ) == flip(2, 3, QQ)
        assert permutation_matrix(QQ, flip(2, 3).table) == flip(2, 3, QQ)

    def test_identity_dispatch(self):
        assert identity(4) == SetFn.identity(4)
        assert identity(4, QQ) == Matrix.identity(QQ, 4)
