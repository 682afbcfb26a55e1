"""Leibniz algebra laws, unitarization, crossed modules, and representations."""

import pytest

from ybx.exact import QQ, Matrix, kron
from ybx.leibniz import (
    LeibnizAlgebra,
    LeibnizCrossedModule,
    LeibnizRep,
    UnitalLeibnizAlgebra,
    abelian_leibniz,
    check_leibniz,
    check_leibniz_crossed_module,
    check_leibniz_rep,
    identity_crossed_module,
    l2_algebra,
    unitarize,
)

L2 = l2_algebra(QQ)


def kplus_rep(x: LeibnizCrossedModule) -> LeibnizRep:
    """The carrier k+ with the unitarized action and delta0(1) = 0, delta0(k) = 1 (x) k."""
    kd = x.k.dim
    F = x.k.field
    action = []
    for theta in x.action:
        grid = [[F.zero] * (kd + 1) for _ in range(kd + 1)]
        for r in range(kd):
            for c in range(kd):
                grid[r][c] = theta.data[r][c]
        action.append(Matrix(F, grid))
    delta0 = Matrix.zeros(F, (kd + 1) * kd, kd + 1)
    grid = [list(row) for row in delta0.data]
    for k in range(kd):
        grid[kd * kd + k][k] = F.one  # unit (x) e_k
    return LeibnizRep(x, kd + 1, action, Matrix(F, grid))


class TestCheckLeibniz:
    def test_abelian_passes(self):
        assert check_leibniz(abelian_leibniz(QQ, 3)).passed

    def test_l2_passes(self):
        report = check_leibniz(L2)
        assert report.passed
        assert "8 basis triples" in report.checks[0].detail

    def test_corrupted_l2_fails_with_witness(self):
        bracket = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
        bracket[0][0] = [0, 1]
        bracket[1][0] = [1, 0]  # [y, x] = x breaks the identity
        report = check_leibniz(LeibnizAlgebra(QQ, 2, bracket))
        assert not report.passed
        assert report.first_failure().witness is not None

    def test_malformed_tensor_rejected(self):
        with pytest.raises(ValueError):
            LeibnizAlgebra(QQ, 2, [[[0, 0]], [[0, 0], [0, 0]]])


class TestUnitarize:
    def test_abelian_dim1(self):
        up = unitarize(abelian_leibniz(QQ, 1))
        assert up.dim == 2
        assert up.bracket_map().is_zero()

    def test_l2_plus_coproduct(self):
        up = unitarize(L2)
        assert up.dim == 3
        # Delta(x) = x (x) 1 + 1 (x) x with the unit at index 2
        col = [up.delta.data[r][0] for r in range(9)]
        assert col[0 * 3 + 2] == 1 and col[2 * 3 + 0] == 1
        assert sum(1 for v in col if v) == 2

    def test_unit_annihilates(self):
        up = unitarize(L2)
        br = up.bracket_map()
        for i in range(3):
            assert all(not br.data[r][i * 3 + 2] for r in range(3))
            assert all(not br.data[r][2 * 3 + i] for r in range(3))

    def test_coalgebra_laws(self):
        up = unitarize(L2)
        eye = Matrix.identity(QQ, 3)
        assert kron(up.delta, eye) @ up.delta == kron(eye, up.delta) @ up.delta
        assert kron(up.eps, eye) @ up.delta == eye
        assert kron(eye, up.eps) @ up.delta == eye

    def test_adjoint_action_rules(self):
        up = unitarize(L2)
        adj = up.adjoint_action()
        assert adj[2] == Matrix.identity(QQ, 3)  # the unit acts as identity
        for j in range(2):
            assert all(not adj[j].data[r][2] for r in range(3))  # 1 . k = 0
        # x . x = [x, x] = y
        assert adj[0].data[1][0] == 1

    def test_rejects_non_leibniz(self):
        bracket = [[[0, 0], [0, 0]], [[0, 0], [0, 0]]]
        bracket[0][0] = [0, 1]
        bracket[1][0] = [1, 0]
        with pytest.raises(ValueError):
            unitarize(LeibnizAlgebra(QQ, 2, bracket))


class TestCrossedModule:
    def test_identity_crossed_module_l2(self):
        assert check_leibniz_crossed_module(identity_crossed_module(L2)).passed

    def test_zero_map_from_abelian(self):
        k = abelian_leibniz(QQ, 2)
        pi = Matrix.zeros(QQ, 2, 2)
        action = (Matrix(QQ, [[0, 1], [0, 0]]), Matrix(QQ, [[1, 0], [0, 1]]))
        x = LeibnizCrossedModule(k, L2, pi, action)
        assert check_leibniz_crossed_module(x).passed

    def test_non_derivation_action_fails(self):
        bad = Matrix(QQ, [[1, 0], [0, 0]])  # theta(x) = x, theta(y) = 0
        x = LeibnizCrossedModule(L2, L2, Matrix.identity(QQ, 2), (bad, L2.ad(1)))
        report = check_leibniz_crossed_module(x)
        derivations = next(c for c in report.checks if c.check_id == "crmodla.derivations")
        assert not derivations.passed

    def test_dim_mismatch_rejected(self):
        with pytest.raises(ValueError):
            LeibnizCrossedModule(L2, L2, Matrix.identity(QQ, 3), (L2.ad(0), L2.ad(1)))


class TestRepresentations:
    def test_adjoint_with_zero_delta0(self):
        x = identity_crossed_module(L2)
        rep = LeibnizRep(x, 2, (L2.ad(0), L2.ad(1)), Matrix.zeros(QQ, 4, 2))
        assert check_leibniz_rep(rep).passed

    def test_kplus_rep_passes(self):
        x = identity_crossed_module(L2)
        report = check_leibniz_rep(kplus_rep(x))
        assert report.passed
        names = {c.check_id for c in report.checks}
        assert "rep.rel-unit-swap" in names
        assert "rep.rel-coaction-action" in names

    def test_square_zero_violation(self):
        x = identity_crossed_module(L2)
        delta0 = Matrix.zeros(QQ, 4, 2)
        grid = [list(r) for r in delta0.data]
        grid[0][0] = 1  # delta0(x) = x (x) x
        report = check_leibniz_rep(LeibnizRep(x, 2, (L2.ad(0), L2.ad(1)), Matrix(QQ, grid)))
        square = next(c for c in report.checks if c.check_id == "rep.square-zero")
        assert not square.passed

    def test_action_matrix_count_validated(self):
        x = identity_crossed_module(L2)
        with pytest.raises(ValueError):
            LeibnizRep(x, 2, (L2.ad(0),), Matrix.zeros(QQ, 4, 2))
