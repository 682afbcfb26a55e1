"""Yetter-Drinfel'd modules, the connecting-map condition, induced braidings, braid words."""

import pytest
from hypothesis import given, strategies as st

from ybx.braided import build_system, sigma_ass, sigma_lei
from ybx.exact import GF, QQ, Matrix, SetFn, flip, permutation_matrix
from ybx.groups import FiniteGroup, GroupCrossedModule, adjoint_crossed_module, cyclic_group, symmetric_group
from ybx.gyd import (
    ConnectingData,
    GroupGradedRep,
    GYDModule,
    RepresentationBundle,
    ShelfRep,
    as_gyd,
    braid_operator,
    check_group_graded_rep,
    check_gyd,
    check_pi_condition,
    check_shelf_rep,
    check_ybe_family,
    connecting_data,
    gyd_braiding,
)
from ybx.hopf import group_algebra
from ybx.leibniz import (
    LeibnizRep,
    UnitalLeibnizAlgebra,
    identity_crossed_module,
    l2_algebra,
)
from ybx.shelves import (
    ShelfAction,
    cyclic_shelf,
    dihedral_shelf,
    projection_shelf,
    sigma_sd,
)

D3 = dihedral_shelf(3)
L2 = l2_algebra(QQ)


def adjoint_rep(shelf):
    """The shelf acting on itself with identity grading and no twist."""
    x = adjoint_crossed_module(shelf)
    return ShelfRep(x, ShelfAction(shelf, shelf.table), SetFn.identity(shelf.size))


def doubled_rep(shelf):
    """Two copies of the shelf with the copy swap as a nontrivial twist.

    Points are (r, copy) encoded as 2r + copy; the grading forgets the copy,
    so the swap preserves grades and commutes with the action.
    """
    x = adjoint_crossed_module(shelf)
    n = shelf.size
    table = [[2 * shelf.ap(p // 2, s) + p % 2 for s in range(n)] for p in range(2 * n)]
    action = ShelfAction(shelf, table)
    gr = SetFn(2 * n, n, [p // 2 for p in range(2 * n)])
    twist = SetFn(2 * n, 2 * n, [p ^ 1 for p in range(2 * n)])
    return ShelfRep(x, action, gr, twist)


def conjugation_crossed_module(group: FiniteGroup) -> GroupCrossedModule:
    action = [
        [group.op(group.op(group.inv[g], k), g) for g in range(group.size)]
        for k in range(group.size)
    ]
    return GroupCrossedModule(group, group, SetFn.identity(group.size), action)


def regular_graded_rep(x: GroupCrossedModule) -> GroupGradedRep:
    """The group algebra of K graded by itself, with G permuting grades through the action."""
    n = x.k.size
    action = tuple(
        permutation_matrix(QQ, [x.act(k, g) for k in range(n)]) for g in range(x.g.size)
    )
    return GroupGradedRep(x, tuple(range(n)), action)


def bantay_z2():
    """The sign representation of the Z/2 crossed module: grades (0, 1), generator diag(1, -1)."""
    z2 = cyclic_group(2)
    x = GroupCrossedModule(z2, z2, SetFn(2, 2, [0, 1]), [[0, 0], [1, 1]])
    rep = GroupGradedRep(x, (0, 1), (Matrix.identity(QQ, 2), Matrix(QQ, [[1, 0], [0, -1]])))
    return x, rep


def kplus_rep(x):
    """The carrier k+ with the unitarized action and delta0(1) = 0, delta0(k) = 1 (x) k."""
    F = x.k.field
    kd = x.k.dim
    action = []
    for theta in x.action:
        grid = [[F.zero] * (kd + 1) for _ in range(kd + 1)]
        for r in range(kd):
            for c in range(kd):
                grid[r][c] = theta.data[r][c]
        action.append(Matrix(F, grid))
    grid = [[F.zero] * (kd + 1) for _ in range((kd + 1) * kd)]
    for k in range(kd):
        grid[kd * kd + k][k] = F.one
    return LeibnizRep(x, kd + 1, action, Matrix(F, grid))


def shelf_bundle(shelf, reps=None):
    x = adjoint_crossed_module(shelf)
    system = build_system("shelf_crmod", x)
    conn = connecting_data("shelf_crmod", x)
    members = [as_gyd(r, system) for r in (reps or [adjoint_rep(shelf)])]
    return RepresentationBundle(system, conn, members)


def leibniz_bundle():
    x = identity_crossed_module(L2)
    system = build_system("leibniz_crmod", x)
    flat = as_gyd(LeibnizRep(x, 2, (L2.ad(0), L2.ad(1)), Matrix.zeros(QQ, 4, 2)), system)
    kplus = as_gyd(kplus_rep(x), system)
    return RepresentationBundle(system, connecting_data("leibniz_crmod", x), [flat, kplus])


class TestCheckGYD:
    def test_shelf_adjoint_rep_passes(self):
        system = build_system("shelf_crmod", adjoint_crossed_module(D3))
        mod = as_gyd(adjoint_rep(D3), system)
        report = check_gyd(mod)
        assert report.passed
        assert [c.check_id for c in report.checks] == [
            "gyd.braided-action", "gyd.braided-coaction", "gyd.compatibility",
        ]

    def test_unit_carrier_counit_pair_passes_over_hopf_system(self):
        H = group_algebra(cyclic_group(3), QQ)
        system = build_system("hopf", H)
        mod = GYDModule(system, 1, H.eps, H.nu)
        assert check_gyd(mod).passed

    def test_corrupted_grading_fails_only_compatibility(self):
        system = build_system("shelf_crmod", adjoint_crossed_module(D3))
        rho = SetFn(9, 3, [D3.ap(m, s) for m in range(3) for s in range(3)])
        delta = SetFn(3, 9, [0 * 3 + 0, 1 * 3 + 1, 2 * 3 + 0])  # regrade element 2
        report = check_gyd(GYDModule(system, 3, rho, delta))
        assert report.find("gyd.braided-action").passed
        assert report.find("gyd.braided-coaction").passed
        compat = report.find("gyd.compatibility")
        assert not compat.passed
        assert compat.witness is not None

    def test_shape_validation(self):
        system = build_system("shelf_crmod", adjoint_crossed_module(D3))
        rho = SetFn(9, 3, [D3.ap(m, s) for m in range(3) for s in range(3)])
        with pytest.raises(ValueError, match="delta"):
            GYDModule(system, 3, rho, SetFn(3, 3, [0, 1, 2]))
        with pytest.raises(ValueError, match="two carriers"):
            GYDModule(system.subsystem([0]), 3, rho, SetFn(3, 9, [0, 4, 8]))

    def test_mode_mismatch_rejected(self):
        H = group_algebra(cyclic_group(3), QQ)
        system = build_system("hopf", H)
        with pytest.raises(ValueError, match="matrix"):
            GYDModule(system, 1, SetFn.identity(1), SetFn(1, 3, [0]))


class TestPiCondition:
    def test_hopf_exponents(self):
        H = group_algebra(cyclic_group(2), QQ)
        system = build_system("hopf", H)
        conn = connecting_data("hopf", H)
        assert conn.exponents == (1, 1, 1, 1)
        assert check_pi_condition(system, conn).passed

    def test_group_crossed_module_exponents(self):
        x, _ = bantay_z2()
        system = build_system("group_crmod", x, field=QQ)
        conn = connecting_data("group_crmod", x, field=QQ)
        assert conn.exponents == (1, 1, 1, 1)
        assert check_pi_condition(system, conn).passed

    def test_shelf_exponent_choice_matters(self):
        x = adjoint_crossed_module(D3)
        system = build_system("shelf_crmod", x)
        assert connecting_data("shelf_crmod", x).exponents == (0, 1, 1, 1)
        assert check_pi_condition(system, ConnectingData(x.pi, (0, 1, 1, 1))).passed
        report = check_pi_condition(system, ConnectingData(x.pi, (1, 1, 1, 1)))
        assert not report.passed
        assert report.find("pi.condition").witness is not None

    def test_leibniz_exponents_and_padded_pi(self):
        x = identity_crossed_module(L2)
        system = build_system("leibniz_crmod", x)
        conn = connecting_data("leibniz_crmod", x)
        assert conn.exponents == (0, 1, 1, 1)
        assert conn.pi.rows == 3 and conn.pi.cols == 3
        assert conn.pi.entry(2, 2) == 1
        assert check_pi_condition(system, conn).passed

    def test_exponent_guards(self):
        x = adjoint_crossed_module(D3)
        system = build_system("shelf_crmod", x)
        with pytest.raises(ValueError, match="above 8"):
            check_pi_condition(system, ConnectingData(x.pi, (9, 1, 1, 1)))
        with pytest.raises(ValueError, match="non-negative"):
            ConnectingData(x.pi, (-1, 1, 1, 1))
        with pytest.raises(ValueError, match="four"):
            ConnectingData(x.pi, (1, 1, 1))

    def test_pi_shape_enforced(self):
        x = adjoint_crossed_module(D3)
        system = build_system("shelf_crmod", x)
        with pytest.raises(ValueError, match="SetFn"):
            check_pi_condition(system, ConnectingData(Matrix.identity(QQ, 3), (0, 1, 1, 1)))


class TestGradedReps:
    def test_bantay_rep_checks_pass(self):
        _, rep = bantay_z2()
        assert check_group_graded_rep(rep).passed

    def test_broken_right_action_detected(self):
        z2 = cyclic_group(2)
        x = GroupCrossedModule(z2, z2, SetFn(2, 2, [0, 1]), [[0, 0], [1, 1]])
        rep = GroupGradedRep(x, (0, 1), (Matrix.identity(QQ, 2), Matrix(QQ, [[1, 0], [0, 2]])))
        assert not check_group_graded_rep(rep).find("grrep.action").passed

    def test_broken_grading_detected(self):
        z2 = cyclic_group(2)
        x = GroupCrossedModule(z2, z2, SetFn(2, 2, [0, 1]), [[0, 0], [1, 1]])
        rep = GroupGradedRep(x, (0, 1), (Matrix.identity(QQ, 2), Matrix(QQ, [[0, 1], [1, 0]])))
        report = check_group_graded_rep(rep)
        assert report.find("grrep.unit").passed
        assert report.find("grrep.action").passed
        assert not report.find("grrep.grading").passed

    def test_regular_graded_rep_is_valid(self):
        x = conjugation_crossed_module(symmetric_group(3))
        assert check_group_graded_rep(regular_graded_rep(x)).passed

    def test_shelf_rep_laws(self):
        assert check_shelf_rep(adjoint_rep(D3)).passed
        assert check_shelf_rep(doubled_rep(D3)).passed

    def test_shelf_grading_violation_detected(self):
        rep = doubled_rep(D3)
        bad_gr = ShelfRep(rep.x, rep.action, SetFn(6, 3, [0] * 6), rep.twist)
        assert not check_shelf_rep(bad_gr).find("shrep.grading").passed

    def test_shelf_twist_violation_detected(self):
        rep = doubled_rep(D3)
        bad_twist = ShelfRep(rep.x, rep.action, rep.gr, SetFn(6, 6, [1, 0, 2, 3, 4, 5]))
        report = check_shelf_rep(bad_twist)
        assert report.find("shrep.twist-grading").passed
        assert not report.find("shrep.twist-action").passed


class TestAsGYD:
    def test_bantay_module_passes(self):
        x, rep = bantay_z2()
        system = build_system("group_crmod", x, field=QQ)
        mod = as_gyd(rep, system)
        assert check_gyd(mod).passed
        assert mod.delta == Matrix.from_columns(
            QQ, 4, 2, [[(0 * 2 + 0, QQ.one)], [(1 * 2 + 1, QQ.one)]]
        )

    def test_untwisted_shelf_coaction_is_diagonal(self):
        system = build_system("shelf_crmod", adjoint_crossed_module(D3))
        mod = as_gyd(adjoint_rep(D3), system)
        assert mod.delta == SetFn(3, 9, [r * 3 + r for r in range(3)])

    def test_leibniz_reps_pass(self):
        x = identity_crossed_module(L2)
        system = build_system("leibniz_crmod", x)
        flat = LeibnizRep(x, 2, (L2.ad(0), L2.ad(1)), Matrix.zeros(QQ, 4, 2))
        assert check_gyd(as_gyd(flat, system)).passed
        assert check_gyd(as_gyd(kplus_rep(x), system)).passed

    def test_invalid_rep_rejected(self):
        rep = doubled_rep(D3)
        bad = ShelfRep(rep.x, rep.action, rep.gr, SetFn(6, 6, [1, 0, 2, 3, 4, 5]))
        system = build_system("shelf_crmod", rep.x)
        with pytest.raises(ValueError, match="shrep"):
            as_gyd(bad, system)

    def test_unknown_rep_type_rejected(self):
        system = build_system("shelf_crmod", adjoint_crossed_module(D3))
        with pytest.raises(TypeError):
            as_gyd(object(), system)


class TestInducedBraiding:
    def test_shelf_adjoint_braiding_is_self_distributivity(self):
        bundle = shelf_bundle(D3)
        assert gyd_braiding(bundle, 0, 0) == sigma_sd(D3)

    def test_bantay_braiding_matrix(self):
        x, rep = bantay_z2()
        system = build_system("group_crmod", x, field=QQ)
        bundle = RepresentationBundle(
            system, connecting_data("group_crmod", x, field=QQ), [as_gyd(rep, system)]
        )
        # m (x) n -> n (x) m * grade(n): grade-1 vectors act through diag(1, -1)
        expected = Matrix.from_columns(QQ, 4, 4, [
            [(0, QQ.one)], [(2, QQ.one)], [(1, QQ.one)], [(3, QQ.coerce(-1))],
        ])
        assert gyd_braiding(bundle, 0, 0) == expected

    def test_untwisted_shelf_braiding_sweedler_form(self):
        # sigma(m (x) n) = (n, m <. pi(gr(n))) on any untwisted shelf rep
        shelf = cyclic_shelf(4)
        x = adjoint_crossed_module(shelf)
        bundle = shelf_bundle(shelf)
        n = shelf.size
        expected = SetFn(
            n * n, n * n,
            [b * n + shelf.ap(a, x.pi(b)) for a in range(n) for b in range(n)],
        )
        assert gyd_braiding(bundle, 0, 0) == expected

    def test_twisted_shelf_braiding_applies_twist(self):
        rep = doubled_rep(D3)
        bundle = shelf_bundle(D3, [rep])
        # sigma(m (x) n) = (f(n), m <. pi(gr(n)))
        expected = SetFn(
            36, 36,
            [(b ^ 1) * 6 + rep.action.act(a, rep.gr(b)) for a in range(6) for b in range(6)],
        )
        assert gyd_braiding(bundle, 0, 0) == expected

    def test_leibniz_braidings_recover_flip_and_leibniz_form(self):
        bundle = leibniz_bundle()
        assert gyd_braiding(bundle, 0, 0) == flip(2, 2, QQ)
        assert gyd_braiding(bundle, 1, 1) == sigma_lei(UnitalLeibnizAlgebra(L2))

    def test_invalid_bundle_rejected(self):
        x = adjoint_crossed_module(D3)
        system = build_system("shelf_crmod", x)
        rho = SetFn(9, 3, [D3.ap(m, s) for m in range(3) for s in range(3)])
        delta = SetFn(3, 9, [0, 4, 6])  # element 2 regraded to 0
        bad = GYDModule(system, 3, rho, delta)
        bundle = RepresentationBundle(system, connecting_data("shelf_crmod", x), [bad])
        with pytest.raises(ValueError, match="m0.gyd"):
            gyd_braiding(bundle, 0, 0)

    def test_member_index_bounds(self):
        bundle = shelf_bundle(D3)
        with pytest.raises(ValueError, match="index"):
            gyd_braiding(bundle, 0, 1)

    def test_validation_is_cached(self):
        bundle = shelf_bundle(D3)
        assert bundle.validate() is bundle.validate()

    def test_members_must_share_the_system(self):
        x = adjoint_crossed_module(D3)
        coass = build_system("shelf_crmod", x)
        sd = build_system("shelf_crmod", x, variant="sd")
        mod = as_gyd(adjoint_rep(D3), coass)
        with pytest.raises(ValueError, match="share"):
            RepresentationBundle(sd, connecting_data("shelf_crmod", x), [mod])


class TestYBEFamily:
    def test_single_adjoint_member(self):
        report = check_ybe_family(shelf_bundle(D3))
        assert report.passed
        assert len(report.checks) == 1
        assert report.checks[0].check_id == "ybe.0.0.0"

    def test_adjoint_with_twisted_member(self):
        bundle = shelf_bundle(D3, [adjoint_rep(D3), doubled_rep(D3)])
        report = check_ybe_family(bundle)
        assert report.passed
        assert len(report.checks) == 8

    def test_leibniz_bundle_all_triples(self):
        report = check_ybe_family(leibniz_bundle())
        assert report.passed
        assert len(report.checks) == 8

    @given(st.sampled_from([dihedral_shelf(3), cyclic_shelf(3), cyclic_shelf(4),
                            projection_shelf(3), dihedral_shelf(5)]),
           st.booleans())
    def test_valid_shelf_bundles_always_braid(self, shelf, with_double):
        reps = [adjoint_rep(shelf)]
        if with_double:
            reps.append(doubled_rep(shelf))
        bundle = shelf_bundle(shelf, reps)
        assert bundle.validate().passed
        assert check_ybe_family(bundle).passed

    def test_group_graded_bundles_always_braid(self):
        z2, bantay = bantay_z2()
        s3 = conjugation_crossed_module(symmetric_group(3))
        for x, reps in [
            (z2, [bantay, regular_graded_rep(z2)]),
            (s3, [regular_graded_rep(s3)]),
        ]:
            system = build_system("group_crmod", x, field=QQ)
            conn = connecting_data("group_crmod", x, field=QQ)
            members = [as_gyd(r, system) for r in reps]
            bundle = RepresentationBundle(system, conn, members)
            assert bundle.validate().passed
            assert check_ybe_family(bundle).passed


class TestUnitActionRelation:
    def test_unit_block_commutes_with_all_action_blocks(self):
        # (m * 1) * g = (m * g) * 1 for every module passing the checks
        x = identity_crossed_module(L2)
        system = build_system("leibniz_crmod", x)
        mod = as_gyd(kplus_rep(x), system)
        gp = 3
        m = mod.carrier
        blocks = [
            Matrix.from_columns(QQ, m, m, [mod.rho.column(i * gp + j) for i in range(m)])
            for j in range(gp)
        ]
        unit = blocks[gp - 1]
        assert unit == Matrix.identity(QQ, m)
        for block in blocks:
            assert unit @ block == block @ unit


class TestBraidOperator:
    def test_empty_word_is_identity(self):
        assert braid_operator(sigma_sd(D3), 3, []) == SetFn.identity(27)

    def test_reidemeister_three(self):
        sigma = sigma_sd(D3)
        assert braid_operator(sigma, 3, [1, 2, 1]) == braid_operator(sigma, 3, [2, 1, 2])

    def test_far_commutativity(self):
        sigma = sigma_sd(D3)
        assert braid_operator(sigma, 4, [1, 3]) == braid_operator(sigma, 4, [3, 1])

    def test_hand_iterated_word(self):
        op = braid_operator(sigma_sd(D3), 2, [1, 1])
        assert divmod(op(0 * 3 + 1), 3) == (2, 0)

    def test_negative_letters_cancel(self):
        sigma = sigma_sd(D3)
        assert braid_operator(sigma, 2, [1, -1]) == SetFn.identity(9)
        linear = flip(3, 3, GF(7))
        assert braid_operator(linear, 3, [2, -2]) == Matrix.identity(GF(7), 27)

    def test_linear_word_matches_reidemeister(self):
        sigma = sigma_lei(UnitalLeibnizAlgebra(L2))
        assert braid_operator(sigma, 3, [1, 2, 1]) == braid_operator(sigma, 3, [2, 1, 2])

    def test_non_invertible_braiding_rejects_negative_letters(self):
        H = group_algebra(cyclic_group(2), QQ)
        sigma = sigma_ass(H.mu, H.nu)
        assert braid_operator(sigma, 2, [1]) == sigma
        with pytest.raises(ValueError, match="invertible"):
            braid_operator(sigma, 2, [-1])

    def test_letter_and_strand_guards(self):
        sigma = sigma_sd(D3)
        with pytest.raises(ValueError, match="out of range"):
            braid_operator(sigma, 3, [3])
        with pytest.raises(ValueError, match="two strands"):
            braid_operator(sigma, 1, [])
        with pytest.raises(ValueError, match="square"):
            braid_operator(SetFn(6, 6, range(6)), 2, [])
