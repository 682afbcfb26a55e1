"""Shelf and rack law checkers, stock constructions, morphisms, automorphisms."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ybx.shelves import (
    PointedShelf,
    Rack,
    Shelf,
    ShelfAction,
    automorphism_group,
    check_rack,
    check_shelf,
    check_shelf_action,
    check_shelf_morphism,
    constant_shelf,
    cyclic_shelf,
    dihedral_shelf,
    projection_shelf,
    sd_pair_map,
    sigma_sd,
    standard_shelf,
)

D3 = [[0, 2, 1], [2, 1, 0], [1, 0, 2]]


class TestCheckShelf:
    def test_projection_passes(self):
        assert check_shelf([[0, 0], [1, 1]]).passed

    def test_dihedral_d3_passes(self):
        assert check_shelf(D3).passed
        assert dihedral_shelf(3).table == tuple(tuple(r) for r in D3)

    def test_swap_table_fails_with_witness(self):
        report = check_shelf([[0, 1], [1, 0]])
        assert not report.passed
        assert report.first_failure().witness == (0, 0, 1)
        # hand evaluation: (0<|0)<|1 = 1 but (0<|1)<|(0<|1) = 0
        assert (0, 0, 1) in report.first_failure().witnesses

    def test_malformed_table_rejected(self):
        with pytest.raises(ValueError):
            check_shelf([[0, 1], [0]])
        with pytest.raises(ValueError):
            check_shelf([[0, 7], [0, 1]])

    def test_shelf_ctor_enforces_law(self):
        with pytest.raises(ValueError):
            Shelf([[0, 1], [1, 0]])


class TestCheckRack:
    def test_d3_is_a_rack_of_involutions(self):
        assert check_rack(D3).passed
        rack = Rack.from_shelf(Shelf(D3))
        # each right translation is an involution, so <|~ coincides with <|
        assert rack.inverse_translations == rack.shelf.table
        assert rack.unap(rack.shelf.ap(0, 2), 2) == 0

    def test_constant_map_with_collision_fails(self):
        shelf = constant_shelf([0, 0])
        report = check_rack(shelf)
        assert not report.passed
        assert report.first_failure().witness == (0,)

    def test_size_one_passes(self):
        assert check_rack([[0]]).passed


class TestStandardShelves:
    def test_cyclic_mod_3_table(self):
        assert cyclic_shelf(3).table == ((1, 1, 1), (2, 2, 2), (0, 0, 0))
        assert check_rack(cyclic_shelf(3).table).passed

    def test_conjugation_of_z2_is_projection(self):
        z2 = [[0, 1], [1, 0]]
        assert standard_shelf("conjugation", z2) == projection_shelf(2)

    def test_conjugation_of_s3_is_a_rack(self):
        from ybx.groups import symmetric_group

        shelf = standard_shelf("conjugation", symmetric_group(3))
        assert shelf.size == 6
        assert check_shelf(shelf.table).passed
        assert check_rack(shelf.table).passed

    def test_conjugation_racks_for_small_groups(self):
        from ybx.groups import cyclic_group, symmetric_group

        groups = [cyclic_group(n) for n in range(1, 9)] + [symmetric_group(3)]
        for g in groups:
            assert check_rack(standard_shelf("conjugation", g).table).passed

    @given(st.lists(st.integers(0, 3), min_size=4, max_size=4))
    @settings(max_examples=30, deadline=None)
    def test_constant_map_is_always_a_shelf(self, f):
        assert check_shelf(constant_shelf(f).table).passed

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            standard_shelf("dodecahedral", 3)


class TestMorphismsAndActions:
    def test_identity_on_d3_is_a_morphism(self):
        shelf = Shelf(D3)
        assert check_shelf_morphism(list(range(3)), shelf, shelf).passed

    def test_adjoint_action_passes(self):
        shelf = Shelf(D3)
        assert check_shelf_action(ShelfAction(shelf, shelf.table)).passed

    def test_d3_to_cyclic_identity_map_fails(self):
        report = check_shelf_morphism([0, 1, 2], Shelf(D3), cyclic_shelf(3))
        assert not report.passed
        # f(0<|0) = 0 but f(0) <| f(0) = 1
        assert report.first_failure().witness == (0, 0)

    def test_size_mismatch_rejected(self):
        with pytest.raises(ValueError):
            check_shelf_morphism([0, 1], Shelf(D3), Shelf(D3))


class TestAutomorphismGroup:
    def test_projection_shelf_has_full_symmetric_group(self):
        group, autos = automorphism_group(projection_shelf(3))
        assert group.size == 6
        assert len(autos) == 6

    def test_d3_automorphisms_are_the_affine_maps(self):
        group, autos = automorphism_group(Shelf(D3))
        assert group.size == 6
        affine = {
            tuple((s * x + c) % 3 for x in range(3)) for s in (1, 2) for c in range(3)
        }
        assert {a.table for a in autos} == affine
        shelf = Shelf(D3)
        for a in autos:
            assert check_shelf_morphism(a, shelf, shelf).passed

    def test_trivial_rack(self):
        group, autos = automorphism_group(Shelf([[0]]))
        assert group.size == 1

    def test_size_guard(self):
        with pytest.raises(ValueError):
            automorphism_group(projection_shelf(9))


class TestSigmaSD:
    def test_size_one_is_identity(self):
        assert sigma_sd(Shelf([[0]])).table == (0,)

    def test_d3_hand_value(self):
        sigma = sigma_sd(Shelf(D3))
        # (1,2) -> (2, 1<|2) = (2, 0)
        assert sigma(1 * 3 + 2) == 2 * 3 + 0

    def test_projection_gives_flip(self):
        from ybx.exact import flip

        assert sigma_sd(projection_shelf(4)) == flip(4, 4)

    def test_raw_pair_map_matches_on_shelves(self):
        assert sd_pair_map(D3) == sigma_sd(Shelf(D3))


class TestPointedShelf:
    def test_projection_is_pointed_everywhere(self):
        PointedShelf(projection_shelf(3), 1)

    def test_cyclic_has_no_point(self):
        with pytest.raises(ValueError):
            PointedShelf(cyclic_shelf(3), 0)
