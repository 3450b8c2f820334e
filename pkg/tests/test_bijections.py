from __future__ import annotations

import pytest

from chordshapes import (
    BijectionDomainError,
    Diagram,
    ShapeClass,
    as_shape,
    canonical_code,
    classify_loops,
    disjoint_union,
    eta,
    eta_inv,
    is_connected,
    shape_class,
    theta,
    theta_inv,
)

from test_shapes import SHAPE_3B, SHAPE_4A, SHAPE_4B, SHAPE_5A

Q3 = Diagram((3, 3), frozenset({(1, 3), (4, 6), (2, 5)}), planted=True)
Q4 = Diagram((4, 4), frozenset({(1, 4), (5, 8), (2, 6), (3, 7)}), planted=True)


class TestTheta:
    def test_four_arc_a_to_three_arc_b(self):
        out = theta(as_shape(SHAPE_4A))
        assert out.diagram == SHAPE_3B
        assert out.genus == 1

    def test_five_arc_a_to_four_arc_b(self):
        out = theta(as_shape(SHAPE_5A))
        assert out.diagram == SHAPE_4B

    def test_arc_count_drops_by_one(self):
        for d in (SHAPE_4A, SHAPE_5A):
            s = as_shape(d)
            assert theta(s).n_arcs == s.n_arcs - 1

    def test_rejects_b_shapes(self):
        with pytest.raises(BijectionDomainError):
            theta(as_shape(SHAPE_3B))

    def test_inverse_roundtrips(self):
        for d in (SHAPE_4A, SHAPE_5A):
            s = as_shape(d)
            assert theta_inv(theta(s)).diagram == s.diagram
        for d in (SHAPE_3B, SHAPE_4B):
            s = as_shape(d)
            assert theta(theta_inv(s)).diagram == s.diagram

    def test_theta_inv_rejects_a_shapes(self):
        with pytest.raises(BijectionDomainError):
            theta_inv(as_shape(SHAPE_4A))

    def test_rejects_non_shapes(self):
        with pytest.raises(BijectionDomainError):
            theta(Diagram((4,), frozenset({(1, 4), (2, 3)}), planted=True))


class TestEta:
    def test_genus_zero_shape_to_four_arc_a(self):
        out = eta(as_shape(Q3))
        assert out.diagram == SHAPE_4A
        assert out.genus == 1

    def test_four_arc_shape_to_five_arc_a(self):
        out = eta(as_shape(Q4))
        assert out.diagram == SHAPE_5A

    def test_bookkeeping(self):
        for d in (Q3, Q4):
            s = as_shape(d)
            out = eta(s)
            assert out.genus == s.genus + 1
            assert out.n_arcs == s.n_arcs + 1
            assert shape_class(out) is ShapeClass.A

    def test_multiloop_count_increases_by_one(self):
        for d in (Q3, Q4):
            assert classify_loops(eta(as_shape(d)).diagram).multi == (
                classify_loops(d).multi + 1
            )

    def test_inverse_roundtrips(self):
        for d in (Q3, Q4):
            assert eta_inv(eta(as_shape(d))) == d
        for d in (SHAPE_4A, SHAPE_5A):
            assert eta(as_shape(eta_inv(as_shape(d)))).diagram == d

    def test_disconnected_pair_maps_to_genus_two(self):
        pair = disjoint_union(SHAPE_3B, SHAPE_3B)
        s = as_shape(pair)
        assert s.genus == 1  # formal genus of two genus-1 components
        out = eta(s)
        assert out.genus == 2
        assert out.n_arcs == 7
        assert shape_class(out) is ShapeClass.A
        back = eta_inv(out)
        assert back == pair
        assert not is_connected(back)

    def test_connectivity_transfers(self):
        assert is_connected(eta_inv(eta(as_shape(Q3))))
        pair = disjoint_union(SHAPE_3B, SHAPE_4A)
        assert not is_connected(eta_inv(eta(as_shape(pair))))

    def test_rejects_one_backbone_input(self):
        with pytest.raises(BijectionDomainError):
            eta(as_shape(SHAPE_3B))

    def test_eta_inv_rejects_b_shapes(self):
        with pytest.raises(BijectionDomainError):
            eta_inv(as_shape(SHAPE_4B))

    def test_rejects_non_shape_two_backbone(self):
        d = Diagram((3, 3), frozenset({(1, 3), (4, 6), (2, 5)}))
        stacked = Diagram((4, 4), frozenset({(1, 4), (2, 3), (5, 8), (6, 7)}), planted=True)
        assert eta(as_shape(d)) is not None  # valid without explicit planting
        with pytest.raises(BijectionDomainError):
            eta(stacked)


class TestGenusOneExhaustive:
    def test_theta_pairs_up_the_genus_one_family(self, shape_sets):
        shapes = shape_sets(1, 1)
        a_shapes = [s for s in shapes if shape_class(s) is ShapeClass.A]
        b_shapes = [s for s in shapes if shape_class(s) is ShapeClass.B]
        images = {canonical_code(theta(s).diagram) for s in a_shapes}
        assert images == {canonical_code(s.diagram) for s in b_shapes}

    def test_eta_matches_q0_to_a1(self, shape_sets):
        q0 = shape_sets(2, 0)
        a1 = [s for s in shape_sets(1, 1) if shape_class(s) is ShapeClass.A]
        images = {canonical_code(eta(s).diagram) for s in q0}
        assert images == {canonical_code(s.diagram) for s in a1}
