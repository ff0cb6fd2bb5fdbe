import numpy as np
import pytest

from semilink.digraph import is_semicomplete, is_tournament
from semilink.flows import vertex_connectivity
from semilink.generators import (GenSpec, bipartite_tournament,
                                 near_regular_tournament, random_semicomplete,
                                 random_tournament, rotational_tournament,
                                 transitive_tournament)


class TestTransitive:
    def test_identity_order(self):
        d = transitive_tournament([0, 1, 2])
        assert sorted(d.arcs()) == [(0, 1), (0, 2), (1, 2)]

    def test_reversed_order(self):
        d = transitive_tournament([2, 1, 0])
        assert sorted(d.arcs()) == [(1, 0), (2, 0), (2, 1)]

    def test_single_vertex(self):
        assert transitive_tournament(1).arc_count == 0

    def test_duplicate_ids_rejected(self):
        with pytest.raises(ValueError):
            transitive_tournament([0, 0, 1])

    def test_acyclic(self):
        d = transitive_tournament(7)
        # arcs strictly increase along the order, so no cycle can close
        assert all(u < v for u, v in d.arcs())


class TestRotational:
    def test_three_is_directed_cycle(self):
        assert sorted(rotational_tournament(3).arcs()) == [(0, 1), (1, 2), (2, 0)]

    def test_regularity(self):
        for n in (5, 9, 15):
            d = rotational_tournament(n)
            assert is_tournament(d)
            degs = d.out_degrees()
            assert (degs == (n - 1) // 2).all()
            assert (d.in_degrees() == (n - 1) // 2).all()

    def test_connectivity_floor_and_exact_value(self):
        d = rotational_tournament(9)
        kappa = vertex_connectivity(d)
        assert kappa >= 3  # n // 3 floor for the regular family
        assert kappa == 4  # frozen from the exact computation

    def test_bad_order_rejected(self):
        with pytest.raises(ValueError):
            rotational_tournament(8)
        with pytest.raises(ValueError):
            rotational_tournament(1)


class TestRandomFamilies:
    def test_same_seed_is_identical(self):
        assert random_tournament(20, seed=7) == random_tournament(20, seed=7)
        assert random_semicomplete(15, 0.4, seed=3) == \
            random_semicomplete(15, 0.4, seed=3)

    def test_different_seed_differs(self):
        assert random_tournament(20, seed=7) != random_tournament(20, seed=8)

    def test_zero_bidirection_gives_tournament(self):
        assert is_tournament(random_semicomplete(12, 0.0, seed=1))

    def test_full_bidirection_gives_complete(self):
        d = random_semicomplete(8, 1.0, seed=1)
        expected = ~np.eye(8, dtype=bool)
        assert (d.adjacency == expected).all()

    def test_semicompleteness(self):
        for seed in range(5):
            assert is_semicomplete(random_semicomplete(25, 0.3, seed=seed))

    def test_bad_probability_rejected(self):
        with pytest.raises(ValueError):
            random_semicomplete(5, 1.5, seed=0)


class TestBipartite:
    def test_single_pair(self):
        d = bipartite_tournament(1, 1, seed=0)
        assert d.arc_count == 1

    def test_two_by_two(self):
        d = bipartite_tournament(2, 2, seed=1)
        assert d.arc_count == 4
        assert not d.adjacency[:2, :2].any()
        assert not d.adjacency[2:, 2:].any()

    def test_not_semicomplete(self):
        assert not is_semicomplete(bipartite_tournament(2, 2, seed=2))

    def test_sizes_validated(self):
        with pytest.raises(ValueError):
            bipartite_tournament(0, 3, seed=0)


class TestNearRegular:
    def test_odd_order_is_regular(self):
        d = near_regular_tournament(31, seed=4)
        assert is_tournament(d)
        assert (d.out_degrees() == 15).all()

    def test_even_order_degrees_differ_by_one(self):
        d = near_regular_tournament(30, seed=4)
        assert is_tournament(d)
        degs = d.out_degrees()
        assert degs.min() == 14 and degs.max() == 15

    def test_deterministic(self):
        assert near_regular_tournament(21, seed=5) == \
            near_regular_tournament(21, seed=5)

    def test_shuffle_changes_structure(self):
        from semilink.generators import rotational_tournament
        assert near_regular_tournament(21, seed=5) != rotational_tournament(21)


class TestGenSpec:
    def test_dispatch(self):
        assert GenSpec("rotational", n=9).build() == rotational_tournament(9)
        assert GenSpec("transitive", n=4).build() == transitive_tournament(4)
        d = GenSpec("bipartite_tournament", u_size=2, w_size=3, seed=1).build()
        assert d.n == 5

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="unknown kind"):
            GenSpec("mystery", n=3).build()
