import numpy as np
import pytest

from semilink.certificates import verify_linkage_certificate
from semilink.digraph import Digraph
from semilink.generators import random_tournament, rotational_tournament
from semilink.oracle import (OracleBudget, exists_disjoint_linkage,
                             max_disjoint_ST_paths_bruteforce)

from conftest import complete_digraph, random_digraph


class TestExistsDisjointLinkage:
    def test_complete_digraph_direct_arcs(self):
        k = 3
        d = complete_digraph(2 * k)
        pairs = [(2 * i, 2 * i + 1) for i in range(k)]
        answer = exists_disjoint_linkage(d, pairs)
        assert answer.verdict == "yes"
        assert answer.paths == tuple((2 * i, 2 * i + 1) for i in range(k))

    def test_four_cycle_cross_pairs(self):
        d = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        answer = exists_disjoint_linkage(d, [(0, 2), (2, 0)])
        assert answer.verdict == "no"

    def test_certificates_always_verify(self):
        rng = np.random.Generator(np.random.PCG64(12)
                                  )
        for _ in range(25):
            d = random_tournament(10, seed=int(rng.integers(0, 10 ** 6)))
            picks = rng.choice(10, size=4, replace=False)
            pairs = [(int(picks[0]), int(picks[1])),
                     (int(picks[2]), int(picks[3]))]
            answer = exists_disjoint_linkage(d, pairs)
            if answer.verdict == "yes":
                verify_linkage_certificate(d, pairs, answer.paths)

    def test_circulant_fifteen_two_linkage(self):
        d = rotational_tournament(15)
        rng = np.random.Generator(np.random.PCG64(15))
        for _ in range(8):
            picks = rng.choice(15, size=4, replace=False)
            pairs = [(int(picks[0]), int(picks[1])),
                     (int(picks[2]), int(picks[3]))]
            assert exists_disjoint_linkage(d, pairs).verdict == "yes"

    def test_budget_exhaustion_is_unknown(self):
        d = random_tournament(14, seed=3)
        answer = exists_disjoint_linkage(d, [(0, 1), (2, 3)],
                                         OracleBudget(node_limit=3))
        assert answer.verdict == "unknown"
        assert answer.paths is None

    def test_no_is_stable_under_relabeling(self):
        d = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        base = exists_disjoint_linkage(d, [(0, 2), (1, 3)])
        # rotate labels by one
        perm = [1, 2, 3, 0]
        arcs = [(perm[u], perm[v]) for u, v in d.arcs()]
        d2 = Digraph.from_arcs(4, arcs)
        pairs2 = [(perm[0], perm[2]), (perm[1], perm[3])]
        assert exists_disjoint_linkage(d2, pairs2).verdict == base.verdict

    def test_overlapping_pairs_are_no(self):
        d = complete_digraph(5)
        assert exists_disjoint_linkage(d, [(0, 1), (1, 2)]).verdict == "no"

    def test_degenerate_pair_rejected(self):
        with pytest.raises(ValueError):
            exists_disjoint_linkage(complete_digraph(4), [(1, 1)])

    def test_answer_is_not_a_boolean(self):
        answer = exists_disjoint_linkage(complete_digraph(4), [(0, 1)])
        with pytest.raises(TypeError):
            bool(answer)

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            OracleBudget(node_limit=0)


class TestBruteforceCounts:
    def test_bottleneck(self):
        d = Digraph.from_arcs(5, [(0, 2), (1, 2), (2, 3), (2, 4)])
        assert max_disjoint_ST_paths_bruteforce(d, [0, 1], [3, 4]) == 1

    def test_complete_digraph(self):
        d = complete_digraph(9)
        assert max_disjoint_ST_paths_bruteforce(d, [0, 1, 2], [6, 7, 8]) == 3

    def test_overlap_counts_as_trivial(self):
        d = Digraph.from_arcs(3, [])
        assert max_disjoint_ST_paths_bruteforce(d, [0, 1], [1, 2]) == 1

    def test_instance_size_guard(self):
        with pytest.raises(ValueError, match="too large"):
            max_disjoint_ST_paths_bruteforce(complete_digraph(13), [0], [1])

    def test_no_route(self):
        d = Digraph.from_arcs(4, [(3, 0)])
        assert max_disjoint_ST_paths_bruteforce(d, [0], [3]) == 0

    def test_agrees_with_itself_under_source_order(self):
        for seed in range(10):
            d = random_digraph(9, 0.5, seed=900 + seed)
            a = max_disjoint_ST_paths_bruteforce(d, [0, 1, 2], [6, 7, 8])
            b = max_disjoint_ST_paths_bruteforce(d, [2, 1, 0], [8, 6, 7])
            assert a == b
