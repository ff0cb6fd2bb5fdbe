import itertools

import numpy as np
import pytest

from semilink.digraph import Digraph
from semilink.flows import (FlowInfeasible, is_k_connected, local_cut,
                            max_disjoint_paths, min_weight_disjoint_paths,
                            vertex_connectivity)
from semilink.generators import (random_tournament, rotational_tournament,
                                 transitive_tournament)
from semilink.oracle import max_disjoint_ST_paths_bruteforce

from conftest import complete_digraph, random_digraph


def family_path_exists(d, sources, sinks, removed):
    """A source-to-sink path avoiding ``removed``, interior off terminals."""
    sources = [s for s in sources if s not in removed]
    sinks = set(sinks)
    seen = set(sources)
    stack = list(sources)
    while stack:
        u = stack.pop()
        if u in sinks and u not in removed:
            return True
        for w in np.flatnonzero(d.adjacency[u]):
            w = int(w)
            if w in removed or w in seen:
                continue
            if w in sinks:
                return True
            if w in sources:
                continue
            seen.add(w)
            stack.append(w)
    return False


def brute_min_separator(d, sources, sinks):
    """Smallest vertex set meeting every family path (may include terminals)."""
    assert not set(sources) & set(sinks)
    for size in range(d.n + 1):
        for cand in itertools.combinations(range(d.n), size):
            if not family_path_exists(d, sources, sinks, set(cand)):
                return size
    return d.n


class TestMaxDisjointPaths:
    def test_complete_digraph_single_arcs(self):
        d = complete_digraph(6)
        system, cert = max_disjoint_paths(d, [0, 1], [4, 5], cap=2)
        assert len(system) == 2 and cert is None
        assert all(p.length == 1 for p in system)

    def test_bottleneck(self):
        d = Digraph.from_arcs(5, [(0, 2), (1, 2), (2, 3), (2, 4)])
        system, cert = max_disjoint_paths(d, [0, 1], [3, 4])
        assert len(system) == 1
        assert cert is not None and cert.separator == frozenset({2})

    def test_matches_bruteforce_on_random_tournaments(self):
        for seed in range(15):
            d = random_tournament(12, seed=seed)
            rng = np.random.Generator(np.random.PCG64(seed))
            verts = rng.permutation(12)
            S = [int(v) for v in verts[:3]]
            T = [int(v) for v in verts[3:6]]
            system, _ = max_disjoint_paths(d, S, T)
            assert len(system) == max_disjoint_ST_paths_bruteforce(d, S, T)

    def test_paths_touch_terminals_only_at_endpoints(self):
        for seed in range(10):
            d = random_digraph(10, 0.5, seed=100 + seed)
            S, T = [0, 1, 2], [7, 8, 9]
            system, _ = max_disjoint_paths(d, S, T)
            for p in system:
                assert p.first in S and p.last in T
                assert not (set(p.interior()) & (set(S) | set(T)))

    def test_overlap_becomes_trivial_paths(self):
        d = complete_digraph(5)
        system, _ = max_disjoint_paths(d, [0, 1], [1, 2], cap=2)
        assert any(p.vertices == (1,) for p in system)
        assert len(system) == 2

    def test_empty_terminals_rejected(self):
        with pytest.raises(ValueError):
            max_disjoint_paths(complete_digraph(4), [], [1])

    def test_duality_against_brute_separator(self):
        cases = []
        for seed in range(14):
            cases.append((random_digraph(8, 0.35, seed=seed), [0, 1], [6, 7]))
        cases.append((transitive_tournament(7), [5, 6], [0, 1]))
        cases.append((complete_digraph(5), [0], [4]))
        for d, S, T in cases:
            system, cert = max_disjoint_paths(d, S, T, cap=d.n)
            assert cert is not None
            assert len(cert.separator) == len(system)
            assert len(system) == brute_min_separator(d, S, T)
            # removing the separator really cuts every family path
            assert not family_path_exists(d, S, T, set(cert.separator))

    def test_cut_sides_partition(self):
        d = random_digraph(9, 0.3, seed=77)
        system, cert = max_disjoint_paths(d, [0, 1], [7, 8], cap=9)
        assert cert is not None
        pieces = cert.separator | cert.source_side | cert.sink_side
        assert pieces == frozenset(range(9))
        assert not (cert.separator & cert.source_side)
        assert not (cert.source_side & cert.sink_side)


class TestMinWeightDisjointPaths:
    def test_complete_digraph_all_arcs(self):
        d = complete_digraph(8)
        system = min_weight_disjoint_paths(d, [0, 1, 2], [5, 6, 7], count=3)
        assert system.total_vertices() == 6

    def test_layered_instance_forces_two_arc_path(self):
        # sources 0,1; sinks 5,6; 0->5 direct, 1 must route through 3.
        d = Digraph.from_arcs(7, [(0, 5), (1, 3), (3, 6), (2, 4)])
        system = min_weight_disjoint_paths(d, [0, 1], [5, 6], count=2)
        assert system.total_vertices() == 5  # 2*count + 1, frozen by enumeration
        assert enumerate_min_total(d, [0, 1], [5, 6], count=2) == 5

    def test_infeasible_raises_with_cut(self):
        d = Digraph.from_arcs(5, [(0, 2), (1, 2), (2, 3), (2, 4)])
        with pytest.raises(FlowInfeasible) as exc:
            min_weight_disjoint_paths(d, [0, 1], [3, 4], count=2)
        assert exc.value.achieved == 1
        assert exc.value.cut.separator == frozenset({2})

    def test_never_heavier_than_plain_max_flow(self):
        for seed in range(12):
            d = random_tournament(11, seed=200 + seed)
            S, T = [0, 1], [9, 10]
            plain, cert = max_disjoint_paths(d, S, T, cap=2)
            if len(plain) < 2:
                continue
            optimal = min_weight_disjoint_paths(d, S, T, count=2)
            assert optimal.total_vertices() <= plain.total_vertices()
            assert optimal.total_vertices() == \
                enumerate_min_total(d, S, T, count=2)

    def test_minimality_of_each_path(self):
        for seed in range(8):
            d = random_tournament(12, seed=300 + seed)
            system = min_weight_disjoint_paths(d, [0, 1, 2], [9, 10, 11], count=3)
            for p in system:
                for i in range(len(p.vertices)):
                    for j in range(i + 2, len(p.vertices)):
                        assert not d.has_arc(p.vertices[i], p.vertices[j])


def enumerate_min_total(d, sources, sinks, count):
    """Exhaustive minimum of the total vertex count over count-path systems."""
    best = [None]

    def all_paths_from(s, used):
        out = []
        stack = [(s,)]
        while stack:
            p = stack.pop()
            for w in np.flatnonzero(d.adjacency[p[-1]]):
                w = int(w)
                if w in used or w in p or w in sources:
                    continue
                if w in sinks:
                    out.append(p + (w,))
                else:
                    stack.append(p + (w,))
        return out

    def rec(srcs, used, chosen):
        if chosen == count:
            total = len(used)
            if best[0] is None or total < best[0]:
                best[0] = total
            return
        if not srcs:
            return
        s, rest = srcs[0], srcs[1:]
        for p in all_paths_from(s, used):
            rec(rest, used | set(p), chosen + 1)
        rec(rest, used, chosen)

    rec(list(sources), frozenset(), 0)
    return best[0]


class TestLocalCut:
    def test_no_path_means_zero(self):
        tt5 = transitive_tournament(5)
        assert local_cut(tt5, 4, 0).value == 0

    def test_complete_digraph(self):
        d = complete_digraph(5)
        res = local_cut(d, 0, 4)
        assert res.value == 4 and res.direct_arc

    def test_circulant_pairs_meet_floor(self):
        d = rotational_tournament(9)
        rng = np.random.Generator(np.random.PCG64(1))
        for _ in range(10):
            u, v = map(int, rng.choice(9, size=2, replace=False))
            assert local_cut(d, u, v).value >= 3

    def test_identical_vertices_rejected(self):
        with pytest.raises(ValueError):
            local_cut(complete_digraph(3), 1, 1)

    def test_paths_are_internally_disjoint_and_valid(self):
        d = random_tournament(10, seed=9)
        res = local_cut(d, 0, 5)
        interiors = [set(p.vertices[1:-1]) for p in res.paths]
        for a, b in itertools.combinations(range(len(interiors)), 2):
            assert not interiors[a] & interiors[b]
        assert len(res.paths) == res.value

    def test_separator_size_equals_value(self):
        for seed in range(10):
            d = random_digraph(9, 0.4, seed=400 + seed)
            res = local_cut(d, 0, 8)
            if res.separator is not None and not res.direct_arc:
                assert len(res.separator) == res.value


def brute_vertex_connectivity(d):
    n = d.n
    for size in range(n - 1):
        for cand in itertools.combinations(range(n), size):
            rem = [v for v in range(n) if v not in cand]
            if len(rem) < 2:
                continue
            sub = d.induced(rem).adjacency
            m = len(rem)
            reach = np.eye(m, dtype=bool) | sub
            for _ in range(m):
                reach = reach | (reach.astype(np.int8) @ reach.astype(np.int8) > 0)
            if not reach.all():
                return size
    return n - 1


class TestVertexConnectivity:
    def test_transitive_is_disconnected(self):
        assert vertex_connectivity(transitive_tournament(6)) == 0

    def test_complete_biorientation(self):
        assert vertex_connectivity(complete_digraph(5)) == 4

    def test_against_bruteforce(self):
        for seed in range(6):
            d = random_tournament(7, seed=500 + seed)
            assert vertex_connectivity(d) == brute_vertex_connectivity(d)
        for seed in range(4):
            d = random_digraph(6, 0.5, seed=600 + seed)
            assert vertex_connectivity(d) == brute_vertex_connectivity(d)

    def test_bounded_by_semidegree(self):
        for seed in range(5):
            d = random_tournament(11, seed=seed)
            assert vertex_connectivity(d) <= d.min_semidegree()

    def test_too_small_rejected(self):
        with pytest.raises(ValueError):
            vertex_connectivity(Digraph.from_arcs(1, []))


class TestIsKConnected:
    def test_circulant_fifteen_is_five_connected(self):
        assert is_k_connected(rotational_tournament(15), 5)

    def test_transitive_is_not_one_connected(self):
        assert not is_k_connected(transitive_tournament(5), 1)

    def test_order_requirement(self):
        assert not is_k_connected(complete_digraph(4), 4)
        assert is_k_connected(complete_digraph(5), 4)

    def test_nonpositive_k(self):
        assert is_k_connected(complete_digraph(2), 0)

    def test_agrees_with_exact_value(self):
        for seed in range(5):
            d = random_tournament(9, seed=700 + seed)
            kappa = vertex_connectivity(d)
            for k in range(0, kappa + 2):
                assert is_k_connected(d, k) == (d.n >= k + 1 and kappa >= k)


from hypothesis import given, settings
from hypothesis import strategies as st


@given(st.integers(0, 10 ** 6), st.integers(5, 8))
@settings(max_examples=60, deadline=None)
def test_menger_equality_property(seed, n):
    from semilink.oracle import max_disjoint_ST_paths_bruteforce
    d = random_digraph(n, 0.45, seed)
    system, cert = max_disjoint_paths(d, [0, 1], [n - 2, n - 1], cap=n)
    assert len(system) == max_disjoint_ST_paths_bruteforce(
        d, [0, 1], [n - 2, n - 1])
    assert cert is not None and len(cert.separator) == len(system)
