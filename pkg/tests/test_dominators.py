import numpy as np
import pytest

from semilink.digraph import Digraph
from semilink.dominators import (count_two_paths, find_nearly_in_dominating,
                                 find_nearly_out_dominating, is_c_in_good,
                                 is_c_out_good, is_gamma_in_dominator,
                                 is_gamma_out_dominator,
                                 is_nearly_in_dominating,
                                 is_nearly_in_dominating_set,
                                 is_nearly_out_dominating,
                                 nearly_out_dominating_profile)
from semilink.generators import (random_semicomplete, random_tournament,
                                 rotational_tournament, transitive_tournament)


def three_cycle():
    return Digraph.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def brute_two_paths(d, src, dst, pool=None):
    pool = range(d.n) if pool is None else pool
    return sum(1 for m in pool
               if m not in (src, dst) and d.has_arc(src, m) and d.has_arc(m, dst))


class TestCountTwoPaths:
    def test_cycle(self):
        assert count_two_paths(three_cycle(), 0, 2) == 1

    def test_transitive_source_to_sink(self):
        assert count_two_paths(transitive_tournament(5), 0, 4) == 3

    def test_matches_bruteforce_everywhere(self):
        d = random_tournament(10, seed=1)
        for u in range(10):
            for v in range(10):
                if u != v:
                    assert count_two_paths(d, u, v) == brute_two_paths(d, u, v)

    def test_pool_restriction(self):
        d = transitive_tournament(6)
        assert count_two_paths(d, 0, 5, within=[0, 2, 5]) == 1
        assert count_two_paths(d, 0, 5, within=[0, 2, 3, 5]) == 2

    def test_equal_endpoints_rejected(self):
        with pytest.raises(ValueError):
            count_two_paths(three_cycle(), 1, 1)


class TestGoodness:
    def test_arc_case_good_for_all_c(self):
        d = transitive_tournament(4)
        for c in (1, 5, 50):
            assert is_c_out_good(d, 0, 3, c)
            assert is_c_in_good(d, 3, 0, c)

    def test_boundary(self):
        d = transitive_tournament(5)
        # no arc 4 -> 0; exactly zero 2-paths from 4 to 0
        assert not is_c_out_good(d, 4, 0, 1)
        # 0 -> m -> 4 has 3 middles: c = 4 is one too many without the arc
        flipped = d.with_flipped_arc(0, 4)
        assert is_c_out_good(flipped, 0, 4, 3)
        assert not is_c_out_good(flipped, 0, 4, 4)

    def test_matches_bruteforce(self):
        d = random_tournament(12, seed=3)
        for u in range(12):
            for v in range(12):
                if u == v:
                    continue
                for c in (1, 2, 4):
                    expect = d.has_arc(u, v) or brute_two_paths(d, u, v) >= c
                    assert is_c_out_good(d, u, v, c) == expect
                    expect_in = d.has_arc(v, u) or brute_two_paths(d, v, u) >= c
                    assert is_c_in_good(d, u, v, c) == expect_in


def brute_nearly_out_dominating(d, u, pool=None):
    pool = list(range(d.n)) if pool is None else list(pool)
    others = [v for v in pool if v != u]
    for c in range(1, len(others) + 2):
        bad = sum(1 for v in others
                  if not (d.has_arc(u, v) or brute_two_paths(d, u, v, pool) >= c))
        if bad > 2 * c:
            return False
    return True


class TestNearlyDominating:
    def test_transitive_source(self):
        assert is_nearly_out_dominating(transitive_tournament(8), 0)
        assert is_nearly_in_dominating(transitive_tournament(8), 7)

    def test_cycle_every_vertex(self):
        for v in range(3):
            assert is_nearly_out_dominating(three_cycle(), v)

    def test_matches_independent_reimplementation(self):
        d = random_tournament(40, seed=5)
        for u in range(0, 40, 7):
            assert is_nearly_out_dominating(d, u) == \
                brute_nearly_out_dominating(d, u)
        d2 = random_semicomplete(24, 0.4, seed=6)
        for u in range(0, 24, 5):
            assert is_nearly_out_dominating(d2, u) == \
                brute_nearly_out_dominating(d2, u)

    def test_bad_counts_non_increasing_in_c(self):
        d = random_tournament(30, seed=8)
        prof = nearly_out_dominating_profile(d, 4)
        diffs = np.diff(np.array(prof.bad_counts))
        assert (diffs >= 0).all()  # bad(c) counts scores < c, so it grows

    def test_vacuous_region_shortcut(self):
        d = random_tournament(21, seed=9)
        prof = nearly_out_dominating_profile(d, 0, c_max=21)
        assert prof.vacuous_from <= 11
        # beyond the vacuity threshold the condition always holds
        for c in range(prof.vacuous_from, 22):
            assert prof.bad_counts[c - 1] <= 2 * c


class TestFinders:
    def test_transitive_extremes(self):
        assert find_nearly_out_dominating(transitive_tournament(9)) == 0
        assert find_nearly_in_dominating(transitive_tournament(9)) == 8

    def test_regular_tie_break(self):
        assert find_nearly_out_dominating(rotational_tournament(9)) == 0

    def test_found_vertex_always_passes_with_strict_bound(self):
        for i in range(40):
            n = 6 + (i * 5) % 55
            d = random_semicomplete(n, (i % 8) / 8.0, seed=100 + i)
            u = find_nearly_out_dominating(d)
            prof = nearly_out_dominating_profile(d, u)
            assert prof.is_nearly_dominating()
            assert prof.satisfies_strict_bound()

    def test_reversal_duality(self):
        for seed in range(10):
            d = random_semicomplete(18, 0.3, seed=seed)
            assert find_nearly_in_dominating(d) == \
                find_nearly_out_dominating(d.reverse())

    def test_pool_restriction(self):
        d = transitive_tournament(10)
        assert find_nearly_out_dominating(d, within=[4, 5, 6]) == 4

    def test_non_semicomplete_rejected(self):
        with pytest.raises(ValueError):
            find_nearly_out_dominating(Digraph.from_arcs(3, [(0, 1)]))


class TestGammaDominators:
    def test_full_out_neighbourhood(self):
        d = transitive_tournament(5)
        assert is_gamma_out_dominator(d, 0, [1, 2, 3], 3)
        assert not is_gamma_out_dominator(d, 2, [3, 4], 3)
        assert is_gamma_in_dominator(d, 4, [0, 1], 2)

    def test_gamma_zero_always_true(self):
        d = transitive_tournament(4)
        assert is_gamma_out_dominator(d, 3, [0, 1], 0)

    def test_membership_rejected(self):
        with pytest.raises(ValueError):
            is_gamma_out_dominator(transitive_tournament(4), 1, [1, 2], 1)

    def test_matches_direct_count(self):
        d = random_tournament(15, seed=11)
        group = [3, 5, 8, 11, 14]
        for v in (0, 1, 2):
            count = int(d.adjacency[v][group].sum())
            for g in range(0, 6):
                assert is_gamma_out_dominator(d, v, group, g) == (count >= g)


class TestNearlyInDominatingSet:
    def test_whole_vertex_set_is_vacuous(self):
        d = transitive_tournament(6)
        assert is_nearly_in_dominating_set(d, range(6))

    def test_sink_heavy_set(self):
        d = transitive_tournament(8)
        # the sink is in-dominated by everyone, directly
        assert is_nearly_in_dominating_set(d, [7])
        # the source has no in-arcs at all: every c fails once 2c < n-1
        assert not is_nearly_in_dominating_set(d, [0])

    def test_iterated_picks_form_a_dominating_set(self):
        for seed in range(6):
            d = random_semicomplete(30, 0.2, seed=40 + seed)
            members = []
            remaining = set(range(30))
            for _ in range(6):
                u = find_nearly_in_dominating(d, within=sorted(remaining))
                members.append(u)
                remaining.discard(u)
            assert is_nearly_in_dominating_set(d, members)

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            is_nearly_in_dominating_set(transitive_tournament(4), [])
