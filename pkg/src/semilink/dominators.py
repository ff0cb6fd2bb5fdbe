"""Goodness predicates and nearly-dominating vertex machinery.

A vertex v is c-out-good for u when u beats v directly or at least c
internally disjoint two-arc paths run from u to v (distinct middle
vertices).  A vertex is nearly out-dominating when, for every c, all but at
most 2c vertices are c-out-good for it; every semicomplete digraph has one,
and a maximum out-degree vertex of any spanning tournament qualifies.

All operations accept an optional ``within`` vertex pool restricting the
computation to the induced subgraph on that pool while keeping original
vertex ids.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .digraph import Digraph


def _pool_mask(d: Digraph, within: Iterable[int] | None) -> np.ndarray:
    if within is None:
        return np.ones(d.n, dtype=bool)
    mask = np.zeros(d.n, dtype=bool)
    ids = np.asarray(list(within), dtype=np.int64)
    if ids.size and (ids.min() < 0 or ids.max() >= d.n):
        raise ValueError("pool vertex out of range")
    mask[ids] = True
    return mask


def count_two_paths(d: Digraph, src: int, dst: int,
                    within: Iterable[int] | None = None) -> int:
    """Number of internally disjoint length-2 paths src -> m -> dst.

    Equals the number of distinct middle vertices, i.e. the size of
    N+(src) & N-(dst) (minus endpoints, which cannot occur).
    """
    if src == dst:
        raise ValueError("endpoints must differ")
    mask = _pool_mask(d, within)
    a = d.adjacency
    return int(np.count_nonzero(a[src] & a[:, dst] & mask))


def is_c_out_good(d: Digraph, u: int, v: int, c: int,
                  within: Iterable[int] | None = None) -> bool:
    """Arc u->v, or at least c internally disjoint 2-paths from u to v."""
    if u == v:
        raise ValueError("vertices must differ")
    if c < 1:
        raise ValueError("c must be >= 1")
    return d.has_arc(u, v) or count_two_paths(d, u, v, within) >= c


def is_c_in_good(d: Digraph, u: int, v: int, c: int,
                 within: Iterable[int] | None = None) -> bool:
    """Arc v->u, or at least c internally disjoint 2-paths from v to u."""
    if u == v:
        raise ValueError("vertices must differ")
    if c < 1:
        raise ValueError("c must be >= 1")
    return d.has_arc(v, u) or count_two_paths(d, v, u, within) >= c


def goodness_scores(d: Digraph, u: int, direction: str,
                     mask: np.ndarray) -> np.ndarray:
    """Per-vertex goodness threshold: v is c-good iff score[v] >= c.

    Direct arcs count as infinitely good (score n); the score of u itself
    and of vertices outside the pool is -1 so they never count as bad.
    """
    a = d.adjacency.astype(np.int64)
    if direction == "out":
        two = a[u] @ (a * mask[:, None])  # two[v] = #{m in pool: u->m->v}
        direct = d.adjacency[u]
    else:
        two = a @ (a[:, u] * mask)  # two[v] = #{m in pool: v->m->u}
        direct = d.adjacency[:, u]
    scores = np.where(direct, d.n, two)
    scores = np.where(mask, scores, -1)
    scores[u] = -1
    return scores


@dataclass(frozen=True)
class DominationProfile:
    """Bad-vertex counts per c for one candidate dominating vertex."""

    vertex: int
    direction: str
    pool_size: int  # candidates other than the vertex itself
    bad_counts: tuple[int, ...]  # bad_counts[c-1] = #vertices not c-good
    vacuous_from: int  # smallest c with 2c >= pool_size (condition holds trivially)

    def is_nearly_dominating(self) -> bool:
        return all(bad <= 2 * c for c, bad in enumerate(self.bad_counts, start=1))

    def satisfies_strict_bound(self) -> bool:
        """The constructive guarantee: at most 2c - 1 bad vertices per c."""
        return all(bad <= 2 * c - 1 for c, bad in enumerate(self.bad_counts, start=1))


def _profile(d: Digraph, u: int, direction: str, c_max: int | None,
             within: Iterable[int] | None) -> DominationProfile:
    mask = _pool_mask(d, within)
    if not mask[u]:
        raise ValueError("vertex must belong to the pool")
    if c_max is None:
        c_max = d.n
    if c_max < 1:
        raise ValueError("c_max must be >= 1")
    scores = goodness_scores(d, u, direction, mask)
    pool_size = int(mask.sum()) - 1
    # Once 2c >= pool_size the condition cannot fail; counting stops there.
    vacuous_from = pool_size // 2 + 1
    explicit = min(c_max, vacuous_from)
    candidate_scores = np.sort(scores[scores >= 0])
    bad = tuple(int(np.searchsorted(candidate_scores, c, side="left"))
                for c in range(1, explicit + 1))
    bad += tuple(bad[-1] if bad else 0 for _ in range(explicit + 1, c_max + 1))
    return DominationProfile(u, direction, pool_size, bad, vacuous_from)


def nearly_out_dominating_profile(d: Digraph, u: int, c_max: int | None = None,
                                  within: Iterable[int] | None = None) -> DominationProfile:
    return _profile(d, u, "out", c_max, within)


def nearly_in_dominating_profile(d: Digraph, u: int, c_max: int | None = None,
                                 within: Iterable[int] | None = None) -> DominationProfile:
    return _profile(d, u, "in", c_max, within)


def is_nearly_out_dominating(d: Digraph, u: int, c_max: int | None = None,
                             within: Iterable[int] | None = None) -> bool:
    """For every c <= c_max, at most 2c pool vertices are not c-out-good for u."""
    return _profile(d, u, "out", c_max, within).is_nearly_dominating()


def is_nearly_in_dominating(d: Digraph, u: int, c_max: int | None = None,
                            within: Iterable[int] | None = None) -> bool:
    return _profile(d, u, "in", c_max, within).is_nearly_dominating()


def _find(d: Digraph, direction: str, within: Iterable[int] | None,
          seed: int | None) -> int:
    mask = _pool_mask(d, within)
    ids = np.flatnonzero(mask)
    if ids.size == 0:
        raise ValueError("empty pool")
    sub = d.adjacency[np.ix_(ids, ids)]
    if direction == "in":
        # operate on the reversed subgraph so that the tie rule and the
        # degree argmax match find_nearly_out_dominating(reverse(d)) exactly
        sub = sub.T
    both = sub & sub.T
    single = sub.copy()
    if both.any():
        iu, iv = np.nonzero(np.triu(both, 1))
        if seed is None:
            single[iv, iu] = False
        else:
            rng = np.random.Generator(np.random.PCG64(seed))
            keep_low = rng.integers(0, 2, size=iu.size).astype(bool)
            single[iv[keep_low], iu[keep_low]] = False
            single[iu[~keep_low], iv[~keep_low]] = False
    if not (single | single.T | np.eye(ids.size, dtype=bool)).all():
        raise ValueError("digraph is not semicomplete on the pool")
    degs = single.sum(axis=1)
    u = int(ids[int(np.argmax(degs))])  # argmax takes the lowest id on ties
    profile = _profile(d, u, direction, None, ids)
    assert profile.is_nearly_dominating(), \
        f"max-degree vertex {u} fails the nearly-{direction}-dominating check"
    return u


def find_nearly_out_dominating(d: Digraph, within: Iterable[int] | None = None,
                               seed: int | None = None) -> int:
    """A nearly out-dominating vertex of a semicomplete digraph.

    Picks a maximum out-degree vertex of a spanning tournament (lowest id on
    ties; ``seed`` randomizes which arc of a bidirected pair survives) and
    asserts the defining property, which that choice always satisfies.
    """
    return _find(d, "out", within, seed)


def find_nearly_in_dominating(d: Digraph, within: Iterable[int] | None = None,
                              seed: int | None = None) -> int:
    return _find(d, "in", within, seed)


def is_gamma_out_dominator(d: Digraph, v: int, members: Iterable[int], gamma: int) -> bool:
    """v has at least gamma out-neighbours inside ``members`` (v not a member)."""
    ids = sorted(set(int(x) for x in members))
    if v in ids:
        raise ValueError("vertex must not belong to the set")
    if gamma <= 0:
        return True
    return int(d.adjacency[v][ids].sum()) >= gamma


def is_gamma_in_dominator(d: Digraph, v: int, members: Iterable[int], gamma: int) -> bool:
    ids = sorted(set(int(x) for x in members))
    if v in ids:
        raise ValueError("vertex must not belong to the set")
    if gamma <= 0:
        return True
    return int(d.adjacency[:, v][ids].sum()) >= gamma


def is_nearly_in_dominating_set(d: Digraph, members: Iterable[int],
                                c_max: int | None = None) -> bool:
    """Set-level check: every member is nearly in-dominated by the complement.

    For each member u and every c, at most 2c of the non-member vertices may
    fail to be c-in-good for u (goodness measured in the whole digraph).
    """
    ids = sorted(set(int(x) for x in members))
    if not ids:
        raise ValueError("the set must be non-empty")
    outside = np.ones(d.n, dtype=bool)
    outside[ids] = False
    n_out = int(outside.sum())
    if n_out == 0:
        return True
    if c_max is None:
        c_max = d.n
    full = np.ones(d.n, dtype=bool)
    for u in ids:
        scores = goodness_scores(d, u, "in", full)
        cand = np.sort(scores[outside & (scores >= 0)])
        explicit = min(c_max, n_out // 2 + 1)
        for c in range(1, explicit + 1):
            if int(np.searchsorted(cand, c, side="left")) > 2 * c:
                return False
    return True
