"""Constructors for structured and random tournaments.

All generators are pure functions of their parameters.  Randomized variants
draw from numpy's PCG64 stream seeded with the given 64-bit seed, so the same
parameters always produce the same digraph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .digraph import Digraph


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def transitive_tournament(order: Sequence[int] | int) -> Digraph:
    """Tournament whose arcs follow the given vertex order.

    ``order`` is either a permutation of 0..n-1 or an integer n (identity
    order).  There is an arc from ``order[i]`` to ``order[j]`` iff i < j.
    """
    if isinstance(order, int):
        order = range(order)
    perm = list(int(v) for v in order)
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError("order must be a permutation of 0..n-1")
    rank = np.empty(n, dtype=np.int64)
    rank[perm] = np.arange(n)
    adj = rank[:, None] < rank[None, :]
    np.fill_diagonal(adj, False)
    return Digraph(adj, copy=False)


def rotational_tournament(n: int) -> Digraph:
    """Circulant tournament: u beats u+1, ..., u+(n-1)/2 (mod n).

    Requires odd n >= 3; the result is regular with all semidegrees
    (n-1)/2.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("rotational tournament needs odd n >= 3")
    diff = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    adj = (diff >= 1) & (diff <= (n - 1) // 2)
    return Digraph(adj, copy=False)


def random_tournament(n: int, seed: int) -> Digraph:
    """Tournament with every pair oriented uniformly at random."""
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = _rng(seed)
    upper = np.triu(rng.integers(0, 2, size=(n, n)).astype(bool), 1)
    lower = np.triu(~upper, 1).T
    adj = upper | lower
    np.fill_diagonal(adj, False)
    return Digraph(adj, copy=False)


def random_semicomplete(n: int, p_bidirected: float, seed: int) -> Digraph:
    """Random tournament where each pair is additionally bidirected w.p. p."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0.0 <= p_bidirected <= 1.0:
        raise ValueError("p_bidirected must lie in [0, 1]")
    rng = _rng(seed)
    upper = np.triu(rng.integers(0, 2, size=(n, n)).astype(bool), 1)
    lower = np.triu(~upper, 1).T
    adj = upper | lower
    both = np.triu(rng.random(size=(n, n)) < p_bidirected, 1)
    adj |= both | both.T
    np.fill_diagonal(adj, False)
    return Digraph(adj, copy=False)


def bipartite_tournament(u_size: int, w_size: int, seed: int) -> Digraph:
    """Each cross pair gets exactly one random arc; no arcs within a part."""
    if u_size < 1 or w_size < 1:
        raise ValueError("part sizes must be >= 1")
    n = u_size + w_size
    rng = _rng(seed)
    adj = np.zeros((n, n), dtype=bool)
    toward_w = rng.integers(0, 2, size=(u_size, w_size)).astype(bool)
    adj[:u_size, u_size:] = toward_w
    adj[u_size:, :u_size] = ~toward_w.T
    return Digraph(adj, copy=False)


def near_regular_tournament(n: int, seed: int, shuffle_factor: float = 2.7) -> Digraph:
    """Random tournament whose semidegrees differ by at most one.

    Starts from the circulant score sequence (for even n the tie on the
    n/2 difference goes to the lower id, leaving out-degrees n/2 and
    n/2 - 1) and randomizes with directed-triangle reversals, which
    preserve every vertex's score exactly.
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if n % 2 == 1:
        adj = rotational_tournament(n).adjacency.copy()
    else:
        diff = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
        adj = (diff >= 1) & (diff < n // 2)
        half = diff == n // 2
        ids = np.arange(n)
        adj |= half & (ids[:, None] < ids[None, :])
        np.fill_diagonal(adj, False)
    rng = _rng(seed)
    attempts = int(shuffle_factor * n * (n - 1) / 2)
    triples = rng.integers(0, n, size=(attempts, 3))
    for a, b, c in triples:
        if a == b or b == c or a == c:
            continue
        if adj[a, b] and adj[b, c] and adj[c, a]:
            adj[a, b] = adj[b, c] = adj[c, a] = False
            adj[b, a] = adj[c, b] = adj[a, c] = True
    return Digraph(adj, copy=False)


_KINDS = ("transitive", "rotational", "random_tournament", "random_semicomplete",
          "bipartite_tournament", "near_regular")


@dataclass(frozen=True)
class GenSpec:
    """A generator request: which family, what size, which seed."""

    kind: str
    n: int = 0
    u_size: int = 0
    w_size: int = 0
    p_bidirected: float = 0.0
    seed: int = 0

    def build(self) -> Digraph:
        if self.kind == "transitive":
            return transitive_tournament(self.n)
        if self.kind == "rotational":
            return rotational_tournament(self.n)
        if self.kind == "random_tournament":
            return random_tournament(self.n, self.seed)
        if self.kind == "random_semicomplete":
            return random_semicomplete(self.n, self.p_bidirected, self.seed)
        if self.kind == "bipartite_tournament":
            return bipartite_tournament(self.u_size, self.w_size, self.seed)
        if self.kind == "near_regular":
            return near_regular_tournament(self.n, self.seed)
        raise ValueError(f"unknown kind {self.kind!r}; expected one of {_KINDS}")
