"""Hand-built instances that drive the linker into its rare branches.

The stress instance below forces the path-adjustment program to run a
reroute round, which never happens on abundant digraphs: both corridors of
reachable vertices are laid out so that the minimum-weight initial paths
swallow the whole reach set of the single rich start.
"""

from __future__ import annotations

import numpy as np

from .digraph import Digraph


def adjustment_stress_instance() -> tuple[Digraph, tuple[tuple[int, int], ...]]:
    """A 49-vertex semicomplete digraph whose linkage needs a reroute.

    One terminal pair (0, 1).  Vertices 2..15 form the reach set of start 0:
    vertex 2 heads a long corridor 10..15 -> 2 and is the initial spare
    target; vertices 3..9 form a second corridor guarding target 1.  The
    pool picks are forced to 16, 17, 18: in the reversed spanning
    tournament their degrees (45, 44, 43) top everything else, because the
    pads keep a near-regular internal structure and their bidirected arcs
    with 16 resolve toward the lower id.  The cheapest two disjoint
    pool-to-target paths cover the entire reach set, so the greedy matching
    starves and exactly one reroute round must fire.  Vertices 19..48 pad
    the out-neighbourhood of pool vertex 16 so that the launch stage finds
    enough anchored vertices afterwards.
    """
    n = 49
    x, y = 0, 1
    v = {j: j + 1 for j in range(1, 15)}   # v[1]..v[14] -> ids 2..15
    u1, u2, u3 = 16, 17, 18
    pads = list(range(19, 49))
    first = [v[a] for a in range(2, 9)]    # corridor guarding y: v2 -> ... -> v8
    second = [v[b] for b in range(9, 15)]  # corridor guarding v1: v9 -> ... -> v14

    adj = np.zeros((n, n), dtype=bool)

    def arc(a, b):
        adj[a, b] = True

    # Start reaches the whole reach set and the pool.
    for j in range(1, 15):
        arc(x, v[j])
    for u in (u1, u2, u3):
        arc(x, u)
    # Target 1 is guarded by the end of the first corridor and beats the rest.
    for w in range(n):
        if w not in (y, v[8]):
            arc(y, w)
    arc(v[8], y)
    # Corridors: consecutive arcs forward, everything else backward.
    for chain in (first, second):
        for a, b in zip(chain, chain[1:]):
            arc(a, b)
        for i, a in enumerate(chain):
            for b in chain[:max(i - 1, 0)]:
                arc(a, b)
    # v1 is fed only by the end of the second corridor (bidirected so v1
    # stays the top out-degree vertex of the reach set) and beats the rest.
    arc(v[14], v[1])
    arc(v[1], v[14])
    for j in range(2, 14):
        arc(v[1], v[j])
    # Cross arcs between the corridors: directions chosen so that no jump
    # shortens either corridor (progress made never exceeds progress kept).
    for ai, a in enumerate(first, start=1):       # ai = position in corridor 1
        for bi, b in enumerate(second, start=1):  # bi = position in corridor 2
            if ai >= bi - 1:
                arc(a, b)
            else:
                arc(b, a)
    # The reach set beats the pool (making its members pool-dominators);
    # selected bidirected arcs give the pool its corridor entries.
    for j in range(1, 15):
        for u in (u1, u2, u3):
            arc(v[j], u)
    arc(u1, v[2])
    arc(u2, v[9])
    arc(u3, v[2])
    # Pool in-degree ladder: 16 beats nothing inside, 18 beats both.
    arc(u2, u1)
    arc(u3, u1)
    arc(u3, u2)
    # Pads: big out-neighbourhood for pool vertex 16, dead ends otherwise.
    for w in pads:
        arc(u1, w)
        arc(w, u1)
        arc(w, u2)
        arc(w, u3)
        arc(w, x)
        for j in range(1, 15):
            arc(v[j], w)
    # A near-regular circulant among the pads keeps every pad's in-degree
    # low enough that the pool still tops the reversed degree ranking.
    m = len(pads)
    for i, w in enumerate(pads):
        for j, w2 in enumerate(pads):
            diff = (j - i) % m
            if 1 <= diff <= m // 2 - 1 or (diff == m // 2 and i < j):
                arc(w, w2)
    return Digraph(adj, copy=False), ((x, y),)


def planted_cut_instance(k: int = 2) -> tuple[Digraph, tuple[tuple[int, int], ...]]:
    """A semicomplete digraph where one vertex separates the pool from the
    targets, so the initial-path stage must fail with a cut certificate.

    Layout: starts, then targets, then a lone gate vertex, then the rest.
    Every path toward a target must pass the gate.
    """
    n = 6 * k + 8
    starts = list(range(k))
    targets = list(range(k, 2 * k))
    gate = 2 * k
    rest = list(range(2 * k + 1, n))
    adj = np.zeros((n, n), dtype=bool)
    # Targets beat everything except the gate (so only the gate enters them).
    for y in targets:
        for w in range(n):
            if w != y and w != gate:
                adj[y, w] = True
    adj[gate, targets] = True
    # The gate is otherwise beaten by everyone.
    for w in range(n):
        if w != gate and w not in targets:
            adj[w, gate] = True
    # Starts and rest: transitive by id, starts reach everything non-target.
    block = starts + rest
    for i, a in enumerate(block):
        for b in block[i + 1:]:
            adj[a, b] = True
    return Digraph(adj, copy=False), tuple((starts[i], targets[i]) for i in range(k))
