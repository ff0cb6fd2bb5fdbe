"""Vertex-disjoint path systems, minimum vertex cuts, and exact connectivity.

Everything is built on one unit-capacity flow kernel over the node-split
graph: each vertex v becomes an internal arc v_in -> v_out of capacity 1,
original arcs get unbounded capacity, so max flow counts vertex-disjoint
(or internally disjoint) paths and every finite cut is a set of vertices.

Augmentation uses breadth-first search with numpy frontier expansion; the
minimum-weight variant (unit cost per vertex) augments along cheapest paths
found by Bellman-Ford relaxation followed by a BFS restricted to tight arcs.
All tie-breaking is by lowest vertex id, so outputs are deterministic.
Each query allocates its own scratch state, so concurrent queries over a
shared immutable digraph are safe.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .digraph import Digraph, Path, PathSystem, reduce_to_minimal_path

_INF = np.inf


@dataclass(frozen=True)
class CutCertificate:
    """A vertex separator witnessing that no more disjoint paths exist."""

    separator: frozenset[int]
    source_side: frozenset[int]
    sink_side: frozenset[int]


@dataclass(frozen=True)
class LocalCut:
    """Result of a single-pair cut query."""

    value: int
    separator: frozenset[int] | None
    paths: tuple[Path, ...]
    direct_arc: bool  # the arc u->v was present and counted as one path


class FlowInfeasible(Exception):
    """Raised when the requested number of disjoint paths does not exist."""

    def __init__(self, achieved: int, cut: CutCertificate):
        super().__init__(f"only {achieved} disjoint paths exist (cut size {len(cut.separator)})")
        self.achieved = achieved
        self.cut = cut


class _SplitFlow:
    """Unit-vertex-capacity flow state for one query."""

    def __init__(self, d: Digraph, forbidden: Iterable[int] = ()):
        n = d.n
        allowed = np.ones(n, dtype=bool)
        fb = np.asarray(sorted(set(int(v) for v in forbidden)), dtype=np.int64)
        if fb.size:
            if fb[0] < 0 or fb[-1] >= n:
                raise ValueError("forbidden vertex out of range")
            allowed[fb] = False
        self.n = n
        self.allowed = allowed
        self.adj = d.adjacency & allowed[:, None] & allowed[None, :]
        self.arc_flow = np.zeros((n, n), dtype=bool)
        self.internal_flow = np.zeros(n, dtype=bool)
        self.mode = ""
        self._vis_in = np.zeros(n, dtype=bool)
        self._vis_out = np.zeros(n, dtype=bool)

    # -- configuration -----------------------------------------------------

    def setup_sets(self, sources: Sequence[int], sinks: Sequence[int]) -> None:
        self.mode = "sets"
        self.sources = np.asarray(sorted(sources), dtype=np.int64)
        self.sinks = np.asarray(sorted(sinks), dtype=np.int64)
        # Paths touch sources/sinks only at their endpoints: nothing may
        # enter a source or leave a sink.
        self.adj[:, self.sources] = False
        self.adj[self.sinks, :] = False
        self.src_free = np.zeros(self.n, dtype=bool)
        self.src_free[self.sources] = True
        self.sink_free = np.zeros(self.n, dtype=bool)
        self.sink_free[self.sinks] = True

    def setup_pair(self, u: int, v: int, drop_direct: bool) -> None:
        self.mode = "pair"
        self.src = int(u)
        self.sink = int(v)
        if drop_direct:
            self.adj[u, v] = False

    # -- breadth-first search over the residual graph ----------------------

    def _bfs(self, early_exit: bool, dist_in=None, dist_out=None):
        """One BFS; returns the augmenting node sequence or None.

        With dist arrays given, only cost-tight residual arcs are used, so
        the augmenting path is a cheapest one.  The visited sets of the last
        call remain available for cut extraction.
        """
        n = self.n
        par_in = np.full(n, -1, dtype=np.int64)
        par_out = np.full(n, -1, dtype=np.int64)
        vis_in = np.zeros(n, dtype=bool)
        vis_out = np.zeros(n, dtype=bool)
        tight = dist_in is not None
        if self.mode == "sets":
            seeds = self.src_free.copy()
            if tight:
                seeds &= dist_in == 0
            vis_in |= seeds
            par_in[seeds] = -2
            f_in, f_out = seeds, np.zeros(n, dtype=bool)
            if tight:
                free = self.sink_free & (dist_out < _INF)
                best = dist_out[free].min() if free.any() else _INF
                target_mask = free & (dist_out == best) \
                    if best < _INF else np.zeros(n, dtype=bool)
            else:
                target_mask = self.sink_free
        else:
            vis_out[self.src] = True
            par_out[self.src] = -2
            f_in = np.zeros(n, dtype=bool)
            f_out = np.zeros(n, dtype=bool)
            f_out[self.src] = True

        hit = -1
        while f_in.any() or f_out.any():
            new_in = np.zeros(n, dtype=bool)
            new_out = np.zeros(n, dtype=bool)
            if f_in.any():
                m = f_in & self.allowed & ~self.internal_flow & ~vis_out
                if tight:
                    m &= dist_out == dist_in + 1
                if m.any():
                    idx = np.flatnonzero(m)
                    par_out[idx] = idx
                    new_out |= m
                cols = np.flatnonzero(f_in)
                sub = self.arc_flow[:, cols]
                if tight:
                    sub = sub & (dist_out[:, None] == dist_in[cols][None, :])
                cand = sub.any(axis=1) & ~vis_out & ~new_out
                if cand.any():
                    ci = np.flatnonzero(cand)
                    par_out[ci] = cols[np.argmax(sub[ci], axis=1)]
                    new_out |= cand
            if f_out.any():
                rows = np.flatnonzero(f_out)
                sub = self.adj[rows]
                if tight:
                    sub = sub & (dist_in[None, :] == dist_out[rows][:, None])
                cand = sub.any(axis=0) & ~vis_in
                if cand.any():
                    ci = np.flatnonzero(cand)
                    par_in[ci] = rows[np.argmax(sub[:, ci], axis=0)]
                    new_in |= cand
                m = f_out & self.internal_flow & ~vis_in & ~new_in
                if tight:
                    m &= dist_in == dist_out - 1
                if m.any():
                    idx = np.flatnonzero(m)
                    par_in[idx] = idx
                    new_in |= m
            vis_in |= new_in
            vis_out |= new_out
            if self.mode == "sets":
                reached = new_out & target_mask
                if reached.any():
                    hit = int(np.flatnonzero(reached)[0])
                    if early_exit:
                        break
            else:
                if new_in[self.sink]:
                    hit = self.sink
                    if early_exit:
                        break
            f_in, f_out = new_in, new_out

        self._vis_in, self._vis_out = vis_in, vis_out
        if hit < 0:
            return None
        seq = []
        kind, v = ("out", hit) if self.mode == "sets" else ("in", hit)
        while True:
            seq.append((kind, v))
            p = par_in[v] if kind == "in" else par_out[v]
            if p == -2:
                break
            if kind == "in":
                kind = "out"
                v = int(p)  # p == v means backward internal, else forward arc p->v
            else:
                kind = "in"
                v = int(p)
        seq.reverse()
        return seq

    def _augment(self, seq) -> None:
        if self.mode == "sets":
            self.src_free[seq[0][1]] = False
            self.sink_free[seq[-1][1]] = False
        for (k1, v1), (k2, v2) in zip(seq, seq[1:]):
            if k1 == "in":
                if v1 == v2:
                    self.internal_flow[v1] = True
                else:
                    self.arc_flow[v2, v1] = False
            else:
                if v1 == v2:
                    self.internal_flow[v1] = False
                else:
                    # unit internal capacities keep every arc's flow at 0/1
                    assert not self.arc_flow[v1, v2]
                    self.arc_flow[v1, v2] = True

    # -- maximum flow -------------------------------------------------------

    def run_max(self, cap: int) -> int:
        flow = 0
        while flow < cap:
            seq = self._bfs(early_exit=True)
            if seq is None:
                return flow
            self._augment(seq)
            flow += 1
        return flow

    def cut_certificate(self) -> CutCertificate:
        """Cut from the visited sets of the last (failed) BFS."""
        self._bfs(early_exit=False)
        vin, vout = self._vis_in, self._vis_out
        sep = vin & ~vout
        if self.mode == "sets":
            sep = sep.copy()
            sep[self.sources[~vin[self.sources]]] = True
            sep[self.sinks[vout[self.sinks]]] = True
        else:
            sep = sep.copy()
            sep[self.src] = False
            sep[self.sink] = False
        sep_ids = frozenset(int(v) for v in np.flatnonzero(sep))
        src_side = frozenset(int(v) for v in np.flatnonzero(self.allowed & ~sep & vout))
        sink_side = frozenset(int(v) for v in np.flatnonzero(self.allowed & ~sep & ~vout))
        return CutCertificate(sep_ids, src_side, sink_side)

    # -- minimum-cost flow (unit cost per vertex) ---------------------------

    def _bellman(self):
        n = self.n
        dist_in = np.full(n, _INF)
        dist_out = np.full(n, _INF)
        if self.mode == "sets":
            dist_in[self.src_free] = 0.0
        else:
            dist_out[self.src] = 0.0
        internal_ok = self.allowed & ~self.internal_flow
        for _ in range(2 * n + 4):
            changed = False
            cand = np.where(internal_ok, dist_in + 1, _INF)
            m = cand < dist_out
            if m.any():
                dist_out = np.minimum(dist_out, cand)
                changed = True
            cand = np.where(self.internal_flow, dist_out - 1, _INF)
            m = cand < dist_in
            if m.any():
                dist_in = np.minimum(dist_in, cand)
                changed = True
            cand = np.where(self.adj, dist_out[:, None], _INF).min(axis=0)
            m = cand < dist_in
            if m.any():
                dist_in = np.minimum(dist_in, cand)
                changed = True
            cand = np.where(self.arc_flow, dist_in[None, :], _INF).min(axis=1)
            m = cand < dist_out
            if m.any():
                dist_out = np.minimum(dist_out, cand)
                changed = True
            if not changed:
                return dist_in, dist_out
        raise AssertionError("cost relaxation failed to converge")

    def run_min_cost(self, count: int) -> None:
        """Push ``count`` units along successive cheapest paths."""
        for achieved in range(count):
            dist_in, dist_out = self._bellman()
            if not (self.sink_free & (dist_out < _INF)).any():
                cut = self.cut_certificate()
                raise FlowInfeasible(achieved, cut)
            seq = self._bfs(early_exit=True, dist_in=dist_in, dist_out=dist_out)
            assert seq is not None, "tight BFS must reach a cheapest sink"
            self._augment(seq)

    # -- decomposition -------------------------------------------------------

    def _walk(self, start: int) -> list[int]:
        path = [start]
        cur = start
        while True:
            if self.mode == "pair" and cur == self.sink:
                break
            nxt = np.flatnonzero(self.arc_flow[cur])
            if nxt.size == 0:
                break
            cur = int(nxt[0])
            path.append(cur)
        return path

    def paths_from_sets(self, d: Digraph) -> list[Path]:
        out = []
        for u in self.sources:
            if self.src_free[u]:
                continue
            verts = self._walk(int(u))
            assert not self.sink_free[verts[-1]]
            out.append(Path(d, verts))
        return out

    def paths_from_pair(self, d: Digraph, direct_arc: bool) -> list[Path]:
        out = []
        if direct_arc:
            out.append(Path(d, (self.src, self.sink)))
        for w in np.flatnonzero(self.arc_flow[self.src]):
            verts = [self.src] + self._walk(int(w))
            out.append(Path(d, verts))
        return out


def _validate_terminals(d: Digraph, sources, sinks, forbidden) -> tuple[list[int], list[int]]:
    src = sorted(set(int(v) for v in sources))
    snk = sorted(set(int(v) for v in sinks))
    if not src or not snk:
        raise ValueError("sources and sinks must be non-empty")
    for v in src + snk:
        if not 0 <= v < d.n:
            raise ValueError(f"terminal {v} out of range")
    bad = set(src + snk) & set(int(v) for v in forbidden)
    if bad:
        raise ValueError(f"terminals {sorted(bad)} are forbidden")
    return src, snk


def max_disjoint_paths(d: Digraph, sources: Iterable[int], sinks: Iterable[int],
                       cap: int | None = None, forbidden: Iterable[int] = ()
                       ) -> tuple[PathSystem, CutCertificate | None]:
    """A maximum system (up to ``cap``) of vertex-disjoint source-to-sink paths.

    Paths contain sources and sinks only as their own endpoints.  Vertices in
    both sets yield trivial one-vertex paths.  When the maximum is below
    ``cap``, a vertex cut of matching size is returned as well.
    """
    forbidden = list(forbidden)
    src, snk = _validate_terminals(d, sources, sinks, forbidden)
    overlap = sorted(set(src) & set(snk))
    if cap is None:
        cap = min(len(src), len(snk))
    if cap < 1:
        raise ValueError("cap must be >= 1")
    trivial = [Path(d, (w,)) for w in overlap[:cap]]
    rest_src = [v for v in src if v not in set(overlap)]
    rest_snk = [v for v in snk if v not in set(overlap)]
    budget = cap - len(trivial)
    paths: list[Path] = list(trivial)
    certificate = None
    if budget > 0 and rest_src and rest_snk:
        fl = _SplitFlow(d, forbidden=list(forbidden) + overlap)
        fl.setup_sets(rest_src, rest_snk)
        got = fl.run_max(budget)
        paths.extend(fl.paths_from_sets(d))
        if got < budget:
            cut = fl.cut_certificate()
            certificate = CutCertificate(cut.separator | frozenset(overlap),
                                         cut.source_side, cut.sink_side)
    elif budget > 0:
        certificate = CutCertificate(frozenset(overlap),
                                     frozenset(v for v in src if v not in overlap),
                                     frozenset(v for v in snk if v not in overlap))
    paths.sort(key=lambda p: p.first)
    return PathSystem(paths), certificate


def min_weight_disjoint_paths(d: Digraph, sources: Iterable[int], sinks: Iterable[int],
                              count: int, forbidden: Iterable[int] = ()) -> PathSystem:
    """Exactly ``count`` disjoint paths minimizing the total vertex count.

    Sources appear only as initial vertices and sinks only as terminal ones.
    Raises :class:`FlowInfeasible` (carrying the cut) when fewer than
    ``count`` disjoint paths exist.
    """
    forbidden = list(forbidden)
    src, snk = _validate_terminals(d, sources, sinks, forbidden)
    if count < 1:
        raise ValueError("count must be >= 1")
    overlap = sorted(set(src) & set(snk))[:count]
    paths = [Path(d, (w,)) for w in overlap]
    budget = count - len(paths)
    if budget > 0:
        rest_src = [v for v in src if v not in set(overlap)]
        rest_snk = [v for v in snk if v not in set(overlap)]
        if not rest_src or not rest_snk:
            raise FlowInfeasible(len(paths), CutCertificate(
                frozenset(overlap), frozenset(rest_src), frozenset(rest_snk)))
        fl = _SplitFlow(d, forbidden=list(forbidden) + overlap)
        fl.setup_sets(rest_src, rest_snk)
        try:
            fl.run_min_cost(budget)
        except FlowInfeasible as exc:
            raise FlowInfeasible(len(paths) + exc.achieved, CutCertificate(
                exc.cut.separator | frozenset(overlap),
                exc.cut.source_side, exc.cut.sink_side)) from None
        blocked = set(forbidden)
        for p in fl.paths_from_sets(d):
            paths.append(_minimal_within(d, p, blocked))
    paths.sort(key=lambda p: p.first)
    return PathSystem(paths)


def _minimal_within(d: Digraph, p: Path, forbidden: set[int]) -> Path:
    # Shortcutting only ever drops vertices of the path itself, so it cannot
    # break disjointness or wander into forbidden territory.
    assert not forbidden.intersection(p.vertices)
    return reduce_to_minimal_path(d, p)


def local_cut(d: Digraph, u: int, v: int, cap: int | None = None,
              forbidden: Iterable[int] = ()) -> LocalCut:
    """Maximum internally disjoint u->v paths and the matching vertex cut.

    When the arc u->v exists it is removed first and the result is increased
    by one (``direct_arc`` is set).  With ``cap`` given, augmentation stops
    early and no separator is reported once ``cap`` is reached.
    """
    if u == v:
        raise ValueError("local_cut requires distinct vertices")
    direct = d.has_arc(u, v)
    bonus = 1 if direct else 0
    value = bonus
    paths: list[Path] = []
    separator = None
    inner_cap = d.n if cap is None else max(cap - bonus, 0)
    if inner_cap > 0:
        fl = _SplitFlow(d, forbidden=forbidden)
        fl.setup_pair(u, v, drop_direct=direct)
        got = fl.run_max(inner_cap)
        value += got
        paths = fl.paths_from_pair(d, direct)
        if got < inner_cap:
            separator = fl.cut_certificate().separator
    elif direct:
        paths = [Path(d, (u, v))]
    return LocalCut(value, separator, tuple(paths), direct)


def vertex_connectivity(d: Digraph) -> int:
    """Exact vertex connectivity.

    Runs full local-cut stars from successive candidate vertices; once the
    first kappa+1 candidates have been processed, some candidate avoids a
    minimum separator and its star has witnessed the exact value.
    """
    n = d.n
    if n < 2:
        raise ValueError("connectivity needs at least two vertices")
    best = n - 1
    sd = d.min_semidegree()
    if sd < n - 1:
        best = min(best, sd)
    i = 0
    while i < n and i <= best:
        for w in range(n):
            if w == i:
                continue
            best = min(best, local_cut(d, i, w, cap=best + 1).value)
            best = min(best, local_cut(d, w, i, cap=best + 1).value)
            if best == 0:
                return 0
        i += 1
    return best


def is_k_connected(d: Digraph, k: int) -> bool:
    """True iff the digraph has at least k+1 vertices and connectivity >= k.

    Decided with capped local cuts: any separator smaller than k misses one
    of the first k candidate vertices, so k full stars suffice.
    """
    if d.n < k + 1:
        return False
    if k <= 0:
        return True
    for i in range(min(k, d.n)):
        for w in range(d.n):
            if w == i:
                continue
            if local_cut(d, i, w, cap=k).value < k:
                return False
            if local_cut(d, w, i, cap=k).value < k:
                return False
    return True
