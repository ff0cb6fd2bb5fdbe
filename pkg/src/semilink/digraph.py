"""Dense simple digraphs over integer vertex ids.

The adjacency relation is a boolean n x n matrix; ``adj[u, v]`` means the arc
u -> v is present.  Digraphs are immutable after construction, so every query
is pure and safe for concurrent shared reads.  Subgraph views carry an
explicit old<->new id map (``origin``) so results computed on a view can be
translated back to the host's ids.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

import numpy as np


class Digraph:
    """A simple digraph (no loops, at most one arc per ordered pair)."""

    __slots__ = ("_adj", "origin")

    def __init__(self, adjacency: np.ndarray, *, origin: np.ndarray | None = None,
                 copy: bool = True):
        adj = np.asarray(adjacency, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be a square matrix")
        if adj.shape[0] and adj.diagonal().any():
            raise ValueError("self-loops are not allowed")
        if copy:
            adj = adj.copy()
        adj.setflags(write=False)
        self._adj = adj
        if origin is not None:
            origin = np.asarray(origin, dtype=np.int64)
            origin.setflags(write=False)
        self.origin = origin

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        adj = np.zeros((n, n), dtype=bool)
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if adj[u, v]:
                raise ValueError(f"duplicate arc ({u}, {v})")
            adj[u, v] = True
        return cls(adj, copy=False)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adjacency(self) -> np.ndarray:
        """Read-only boolean adjacency matrix."""
        return self._adj

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u, v in np.argwhere(self._adj):
            yield int(u), int(v)

    @property
    def arc_count(self) -> int:
        return int(self._adj.sum())

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range (n={self.n})")

    def out_neighbours(self, v: int) -> np.ndarray:
        self._check_vertex(v)
        return np.flatnonzero(self._adj[v])

    def in_neighbours(self, v: int) -> np.ndarray:
        self._check_vertex(v)
        return np.flatnonzero(self._adj[:, v])

    def out_degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._adj[v].sum())

    def in_degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._adj[:, v].sum())

    def out_degrees(self) -> np.ndarray:
        return self._adj.sum(axis=1)

    def in_degrees(self) -> np.ndarray:
        return self._adj.sum(axis=0)

    def min_out_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty digraph has no degrees")
        return int(self.out_degrees().min())

    def min_in_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty digraph has no degrees")
        return int(self.in_degrees().min())

    def min_semidegree(self) -> int:
        return min(self.min_out_degree(), self.min_in_degree())

    def reverse(self) -> "Digraph":
        return Digraph(self._adj.T, origin=self.origin)

    def induced(self, vertices: Iterable[int]) -> "Digraph":
        """Subgraph induced on ``vertices``; new ids follow the sorted order.

        The result's ``origin`` array maps each new id back to this digraph's
        id space (composed through ``self.origin`` if this is itself a view).
        """
        ids = np.unique(np.asarray(list(vertices), dtype=np.int64))
        if ids.size and (ids[0] < 0 or ids[-1] >= self.n):
            raise ValueError("vertex id out of range")
        sub = self._adj[np.ix_(ids, ids)]
        origin = ids if self.origin is None else self.origin[ids]
        return Digraph(sub, origin=origin, copy=False)

    def delete(self, vertices: Iterable[int]) -> "Digraph":
        drop = set(int(v) for v in vertices)
        for v in drop:
            self._check_vertex(v)
        keep = [v for v in range(self.n) if v not in drop]
        return self.induced(keep)

    def with_flipped_arc(self, u: int, v: int) -> "Digraph":
        """Copy of this digraph with the arc between u and v reversed."""
        self._check_vertex(u)
        self._check_vertex(v)
        if not self._adj[u, v]:
            raise ValueError(f"arc ({u}, {v}) not present")
        adj = self._adj.copy()
        adj[u, v] = False
        adj[v, u] = True
        return Digraph(adj, copy=False)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self._adj, other._adj))

    def __hash__(self):  # pragma: no cover - explicit unhashability
        raise TypeError("Digraph is not hashable")

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arc_count})"


def is_semicomplete(d: Digraph) -> bool:
    """True iff every unordered pair of vertices has at least one arc."""
    a = d.adjacency
    pair = a | a.T
    np.fill_diagonal(pair, True)
    return bool(pair.all())


def is_tournament(d: Digraph) -> bool:
    """True iff every unordered pair has exactly one arc."""
    a = d.adjacency
    both = a & a.T
    if both.any():
        return False
    return is_semicomplete(d)


def dominates_set(d: Digraph, a: Iterable[int], b: Iterable[int]) -> bool:
    """True iff every vertex of ``a`` has an arc to every vertex of ``b``.

    Vacuously true when either set is empty; the sets must be disjoint.
    """
    sa = sorted(set(int(v) for v in a))
    sb = sorted(set(int(v) for v in b))
    if set(sa) & set(sb):
        raise ValueError("dominates_set requires disjoint sets")
    if not sa or not sb:
        return True
    return bool(d.adjacency[np.ix_(sa, sb)].all())


def spanning_tournament(d: Digraph, seed: int | None = None) -> Digraph:
    """Keep exactly one arc of every bidirected pair of a semicomplete digraph.

    With ``seed=None`` the kept arc is the one from the lower to the higher
    id; a seed picks one of the two uniformly per pair.
    """
    if not is_semicomplete(d):
        raise ValueError("spanning_tournament requires a semicomplete digraph")
    adj = d.adjacency.copy()
    both = adj & adj.T
    iu, iv = np.nonzero(np.triu(both, 1))
    if iu.size:
        if seed is None:
            adj[iv, iu] = False
        else:
            rng = np.random.Generator(np.random.PCG64(seed))
            keep_low = rng.integers(0, 2, size=iu.size).astype(bool)
            adj[iv[keep_low], iu[keep_low]] = False
            adj[iu[~keep_low], iv[~keep_low]] = False
    return Digraph(adj, origin=d.origin, copy=False)


class Path:
    """A directed path; consecutive vertices must be arcs of the host digraph.

    A single-vertex path (length 0) is allowed.
    """

    __slots__ = ("vertices",)

    def __init__(self, d: Digraph, vertices: Sequence[int]):
        verts = tuple(int(v) for v in vertices)
        if not verts:
            raise ValueError("a path needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise ValueError("path vertices must be distinct")
        for v in verts:
            if not 0 <= v < d.n:
                raise ValueError(f"vertex {v} out of range")
        for a, b in zip(verts, verts[1:]):
            if not d.has_arc(a, b):
                raise ValueError(f"missing arc ({a}, {b})")
        self.vertices = verts

    @property
    def first(self) -> int:
        return self.vertices[0]

    @property
    def last(self) -> int:
        return self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    def index_of(self, v: int) -> int:
        return self.vertices.index(v)

    def subpath(self, d: Digraph, start: int, end: int) -> "Path":
        """Subpath from vertex ``start`` to vertex ``end`` (both on the path)."""
        i, j = self.vertices.index(start), self.vertices.index(end)
        if i > j:
            raise ValueError(f"{start} does not precede {end} on this path")
        return Path(d, self.vertices[i:j + 1])

    def join(self, d: Digraph, other: "Path") -> "Path":
        """Concatenate with a path that starts at this path's last vertex."""
        if other.first != self.last:
            raise ValueError("paths do not share a junction vertex")
        return Path(d, self.vertices + other.vertices[1:])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Path):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return "Path(" + "->".join(map(str, self.vertices)) + ")"


class PathSystem:
    """An ordered collection of pairwise vertex-disjoint paths."""

    __slots__ = ("paths",)

    def __init__(self, paths: Sequence[Path]):
        seen: set[int] = set()
        for p in paths:
            overlap = seen.intersection(p.vertices)
            if overlap:
                raise ValueError(f"paths share vertices {sorted(overlap)}")
            seen.update(p.vertices)
        self.paths = tuple(paths)

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __getitem__(self, i: int) -> Path:
        return self.paths[i]

    def initials(self) -> set[int]:
        return {p.first for p in self.paths}

    def terminals(self) -> set[int]:
        return {p.last for p in self.paths}

    def interiors(self) -> set[int]:
        return self.vertex_set() - self.initials() - self.terminals()

    def vertex_set(self) -> set[int]:
        out: set[int] = set()
        for p in self.paths:
            out.update(p.vertices)
        return out

    def total_vertices(self) -> int:
        return sum(len(p.vertices) for p in self.paths)

    def __repr__(self) -> str:
        return f"PathSystem({list(self.paths)!r})"


def reduce_to_minimal_path(d: Digraph, p: Path) -> Path:
    """Shortcut a path to a fixpoint where no arc skips interior vertices.

    Repeatedly replaces the earliest shortcut (smallest source index, then
    longest jump) until none remains.  The result keeps both endpoints and
    uses a subset of the original vertices; a path with no internal shortcut
    admits no endpoint-preserving path on a proper subset of its vertices.
    """
    verts = list(p.vertices)
    changed = True
    while changed:
        changed = False
        for i in range(len(verts) - 2):
            row = d.adjacency[verts[i]]
            for j in range(len(verts) - 1, i + 1, -1):
                if row[verts[j]]:
                    del verts[i + 1:j]
                    changed = True
                    break
            if changed:
                break
    return Path(d, verts)


def digraph_from_arc_list(text: str) -> Digraph:
    """Parse the arc-list format: first line ``n m``, then m lines ``u v``.

    Rejects loops, duplicate arcs, out-of-range ids and malformed lines.
    """
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty arc-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'n m'")
    n, m = int(head[0]), int(head[1])
    if n < 0 or m < 0:
        raise ValueError("negative n or m")
    if len(lines) - 1 != m:
        raise ValueError(f"expected {m} arc lines, got {len(lines) - 1}")
    tokens = " ".join(lines[1:]).split()
    if len(tokens) != 2 * m:
        raise ValueError("malformed arc lines")
    try:
        flat = np.asarray(tokens, dtype=np.int64) if m else np.empty(0, np.int64)
    except ValueError:
        raise ValueError("malformed arc lines") from None
    arcs = flat.reshape(m, 2)
    if m:
        if arcs.min() < 0 or arcs.max() >= n:
            raise ValueError("arc endpoint out of range")
        if (arcs[:, 0] == arcs[:, 1]).any():
            raise ValueError("loops are not allowed")
        keys = arcs[:, 0] * n + arcs[:, 1]
        if np.unique(keys).size != m:
            raise ValueError("duplicate arcs")
    adj = np.zeros((n, n), dtype=bool)
    adj[arcs[:, 0], arcs[:, 1]] = True
    return Digraph(adj, copy=False)


def digraph_to_arc_list(d: Digraph) -> str:
    pairs = np.argwhere(d.adjacency)
    lines = [f"{d.n} {len(pairs)}"]
    lines.extend(f"{u} {v}" for u, v in pairs)
    return "\n".join(lines) + "\n"
