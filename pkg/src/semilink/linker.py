"""Constructive pairwise linkage in semicomplete digraphs.

Given k terminal pairs (x_i, y_i) in a semicomplete digraph with enough
connectivity and out-degree, ``link`` produces k vertex-disjoint paths, one
per pair, assembled from three layers:

* *deliveries*: disjoint paths from a pool U of nearly in-dominating
  vertices to the targets, found by minimum-weight disjoint-path flow and
  then reshaped by an iterative adjustment program that frees one reachable
  vertex (a *stand-in*) per rich start while keeping the paths disjoint and
  minimal;
* *launches*: per start, a path of length at most two into the unused part
  of the pool (rich starts hop through their matched stand-in, lean starts
  stay put);
* *bridges*: short connectors (length at most three) from each launch
  terminal to the initial vertex of the matching delivery, chosen greedily
  shortest-first while avoiding everything already used.

Every step asserts the invariants it relies on; a violated assertion
aborts the run with a structured failure report carrying the full trace.
The construction is deterministic: all choice points break ties by lowest
vertex id and no randomness is used.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .certificates import CertificateError, verify_linkage_certificate
from .digraph import Digraph, Path, PathSystem, is_semicomplete, reduce_to_minimal_path
from .dominators import find_nearly_in_dominating, find_nearly_out_dominating, \
    goodness_scores, is_nearly_in_dominating_set
from .flows import FlowInfeasible, is_k_connected, local_cut, min_weight_disjoint_paths


@dataclass(frozen=True)
class LinkageInstance:
    d: Digraph
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple((int(x), int(y)) for x, y in self.pairs)
        object.__setattr__(self, "pairs", pairs)
        if not pairs:
            raise ValueError("at least one terminal pair is required")
        terms = [t for p in pairs for t in p]
        if len(set(terms)) != len(terms):
            raise ValueError("terminal vertices must be pairwise distinct")
        for t in terms:
            if not 0 <= t < self.d.n:
                raise ValueError(f"terminal {t} out of range")

    @property
    def k(self) -> int:
        return len(self.pairs)

    @property
    def starts(self) -> tuple[int, ...]:
        return tuple(x for x, _ in self.pairs)

    @property
    def targets(self) -> tuple[int, ...]:
        return tuple(y for _, y in self.pairs)


class LinkerTrace:
    """Ordered event log of one linker run, JSON-serializable."""

    def __init__(self):
        self.events: list[dict] = []

    def add(self, phase: str, **fields) -> None:
        event = {"phase": phase}
        event.update(fields)
        self.events.append(event)

    def rounds(self) -> list[dict]:
        return [e for e in self.events if e["phase"] == "adjust-round"]

    def to_json(self) -> str:
        return json.dumps(self.events, indent=2)


@dataclass(frozen=True)
class LinkageCertificate:
    pairs: tuple[tuple[int, int], ...]
    paths: tuple[tuple[int, ...], ...]
    provenance: tuple[dict, ...]

    def to_json(self) -> str:
        return json.dumps({
            "pairs": [list(p) for p in self.pairs],
            "paths": [list(p) for p in self.paths],
            "provenance": list(self.provenance),
        }, indent=2)


@dataclass(frozen=True)
class FailureReport:
    step: str
    reason: str
    details: dict
    hypothesis_note: str
    trace: LinkerTrace

    def to_json(self) -> str:
        return json.dumps({
            "step": self.step,
            "reason": self.reason,
            "details": self.details,
            "hypothesis_note": self.hypothesis_note,
            "trace": self.trace.events,
        }, indent=2, default=str)


class LinkerCheckError(Exception):
    """An asserted invariant failed; carries the step and diagnostics."""

    def __init__(self, step: str, reason: str, **details):
        super().__init__(f"[{step}] {reason}")
        self.step = step
        self.reason = reason
        self.details = details


def _check(cond: bool, step: str, reason: str, **details) -> None:
    if not cond:
        raise LinkerCheckError(step, reason, **details)


@dataclass
class TerminalSplit:
    """Reach sets and the rich/lean partition of the starts."""

    reach: dict[int, tuple[int, ...]]
    rich: tuple[int, ...]
    lean: tuple[int, ...]
    reach_union: tuple[int, ...]  # union of the rich starts' reach sets
    spare_target: int | None  # nearly out-dominating vertex inside the union


def build_dominating_set(d: Digraph, starts: Sequence[int], targets: Sequence[int],
                         k: int, trace: LinkerTrace | None = None) -> list[int]:
    """3k vertices, each nearly in-dominating in the remaining subgraph.

    Vertex i is found in the digraph with the terminals and the previous
    picks removed; the defining property is asserted for every pick.
    """
    excluded = set(starts) | set(targets)
    if d.n < len(excluded) + 3 * k:
        raise ValueError("digraph too small to host the dominating pool")
    pool: list[int] = []
    for _ in range(3 * k):
        remaining = [v for v in range(d.n) if v not in excluded]
        u = find_nearly_in_dominating(d, within=remaining)
        pool.append(u)
        excluded.add(u)
    if trace is not None:
        trace.add("dominating-pool", pool=list(pool))
    return pool


def classify_terminals(d: Digraph, starts: Sequence[int], targets: Sequence[int],
                       pool: Sequence[int], k: int,
                       trace: LinkerTrace | None = None) -> TerminalSplit:
    """Reach sets, rich/lean split, and the spare target inside the union.

    A start's reach set collects its out-neighbours (off terminals and
    pool) that beat at least 2k+1 pool vertices; a start is rich when its
    reach set has at least 7k^2 + 6k + 1 vertices.
    """
    pool_arr = np.asarray(sorted(pool), dtype=np.int64)
    dominator = d.adjacency[:, pool_arr].sum(axis=1) >= 2 * k + 1
    off = np.ones(d.n, dtype=bool)
    off[list(starts)] = False
    off[list(targets)] = False
    off[pool_arr] = False
    reach: dict[int, tuple[int, ...]] = {}
    for x in starts:
        ids = np.flatnonzero(d.adjacency[x] & dominator & off)
        reach[x] = tuple(int(v) for v in ids)
    threshold = 7 * k * k + 6 * k + 1
    rich = tuple(x for x in starts if len(reach[x]) >= threshold)
    lean = tuple(x for x in starts if x not in rich)
    union: set[int] = set()
    for x in rich:
        union.update(reach[x])
    reach_union = tuple(sorted(union))
    spare = find_nearly_out_dominating(d, within=reach_union) if reach_union else None
    if trace is not None:
        trace.add("classify", reach_sizes={int(x): len(reach[x]) for x in starts},
                  rich=list(rich), lean=list(lean), reach_union=len(reach_union),
                  spare_target=spare)
    return TerminalSplit(reach, rich, lean, reach_union, spare)


def initial_path_system(d: Digraph, starts: Sequence[int], targets: Sequence[int],
                        pool: Sequence[int], split: TerminalSplit,
                        trace: LinkerTrace | None = None
                        ) -> tuple[dict[int, Path], Path | None]:
    """Minimum-weight disjoint paths from the pool to the targets.

    With rich starts present a spare target joins the sinks, giving k+1
    paths; otherwise exactly k.  Raises FlowInfeasible (with the cut) when
    the digraph is not connected enough.
    """
    sinks = list(targets)
    if split.rich:
        assert split.spare_target is not None
        sinks.append(split.spare_target)
    system = min_weight_disjoint_paths(d, pool, sinks, count=len(sinks),
                                       forbidden=starts)
    deliveries: dict[int, Path] = {}
    special: Path | None = None
    for p in system:
        if split.rich and p.last == split.spare_target:
            special = p
        else:
            deliveries[p.last] = p
    _check(set(deliveries) == set(targets), "initial-paths",
           "path terminals must cover every target",
           got=sorted(deliveries), want=sorted(targets))
    _check(special is not None or not split.rich, "initial-paths",
           "missing the spare-target path")
    if trace is not None:
        trace.add("initial-paths",
                  inits=sorted(p.first for p in system),
                  total_vertices=system.total_vertices())
    return deliveries, special


@dataclass
class AdjustResult:
    deliveries: dict[int, Path]
    special: Path | None
    matched: dict[int, int]       # rich start -> stand-in (a perfect matching)
    stand_ins: tuple[int, ...]
    retired: tuple[int, ...]
    rounds: int


def _validate_path_state(d: Digraph, starts, targets, pool, split,
                         deliveries: Mapping[int, Path], special: Path | None,
                         matched: Mapping[int, int], stand_ins: set[int],
                         step: str) -> None:
    paths = list(deliveries.values()) + ([special] if special is not None else [])
    try:
        PathSystem(paths)
    except ValueError as exc:
        raise LinkerCheckError(step, f"paths not disjoint: {exc}")
    pool_set = set(pool)
    occupied = {v for p in paths for v in p.vertices}
    for p in paths:
        _check(p.first in pool_set, step, "path must start in the pool",
               path=list(p.vertices))
        _check(not (set(p.vertices[1:]) & pool_set), step,
               "pool vertices may appear only as initial vertices",
               path=list(p.vertices))
        _check(not (set(p.vertices) & set(starts)), step,
               "paths must avoid the starts", path=list(p.vertices))
        shortcut_free = reduce_to_minimal_path(d, p)
        _check(shortcut_free.vertices == p.vertices, step,
               "path is not minimal", path=list(p.vertices))
    for y in targets:
        _check(y in deliveries and deliveries[y].last == y, step,
               "every target needs its delivery", target=y)
    if special is not None:
        _check(special.last in set(split.reach_union), step,
               "special terminal must lie in the reach union")
    _check(len(set(matched.values())) == len(matched), step,
           "stand-in matching must be injective")
    _check(set(matched.values()) == stand_ins, step,
           "stand-in bookkeeping out of sync")
    _check(not (stand_ins & occupied), step,
           "stand-ins must stay off the path system")
    for x, s in matched.items():
        _check(d.has_arc(x, s), step, "matching arc missing", arc=(x, s))
        _check(s in split.reach[x], step, "stand-in outside the reach set",
               start=x, stand_in=s)


def adjust_paths(d: Digraph, starts, targets, pool, split: TerminalSplit,
                 deliveries: dict[int, Path], special: Path | None,
                 trace: LinkerTrace | None = None) -> AdjustResult:
    """The iterative path-adjustment program.

    Greedily matches rich starts to fresh reachable vertices; whenever no
    fresh vertex remains for some unmatched rich start, one reroute round
    releases a reachable vertex from the paths.  Per round the retired set
    grows by at most 7k+6, the candidate set stays non-empty, and the whole
    program runs at most one round per rich start; all of this is asserted.
    """
    k = len(starts)
    matched: dict[int, int] = {}
    stand_ins: set[int] = set()
    retired: set[int] = set()
    rounds = 0
    deliveries = dict(deliveries)
    if not split.rich:
        if trace is not None:
            trace.add("adjust-skip", reason="no rich starts")
        return AdjustResult(deliveries, special, matched, (), (), 0)
    assert special is not None
    reach_union = set(split.reach_union)
    union_arr = tuple(sorted(reach_union))

    def qstar_paths() -> list[Path]:
        return list(deliveries.values()) + [special]

    while True:
        # Greedy matching into vertices off the path system.
        progress = True
        while progress:
            progress = False
            occupied = {v for p in qstar_paths() for v in p.vertices}
            for x in split.rich:
                if x in matched:
                    continue
                fresh = sorted(set(split.reach[x]) - occupied - stand_ins)
                if fresh:
                    matched[x] = fresh[0]
                    stand_ins.add(fresh[0])
                    if trace is not None:
                        trace.add("match", start=int(x), stand_in=int(fresh[0]))
                    progress = True
        if len(matched) == len(split.rich):
            break

        rounds += 1
        _check(rounds <= len(split.rich), "adjust",
               "more reroute rounds than rich starts", rounds=rounds)
        spare = special.last
        hungry = [x for x in split.rich if x not in matched]
        scope = set()
        for x in hungry:
            scope.update(split.reach[x])
        scope -= retired | stand_ins
        # The current spare can sit inside the reach union but is never a
        # candidate for the next one.
        scope.discard(spare)
        # Goodness of the scope for the current spare terminal, within the
        # reach union.  The spare was chosen nearly out-dominating there, so
        # at most 4k+4 scope vertices may fail; assert it.
        scores = goodness_scores(d, spare, "out", _mask(d.n, union_arr))
        good = {v for v in scope if scores[v] >= 2 * k + 2}
        bad = scope - good
        _check(len(bad) <= 4 * k + 4, "adjust",
               "too many scope vertices badly linked to the spare terminal",
               bad=len(bad), allowed=4 * k + 4)
        before = len(retired)
        retired.add(spare)
        retired |= bad
        retired |= stand_ins
        guards: set[int] = set()
        for p in qstar_paths():
            onpath = [v for v in p.vertices if v in good]
            guards.update(onpath[-2:])
        retired |= guards
        # 4k+4 bad + at most k-1 stand-ins mid-run + 2(k+1) guards + the
        # spare itself: at most 7k+6 new retirees.
        growth = len(retired) - before
        _check(growth <= 7 * k + 6, "adjust", "retired set grew too fast",
               growth=growth, allowed=7 * k + 6)
        cand = scope - retired
        _check(bool(cand), "adjust", "no candidate left for the next spare",
               scope=len(scope))
        next_spare = find_nearly_out_dominating(d, within=sorted(cand))

        host_key = None
        for key, p in [(y, q) for y, q in deliveries.items()] + [("special", special)]:
            if next_spare in p.vertices:
                host_key = key
                break
        _check(host_key is not None, "adjust",
               "candidate spare must sit on the path system", vertex=next_spare)
        host = special if host_key == "special" else deliveries[host_key]
        after = [v for v in host.vertices[host.index_of(next_spare) + 1:] if v in good]
        _check(len(after) >= 2, "adjust",
               "need two well-linked vertices after the next spare",
               found=len(after))
        released_holder, reconnect = after[0], after[1]
        donors = [x for x in hungry if released_holder in split.reach[x]]
        _check(bool(donors), "adjust", "released vertex serves no hungry start")
        donor = min(donors)

        try:
            case, new_special, updates = _reroute(
                d, deliveries, special, host_key, host, spare, next_spare,
                reconnect, stand_ins, reach_union, k)
        except ValueError as exc:
            raise LinkerCheckError("adjust", f"reroute splice failed: {exc}",
                                   case_host=str(host_key)) from exc
        prev_inits = sorted(p.first for p in qstar_paths())
        for key, path in updates.items():
            path = reduce_to_minimal_path(d, path)
            if key == "special":
                special = path
            else:
                deliveries[key] = path
        special = reduce_to_minimal_path(d, new_special)
        matched[donor] = released_holder
        stand_ins.add(released_holder)
        if trace is not None:
            trace.add("adjust-round", round=rounds, case=case,
                      spare=int(spare), next_spare=int(next_spare),
                      host="special" if host_key == "special" else int(host_key),
                      released=int(released_holder), donor=int(donor),
                      retired_growth=growth, retired_total=len(retired),
                      candidates=len(cand), scope=len(scope),
                      inits_before=prev_inits,
                      inits_after=sorted(p.first for p in qstar_paths()))
        _validate_path_state(d, starts, targets, pool, split, deliveries,
                             special, matched, stand_ins, "adjust")

    _validate_path_state(d, starts, targets, pool, split, deliveries, special,
                         matched, stand_ins, "adjust-final")
    if trace is not None:
        trace.add("adjust-done", rounds=rounds,
                  stand_ins=sorted(stand_ins), retired=len(retired))
    return AdjustResult(deliveries, special, matched,
                        tuple(sorted(stand_ins)), tuple(sorted(retired)), rounds)


def _mask(n: int, ids: Iterable[int]) -> np.ndarray:
    m = np.zeros(n, dtype=bool)
    m[list(ids)] = True
    return m


def _reroute(d: Digraph, deliveries: dict[int, Path], special: Path,
             host_key, host: Path, spare: int, next_spare: int, reconnect: int,
             stand_ins: set[int], reach_union: set[int], k: int):
    """Execute one reroute, returning (case, new_special, path updates).

    The segment of the host strictly after ``next_spare`` up to the
    reconnect point is released from the system; the host's prefix becomes
    the new special path.
    """
    if host_key == "special":
        # The candidate sits on the special path itself: trim it and release
        # everything behind.
        return "truncate", host.subpath(d, host.first, next_spare), {}

    prefix = host.subpath(d, host.first, next_spare)
    suffix = host.subpath(d, reconnect, host.last)
    if d.has_arc(spare, reconnect):
        new_host = Path(d, special.vertices + suffix.vertices)
        return "arc", prefix, {host_key: new_host}

    two_arc = {int(w) for w in
               np.flatnonzero(d.adjacency[spare] & d.adjacency[:, reconnect])}
    middles = sorted((reach_union & two_arc) - {spare, reconnect})
    _check(len(middles) >= 2 * k + 2, "adjust",
           "well-linked vertex lost its two-arc connections",
           middles=len(middles))
    usable = [w for w in middles if w not in stand_ins]
    occupied = {v for p in list(deliveries.values()) + [special] for v in p.vertices}
    fresh = [w for w in usable if w not in occupied]
    if fresh:
        w = fresh[0]
        new_host = Path(d, special.vertices + (w,) + suffix.vertices)
        return "fresh-middle", prefix, {host_key: new_host}

    # Every usable middle sits on the path system; find a path other than
    # the host carrying two of them.
    carrier_key = None
    keys = sorted(deliveries) + ["special"]
    for key in keys:
        if key == host_key:
            continue
        p = special if key == "special" else deliveries[key]
        hits = [v for v in p.vertices if v in usable]
        if len(hits) >= 2:
            carrier_key = key
            r1, r2 = hits[0], hits[1]
            break
    if carrier_key is not None:
        if carrier_key == "special":
            new_host = Path(d, special.subpath(d, special.first, r1).vertices
                            + suffix.vertices)
            return "carrier-special", prefix, {host_key: new_host}
        carrier = deliveries[carrier_key]
        new_carrier = Path(d, special.vertices
                           + carrier.subpath(d, r2, carrier.last).vertices)
        new_host = Path(d, carrier.subpath(d, carrier.first, r1).vertices
                        + suffix.vertices)
        return "carrier", prefix, {host_key: new_host, carrier_key: new_carrier}

    # All multi-middle paths are the host itself; use a middle behind the
    # reconnect point and skip the reconnect vertex entirely.
    tail = host.vertices[host.index_of(reconnect) + 1:]
    behind = [w for w in tail if w in usable]
    _check(bool(behind), "adjust", "no reroute strategy applies",
           reconnect=reconnect)
    w = behind[0]
    new_host = Path(d, special.vertices + host.subpath(d, w, host.last).vertices)
    return "host-middle", prefix, {host_key: new_host}


def finalize_deliveries(d: Digraph, starts, pool, deliveries: dict[int, Path],
                        stand_ins: Iterable[int],
                        trace: LinkerTrace | None = None) -> dict[int, Path]:
    """Drop the special path and shrink the deliveries to a local fixpoint.

    Two swap rules apply until exhaustion, each strictly reducing the total
    vertex count: restart a path from an unused pool vertex that beats its
    third-or-later vertex, or from an unused pool vertex via one fresh
    middle into its fourth-or-later vertex.
    """
    paths = dict(deliveries)
    pool_set = set(pool)
    banned = set(starts) | set(stand_ins) | pool_set
    swaps = 0
    changed = True
    while changed:
        changed = False
        occupied = {v for p in paths.values() for v in p.vertices}
        free_pool = sorted(pool_set - occupied)
        for y in sorted(paths):
            p = paths[y]
            for pos in range(2, len(p.vertices)):
                v = p.vertices[pos]
                entry = [u for u in free_pool if d.has_arc(u, v)]
                if entry:
                    paths[y] = reduce_to_minimal_path(
                        d, Path(d, (entry[0],) + p.vertices[pos:]))
                    swaps += 1
                    changed = True
                    break
            if changed:
                break
            for pos in range(3, len(p.vertices)):
                w = p.vertices[pos]
                hop = None
                for u in free_pool:
                    mids = np.flatnonzero(d.adjacency[u] & d.adjacency[:, w])
                    mids = [int(m) for m in mids
                            if m not in occupied and m not in banned]
                    if mids:
                        hop = (u, mids[0])
                        break
                if hop is not None:
                    u, m = hop
                    paths[y] = reduce_to_minimal_path(
                        d, Path(d, (u, m) + p.vertices[pos:]))
                    swaps += 1
                    changed = True
                    break
            if changed:
                break
    if trace is not None:
        trace.add("finalize", swaps=swaps,
                  total_vertices=sum(len(p.vertices) for p in paths.values()))
    return paths


def build_launches(d: Digraph, starts, targets, pool, split: TerminalSplit,
                   matched: Mapping[int, int], deliveries: Mapping[int, Path],
                   k: int, trace: LinkerTrace | None = None
                   ) -> dict[int, Path]:
    """Per start, a path of length <= 2 ending at a launch terminal.

    Rich starts go start -> stand-in -> pool vertex (the second hop is a
    maximum bipartite matching into the pool vertices unused by the
    deliveries); lean starts launch in place.  Asserts disjointness from
    the deliveries and that every launch terminal has at least 25k
    out-neighbours (off terminals and pool) that some unused pool vertex
    beats.
    """
    occupied = {v for p in deliveries.values() for v in p.vertices}
    free_pool = sorted(set(pool) - occupied)
    stand_list = sorted(matched.values())
    pairing = _bipartite_matching(
        d, stand_list, free_pool)
    _check(len(pairing) == len(stand_list), "launches",
           "stand-ins cannot all be matched into the free pool",
           matched=len(pairing), needed=len(stand_list))
    launches: dict[int, Path] = {}
    for x in starts:
        if x in matched:
            s = matched[x]
            launches[x] = Path(d, (x, s, pairing[s]))
        else:
            launches[x] = Path(d, (x,))
    system = PathSystem(list(launches.values()))  # validates disjointness
    overlap = system.vertex_set() & occupied
    _check(not overlap, "launches", "launches collide with deliveries",
           overlap=sorted(overlap))

    inits = {p.first for p in deliveries.values()}
    anchors = np.asarray(sorted(set(pool) - inits), dtype=np.int64)
    off = np.ones(d.n, dtype=bool)
    off[list(starts)] = False
    off[list(targets)] = False
    off[list(pool)] = False
    anchored = d.adjacency[anchors].any(axis=0) if anchors.size else np.zeros(d.n, bool)
    for x, p in launches.items():
        terminal = p.last
        count = int(np.count_nonzero(d.adjacency[terminal] & off & anchored))
        _check(count >= 25 * k, "launches",
               "launch terminal has too few anchored out-neighbours",
               start=int(x), terminal=int(terminal), count=count,
               required=25 * k)
    if trace is not None:
        trace.add("launches", terminals={int(x): int(p.last)
                                         for x, p in launches.items()})
    return launches


def _bipartite_matching(d: Digraph, left: Sequence[int], right: Sequence[int]
                        ) -> dict[int, int]:
    """Maximum matching left->right along arcs of d (lowest-id augmenting)."""
    right = list(right)
    r_index = {v: i for i, v in enumerate(right)}
    match_of_right: list[int | None] = [None] * len(right)
    adj = {u: [v for v in right if d.has_arc(u, v)] for u in left}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adj[u]:
            i = r_index[v]
            if i in seen:
                continue
            seen.add(i)
            if match_of_right[i] is None or augment(match_of_right[i], seen):
                match_of_right[i] = u
                return True
        return False

    for u in left:
        augment(u, set())
    result: dict[int, int] = {}
    for i, u in enumerate(match_of_right):
        if u is not None:
            result[u] = right[i]
    return result


def build_bridges(d: Digraph, pairs, launches: Mapping[int, Path],
                  deliveries: Mapping[int, Path], starts, targets, pool,
                  k: int, trace: LinkerTrace | None = None) -> dict[int, Path]:
    """Connect each launch terminal to its delivery's initial vertex.

    Bridges have length at most 3, are built one pair at a time in pair
    order, and their interiors avoid the launches, the deliveries and all
    earlier bridges.  Chosen shortest-first with lowest-id tie-breaking.
    """
    blocked = {v for p in deliveries.values() for v in p.vertices}
    blocked |= {v for p in launches.values() for v in p.vertices}
    inits = {p.first for p in deliveries.values()}
    anchors = np.asarray(sorted(set(pool) - inits), dtype=np.int64)
    off_sets = np.ones(d.n, dtype=bool)
    off_sets[list(starts)] = False
    off_sets[list(targets)] = False
    off_sets[list(pool)] = False
    anchored = d.adjacency[anchors].any(axis=0) if anchors.size else np.zeros(d.n, bool)
    bridges: dict[int, Path] = {}
    adj = d.adjacency
    for x, y in pairs:
        p, q = launches[x].last, deliveries[y].first
        allowed = np.ones(d.n, dtype=bool)
        allowed[sorted(blocked)] = False
        stats = {
            "anchored_out": int(np.count_nonzero(adj[p] & off_sets & anchored)),
            "free_middles": int(np.count_nonzero(adj[p] & adj[:, q] & allowed)),
        }
        bridge = None
        if adj[p, q]:
            bridge = Path(d, (p, q))
        if bridge is None:
            mids = np.flatnonzero(adj[p] & adj[:, q] & allowed)
            if mids.size:
                bridge = Path(d, (p, int(mids[0]), q))
        if bridge is None:
            firsts = np.flatnonzero(adj[p] & allowed)
            seconds = adj[:, q] & allowed
            for v in firsts:
                ws = np.flatnonzero(adj[v] & seconds)
                ws = ws[ws != v]
                if ws.size:
                    bridge = Path(d, (p, int(v), int(ws[0]), q))
                    break
        _check(bridge is not None, "bridges",
               "no connector of length <= 3 for this pair",
               start=int(x), target=int(y), **stats)
        bridges[x] = bridge
        blocked |= set(bridge.interior())
        if trace is not None:
            trace.add("bridge", start=int(x), target=int(y),
                      path=list(bridge.vertices), **stats)
    return bridges


def _hypothesis_post_mortem(d: Digraph, k: int, sample_pairs: int = 30) -> str:
    """Cheap classification of a failure: hypothesis violation vs defect."""
    need_degree = 7 * k * k + 36 * k
    degree = d.min_out_degree()
    if degree < need_degree:
        return (f"hypothesis violated: min out-degree {degree} < {need_degree}")
    need_conn = 2 * k + 1
    rng = np.random.Generator(np.random.PCG64(0))
    for _ in range(sample_pairs):
        u, v = map(int, rng.integers(0, d.n, size=2))
        if u == v:
            continue
        cut = local_cut(d, u, v, cap=need_conn)
        if cut.value < need_conn:
            return (f"hypothesis violated: pair ({u}, {v}) has cut "
                    f"{cut.value} < {need_conn}")
    return ("hypotheses hold on sampled evidence; "
            "a failed step indicates an implementation defect")


def check_hypotheses(d: Digraph, k: int, mode: str = "exact",
                     seed: int = 0) -> tuple[bool, str]:
    """Check min out-degree (exact) and (2k+1)-connectivity (exact/sampled)."""
    need_degree = 7 * k * k + 36 * k
    degree = d.min_out_degree()
    if degree < need_degree:
        return False, f"min out-degree {degree} < {need_degree}"
    need = 2 * k + 1
    if mode == "exact":
        if not is_k_connected(d, need):
            return False, f"not {need}-connected"
        return True, f"min out-degree {degree}, {need}-connected (exact)"
    if mode.startswith("sample:"):
        pairs = int(mode.split(":", 1)[1])
        rng = np.random.Generator(np.random.PCG64(seed))
        checked = 0
        while checked < pairs:
            u, v = map(int, rng.integers(0, d.n, size=2))
            if u == v:
                continue
            if local_cut(d, u, v, cap=need).value < need:
                return False, f"pair ({u}, {v}) has cut below {need}"
            checked += 1
        return True, f"min out-degree {degree}, {need}-connectivity sampled ok"
    raise ValueError(f"unknown hypothesis-check mode {mode!r}")


def link(instance: LinkageInstance, check: str | None = None,
         trace: LinkerTrace | None = None) -> LinkageCertificate | FailureReport:
    """Produce disjoint paths for every terminal pair, or a failure report.

    ``check`` optionally verifies the sufficient conditions up front
    ("exact" or "sample:N").  The returned certificate has been validated
    by the independent verifier before it is handed back.
    """
    d = instance.d
    if not is_semicomplete(d):
        raise ValueError("the linker requires a semicomplete digraph")
    trace = trace if trace is not None else LinkerTrace()
    k = instance.k
    pairs = instance.pairs
    starts, targets = instance.starts, instance.targets
    if check is not None:
        ok, note = check_hypotheses(d, k, check)
        trace.add("hypotheses", ok=ok, note=note)
        if not ok:
            return FailureReport("hypothesis-check", note, {}, note, trace)
    try:
        pool = build_dominating_set(d, starts, targets, k, trace)
        _check(is_nearly_in_dominating_set(
            d.delete(list(starts) + list(targets)),
            _relabel(d, starts, targets, pool)),
            "dominating-pool", "pool must be nearly in-dominating off the terminals")
        split = classify_terminals(d, starts, targets, pool, k, trace)
        try:
            deliveries, special = initial_path_system(d, starts, targets, pool,
                                                      split, trace)
        except FlowInfeasible as exc:
            return FailureReport(
                "initial-paths",
                f"only {exc.achieved} disjoint pool-to-target paths exist",
                {"cut": sorted(exc.cut.separator)},
                _hypothesis_post_mortem(d, k), trace)
        adjusted = adjust_paths(d, starts, targets, pool, split,
                                deliveries, special, trace)
        finals = finalize_deliveries(d, starts, pool, adjusted.deliveries,
                                     adjusted.stand_ins, trace)
        launches = build_launches(d, starts, targets, pool, split,
                                  adjusted.matched, finals, k, trace)
        bridges = build_bridges(d, pairs, launches, finals, starts, targets,
                                pool, k, trace)
        paths = []
        provenance = []
        for x, y in pairs:
            whole = launches[x].join(d, bridges[x]).join(d, finals[y])
            paths.append(whole.vertices)
            provenance.append({
                "start": int(x), "target": int(y),
                "launch": list(launches[x].vertices),
                "bridge": list(bridges[x].vertices),
                "delivery": list(finals[y].vertices),
            })
        try:
            verify_linkage_certificate(d, pairs, paths)
        except CertificateError as exc:
            raise LinkerCheckError("certificate", str(exc))
        trace.add("done", lengths=[len(p) - 1 for p in paths])
        return LinkageCertificate(pairs, tuple(paths), tuple(provenance))
    except LinkerCheckError as exc:
        return FailureReport(exc.step, exc.reason, exc.details,
                             _hypothesis_post_mortem(d, k), trace)


def _relabel(d: Digraph, starts, targets, pool) -> list[int]:
    """Map pool ids into the id space of d minus the terminals."""
    removed = sorted(set(starts) | set(targets))
    shift = np.zeros(d.n, dtype=np.int64)
    for r in removed:
        shift[r + 1:] += 1
    return [int(v - shift[v]) for v in pool]
