"""Vertex-disjoint path systems and their dual cut certificates.

The flow kernel answers two kinds of question: how many vertex-disjoint
paths run from one vertex set to another (with a separating vertex set as
the certificate when the answer is small), and what is the cheapest way to
route an exact number of disjoint paths, measured in total vertices.
"""

from semilink import (Digraph, local_cut, max_disjoint_paths,
                      min_weight_disjoint_paths, rotational_tournament)

# A bottleneck: both sources must funnel through vertex 2.
bottleneck = Digraph.from_arcs(5, [(0, 2), (1, 2), (2, 3), (2, 4)])
system, cut = max_disjoint_paths(bottleneck, sources=[0, 1], sinks=[3, 4])
print("bottleneck instance:", len(system), "path(s);",
      "separator =", sorted(cut.separator))
assert sorted(cut.separator) == [2]

# In a dense tournament the same query saturates immediately.
rot = rotational_tournament(15)
system, cut = max_disjoint_paths(rot, sources=[0, 1, 2], sinks=[8, 9, 10])
print("circulant n=15:", len(system), "disjoint paths:",
      [list(p.vertices) for p in system])
assert cut is None

# Minimum-weight routing: the cheapest three disjoint paths, counted in
# vertices, with every path individually shortcut-free.
cheap = min_weight_disjoint_paths(rot, [0, 1, 2], [8, 9, 10], count=3)
print("minimum total vertices for 3 paths:", cheap.total_vertices())

# Internally disjoint paths between a single pair, plus the matching cut.
pair = local_cut(rot, 0, 8)
print(f"pair (0, 8): {pair.value} internally disjoint paths "
      f"(direct arc: {pair.direct_arc})")
for p in pair.paths:
    print("   ", list(p.vertices))
