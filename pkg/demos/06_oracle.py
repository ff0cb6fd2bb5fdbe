"""Ground truth for small instances: exhaustive linkage decisions.

The oracle shares no code with the flow or linker machinery; it is plain
backtracking with reachability pruning and explicit budgets, so ``no``
means the whole search space was exhausted and ``unknown`` means the budget
ran out, never a guess.
"""

from semilink import (Digraph, OracleBudget, exists_disjoint_linkage,
                      max_disjoint_ST_paths_bruteforce, rotational_tournament)

# A directed 4-cycle cannot host two crossing pairs.
square = Digraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
answer = exists_disjoint_linkage(square, [(0, 2), (2, 0)])
print("4-cycle, crossing pairs:", answer.verdict)

# Five-connected circulants answer every 2-linkage query positively.
rot = rotational_tournament(15)
for pairs in ([(0, 7), (3, 11)], [(14, 2), (5, 9)]):
    answer = exists_disjoint_linkage(rot, pairs)
    print(f"circulant n=15 {pairs}: {answer.verdict}, paths "
          f"{[list(p) for p in answer.paths]}")

# Budgets make exhaustion explicit instead of silently wrong.
starved = exists_disjoint_linkage(rot, [(0, 7), (3, 11)],
                                  OracleBudget(node_limit=3))
print("with a 3-node budget:", starved.verdict)

# The set-to-set count agrees with the flow solver (that agreement is one
# of the acceptance criteria, checked over hundreds of random digraphs).
count = max_disjoint_ST_paths_bruteforce(rot.induced(range(10)),
                                         [0, 1, 2], [7, 8, 9])
print("exhaustive disjoint-path count on a 10-vertex slice:", count)
