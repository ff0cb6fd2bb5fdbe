"""Generating tournaments and measuring their exact vertex connectivity.

A tournament orients every edge of a complete graph.  The circulant family
(vertex u beats the next (n-1)/2 vertices modulo n) is regular and highly
connected, which makes it a handy connectivity workhorse throughout this
library: its exact connectivity comfortably clears the n/3 floor.
"""

from semilink import (is_tournament, near_regular_tournament,
                      random_tournament, rotational_tournament,
                      transitive_tournament, vertex_connectivity)

# The transitive tournament is the unique acyclic one: a total order.
tt = transitive_tournament(8)
print("transitive tournament on 8 vertices:",
      f"arcs={tt.arc_count}, connectivity={vertex_connectivity(tt)}")

# Circulants are regular; every semidegree equals (n-1)/2.
for n in (7, 9, 15, 21):
    rot = rotational_tournament(n)
    kappa = vertex_connectivity(rot)
    print(f"circulant n={n:2}: out-degrees all {(n - 1) // 2:2}, "
          f"kappa={kappa:2} (floor n//3 = {n // 3})")
    assert kappa >= n // 3

# Random tournaments concentrate around the same connectivity but are not
# regular; score-preserving triangle reversals give random *regular* ones.
plain = random_tournament(101, seed=7)
shuffled = near_regular_tournament(101, seed=7)
print("random tournament n=101: min out-degree", plain.min_out_degree())
print("near-regular shuffle n=101: min out-degree",
      shuffled.min_out_degree(), "(exactly (n-1)/2)")
assert is_tournament(shuffled)
