"""Linking terminal pairs constructively, with a full audit trail.

The linker routes each pair start -> stand-in -> pool -> ... -> target in
three layers (launch, bridge, delivery).  On abundant digraphs the greedy
matching never stalls; the hand-built stress instance below starves it on
purpose, forcing the reroute machinery to free a vertex from the delivery
paths.  The returned certificate is re-verified by an independent checker
before it is handed back.
"""

from semilink import (LinkageInstance, LinkerTrace, link,
                      near_regular_tournament, verify_linkage_certificate)
from semilink.instances import adjustment_stress_instance

# A regular tournament big enough for two pairs: business as usual.
d = near_regular_tournament(251, seed=1)
pairs = ((0, 100), (7, 200))
outcome = link(LinkageInstance(d, pairs), check="sample:40")
print("n=251, two pairs ->", type(outcome).__name__)
for entry in outcome.provenance:
    print(f"  {entry['start']} -> {entry['target']}: launch {entry['launch']}"
          f" bridge {entry['bridge']} delivery {entry['delivery']}")
verify_linkage_certificate(d, pairs, outcome.paths)

# The stress instance: the cheapest delivery paths swallow the entire
# reach set of the single rich start, so a reroute round must fire.
d, pairs = adjustment_stress_instance()
trace = LinkerTrace()
outcome = link(LinkageInstance(d, pairs), trace=trace)
print("\nstress instance:")
for event in trace.events:
    if event["phase"] == "adjust-round":
        print(f"  reroute round {event['round']}: case={event['case']}, "
              f"released vertex {event['released']}, retired grew by "
              f"{event['retired_growth']}")
print("  final path:", list(outcome.paths[0]))
