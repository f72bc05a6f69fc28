"""Why containment is hard in general: a cycle-matroid gadget.

Take a connected cubic graph, fix a spanning tree, and record which
tree edge lies on which fundamental cycle.  That bipartite record is a
fundamental graph of the cycle matroid, and the input is Hamiltonian
exactly when the record contains a big star as a pivot-minor.  So a
polynomial containment oracle for unbounded targets would decide
Hamiltonicity of cubic graphs.
"""

import json

from pivotminors import (
    complete_multipartite,
    fundamental_graph,
    is_hamiltonian,
    named_graph,
    reduction_roundtrip,
    to_graph6,
)

g = complete_multipartite([3, 3])
print("input: K3,3,", to_graph6(g))

fg = fundamental_graph(g)
print("spanning tree:", fg.tree_edges)
print("fundamental cycles per cotree edge:")
t = len(fg.tree_edges)
for j, edge in enumerate(fg.cotree_edges):
    on_cycle = [fg.tree_edges[i] for i in range(t)
                if fg.graph.has_edge(i, t + j)]
    print(f"  {edge}: {on_cycle}")

ham, cycle = is_hamiltonian(g)
print("Hamiltonian:", ham, "cycle:", cycle)

report = reduction_roundtrip(g)
print("oracle agrees with the direct solver:", report["sides_agree"])

print()
print("full report for the prism:")
print(json.dumps(reduction_roundtrip(named_graph("prism")), indent=2))
