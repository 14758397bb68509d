"""
The graph catalog and its invariants
====================================

Every named graph is rebuilt from scratch on each call, so ids are stable.
"""

from hcoloring.catalog import NAMES, g_star_edge_partition, build_g_star, named, two_circuit_edges
from hcoloring.multigraph import (
    bridges,
    chromatic_index,
    circuit_lengths,
    edge_induced_subgraph,
    find_perfect_matching,
)

for name in NAMES:
    g = named(name).graph
    print(f"{name:10} n={g.n:2} m={g.m:2} bridges={len(bridges(g))}")

###############################################################################
# The Sylvester graph S10 has three digons hanging off a claw.  Its six
# parallel edges form three disjoint 2-circuits; what is left is a tree.

s10 = named("S10").graph
a1 = two_circuit_edges(s10)
a2 = set(range(s10.m)) - a1
print("2-circuit edges:", sorted(a1))
print("chromatic index of the rest:", chromatic_index(edge_induced_subgraph(s10, a2)))

###############################################################################
# Deleting a vertex of the Petersen graph leaves a graph that still needs
# four colors and whose only even circuits have length 6 or 8.

pv = named("P_MINUS_V").graph
print("chi'(P - v) =", chromatic_index(pv))
print("circuit lengths:", sorted(circuit_lengths(pv)))

###############################################################################
# G* is cubic on 24 vertices, has three bridges and a perfect matching.

gs = build_g_star()
g = gs.graph
print("G*:", g.n, "vertices,", g.m, "edges")
print("bridges:", sorted(bridges(g)), "at", [gs.graph.edges[e] for e in sorted(bridges(g))])
print("perfect matching:", sorted(find_perfect_matching(g)))
print({k: len(v) for k, v in g_star_edge_partition(gs).items()})
