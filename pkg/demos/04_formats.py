"""
graph6, sparse6 and edge lists
==============================
"""

from hcoloring.catalog import named
from hcoloring.formats import canonical_order, parse_graph, write_edgelist, write_graph6, write_sparse6

print(parse_graph("C~").edges)
print(write_graph6(named("P").graph))

###############################################################################
# Multigraphs need sparse6.  Parsing renumbers edges into the order the
# encoder emits them, so compare against ``canonical_order``.

s10 = named("S10").graph
line = write_sparse6(s10)
print(line)
print(parse_graph(line) == canonical_order(s10))

###############################################################################
# The edge list is the most readable form: an ``n m`` header, then pairs.

print(write_edgelist(named("S4").graph))
