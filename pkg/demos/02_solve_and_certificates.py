"""
Solving for colorings and checking certificates
===============================================

``solve`` returns a verdict, search statistics, and when the answer is yes
an edge map that can be checked on its own.
"""

from hcoloring.catalog import named
from hcoloring.formats import read_certificate, write_certificate
from hcoloring.hcolor import (
    SolveOptions,
    check_observation1,
    compose,
    enumerate_colorings,
    induced_vertex_map,
    solve,
    verify,
)

k33, s10, s12 = (named(x).graph for x in ("K33", "S10", "S12"))

out = solve(k33, s12)
print(out.status, "after", out.stats.nodes, "nodes")
print("edge images:", out.certificate.image)
print("vertex images:", induced_vertex_map(k33, s12, out.certificate).image)

###############################################################################
# A certificate is plain text.  Reading it back re-runs the verifier.

text = write_certificate(out.certificate, "@K33", "@S12", comments=["K33 into S12"])
print(text)
doc = read_certificate(text)
print("round trip ok:", doc.mapping == out.certificate)

###############################################################################
# Colorings compose: K33 -> S12 -> S10.

down = solve(s12, s10).certificate
f = compose(out.certificate, down)
print("composed map verifies:", verify(k33, s10, f).ok)

###############################################################################
# Every coloring must respect some structure: preimages of regular subgraphs
# stay regular, color counts do not go up, bridges go to bridges.

for f in enumerate_colorings(s12, s10, limit=5):
    rep = check_observation1(s12, s10, f)
    print("checked", rep.subgraphs_checked, "subgraphs, passed:", rep.passed)

###############################################################################
# Search order matters for speed, not for the answer.

for heuristic in ("most_constrained", "bfs"):
    o = solve(named("GSTAR").graph, s10, SolveOptions(order_heuristic=heuristic))
    print(f"{heuristic:16} {o.status} nodes={o.stats.nodes}")
