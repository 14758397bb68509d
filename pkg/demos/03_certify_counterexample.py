"""
Certifying the counterexample
=============================

Six checks in a row.  The two negative answers come from exhaustive search,
so they are the expensive part; both finish in a few seconds.
"""

from hcoloring.catalog import build_g_star
from hcoloring.cli import certify
from hcoloring.hcolor import SolveOptions

rows = certify(build_g_star().graph, SolveOptions(time_limit=1800))
for r in rows:
    nodes = f"  ({r['nodes']} nodes, {r['seconds']}s)" if "nodes" in r else ""
    print(f"{r['check']:26} {r['status']}{nodes}")

###############################################################################
# Same thing from the shell::
#
#     hcolor certify-counterexample --json summary.json
