"""Build a few small power graphs and look at them.

Run with ``python3 demos/01_small_power_graphs.py``.
"""

import numpy as np

from powerlab import parse_group, power_graph
from powerlab.invariants import analyze, components

# Z_6 is stored as C2xC3; residues give the familiar integer names.
c6 = parse_group("6")
g = power_graph(c6)
names = {v: c6.residue_of(int(e)) for v, e in enumerate(g.element_ids)}
print(g)
for u, v in g.edges():
    print(f"  {names[u]} -- {names[v]}")

# degrees by element order: generators (order 6) see everything
for k in (2, 3, 6):
    vs = g.vertices_of_order(k)
    print(f"order {k}: residues {[names[v] for v in vs]}, degrees {g.degrees[vs].tolist()}")

# The Klein group has no edges at all once the identity is gone.
print(power_graph("2,2"), "components:", len(components(power_graph("2,2"))))

# C3xC3: four subgroups of order 3, each contributing one K2
comps = components(power_graph("3,3"))
print("C3xC3 component sizes:", [len(c) for c in comps])

# adjacency matrix of P*(C4) is the all-ones matrix minus the identity
print(power_graph("4").adjacency.toarray())
assert (power_graph("4").adjacency.toarray() == 1 - np.eye(3, dtype=np.int8)).all()

print(analyze(power_graph("12")).to_text())
