"""Planarity of power graphs, with Kuratowski witnesses for the non-planar ones."""

from powerlab import power_graph
from powerlab.planarity import is_planar, planarity_oracle, validate_witness

for spec in ["6", "7", "5,5", "7,7", "2,2,2,3", "2,3,3,3", "4,3,3"]:
    g = power_graph(spec)
    r = is_planar(g)
    line = f"{g.group.name:>12}  n={g.n:<4} m={g.n_edges:<5} planar={r.planar}"
    if r.witness:
        validate_witness(g, r.witness)
        line += f"  {r.witness.kind} on {r.witness.branch_vertices}"
    if g.n_edges <= 60:
        assert planarity_oracle(g) == r.planar
        line += "  (oracle agrees)"
    print(line)

# Degree census for C3xC2xC2: order-2 vertices have degree 2, order-6 degree 4.
g = power_graph("3,2,2")
for k in (2, 3, 6):
    vs = g.vertices_of_order(k)
    print(f"order {k}: {len(vs)} vertices, degrees {sorted(set(g.degrees[vs].tolist()))}")
