"""Power graphs of finite abelian groups: construction, invariants, and checks."""

from .groups import (AbelianGroup, GroupElement, add, cyclic_group, cyclic_subgroup,
                     element_order, enumerate_abelian_groups, euler_phi, is_cyclic,
                     is_p_group, parse_group)
from .powergraph import (Graph, PowerGraph, adjacent, adjacent_cyclic_fast,
                         build_power_graph, export_graph, power_graph)

__version__ = "0.1.0"
