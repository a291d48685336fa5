"""
The Fig 1 graph, end to end
===========================

Four vertices, root 0, five edges. We list its G-parking functions, the
order in which the parking-to-tree algorithm visits vertices, the critical
and bridge vertices, and finally the Tutte polynomial read off the
``(b, w)`` statistics.
"""

# %%
from gparking import build_multigraph, weight_w
from gparking.criticality import ParkingTable
from gparking.tutte import tutte_delcon, tutte_parking

G = build_multigraph(4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)])
print(G, "edges:", G.total_edges)

# %%
# One row per parking function: value vector, processing order, values read
# in that order, critical vertices.
table = ParkingTable(G)  # identity ranking
for i, f in enumerate(table.functions, start=1):
    order = (0,) + table.order(f)
    rea = (-1,) + table.rea(f)
    crit = sorted(table.critical_vertices(f))
    print(f"f_{i} = {f}  Ord {order}  Rea {rea}  C {crit}")

# %%
# Weak and strong v-identical sets of f_3 = (-1, 0, 0, 2).
f3 = table.functions[2]
label = {f: i for i, f in enumerate(table.functions, start=1)}
for v in (1, 2, 3):
    weak = [label[g] for g in table.weak_identical(f3, v)]
    strong = [label[g] for g in table.strong_identical(f3, v)]
    print(f"v={v}: W={weak}  S={strong}")

# Without the g(v) >= f(v) clause the v=3 sets grow to f_1, f_2, f_3.
# Bridge sets come out the same under both readings.
print([label[g] for g in table.weak_identical(f3, 3, value_floor=False)])

# %%
# Bridge vertices and weights. b counts bridges, w = |E| - |V| - sum(f).
for f in table.functions:
    print(f"{f}  B={sorted(table.bridge_vertices(f))}  (b, w)=({table.b(f)}, {weight_w(G, f)})")

# %%
print("from parking functions:", tutte_parking(G))
print("by deletion-contraction:", tutte_delcon(G))
