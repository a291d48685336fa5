"""
Contracting and deleting the first root edge
============================================

Take the root edge ``e = {0, u}`` with ``u`` the lowest-ranked root
neighbor. Parking functions with ``f(u) = 0`` correspond to those of the
contraction, the rest (shifted down by one at ``u``) to those of the
deletion. Both maps keep ``w``, and they carry bridge sets along.
"""

# %%
from gparking import build_multigraph
from gparking.criticality import (ParkingTable, contracted_setting, distinguished_neighbor,
                                  phi_contract, psi_delete)
from gparking.graph import ColoredEdge, delete_edge
from gparking.parking import weight_w

G = build_multigraph(4, [(0, 1), (0, 3), (1, 2), (1, 3), (2, 3)])
tau = (1, 2, 3)
u = distinguished_neighbor(G, tau)
e = ColoredEdge(0, u, 0)
H, sigma, relabel = contracted_setting(G, tau, e)
D = delete_edge(G, e)
print("contracted:", H)
print("deleted:   ", D)

# %%
table, h_table, d_table = ParkingTable(G, tau), ParkingTable(H, sigma), ParkingTable(D, tau)
for f in table.functions:
    B = sorted(table.bridge_vertices(f))
    if f[u] == 0:
        g = phi_contract(G, e, f)
        Bg = sorted(h_table.bridge_vertices(g))
        print(f"{f} B={B} w={weight_w(G, f)}  -> contraction {g} B={Bg} w={weight_w(H, g)}")
    else:
        g = psi_delete(G, e, f)
        Bg = sorted(d_table.bridge_vertices(g))
        print(f"{f} B={B} w={weight_w(G, f)}  -> deletion    {g} B={Bg} w={weight_w(D, g)}")
