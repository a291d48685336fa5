"""
Classical parking functions
===========================

On the complete graph ``K_{n+1}`` the G-parking functions are the classical
ones, and the bridge vertices are the critical maxima.
"""

# %%
from gparking import complete_graph
from gparking.classical import critical_maxima, embed_classical, enumerate_classical, tutte_complete
from gparking.criticality import ParkingTable
from gparking.tutte import tutte_delcon

for alpha in enumerate_classical(3):
    crit = sorted(critical_maxima(alpha))
    print(alpha, "critical maxima at", crit, "cm =", len(crit))

# %%
for n in range(1, 6):
    print(n, len(enumerate_classical(n)), (n + 1) ** (n - 1))

# %%
table = ParkingTable(complete_graph(4))
same = all(critical_maxima(a) == table.bridge_vertices(embed_classical(a)) for a in enumerate_classical(3))
print("critical maxima == bridge vertices:", same)
print("T_K4 =", tutte_complete(3))
print("check:", tutte_complete(3) == tutte_delcon(complete_graph(4)))
