"""
Two routes to the Tutte polynomial
==================================

Summing ``x^b(f) y^w(f)`` over G-parking functions agrees with the classical
deletion-contraction recursion, for every vertex ranking. Here on random
multigraphs with loops and parallel edges.
"""

# %%
import random
import time

from gparking.bijection import all_rankings
from gparking.corpus import random_connected_multigraph
from gparking.tutte import bw_multiset, tutte_delcon, tutte_parking

rng = random.Random(3)
graphs = [random_connected_multigraph(rng, 5, 8) for _ in range(25)]

# %%
start = time.perf_counter()
agree = 0
for G in graphs:
    tau = list(range(1, G.n + 1))
    rng.shuffle(tau)
    agree += tutte_parking(G, tau) == tutte_delcon(G)
print(f"{agree}/{len(graphs)} agree ({time.perf_counter() - start:.2f}s)")

# %%
# The (b, w) multiset itself does not depend on the ranking.
G = graphs[0]
print(G)
multisets = {tuple(sorted(bw_multiset(G, tau).items())) for tau in all_rankings(G.n)}
print("distinct BW multisets over all", sum(1 for _ in all_rankings(G.n)), "rankings:", len(multisets))
print("T =", tutte_delcon(G))
