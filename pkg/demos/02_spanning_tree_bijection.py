"""
Parking functions and colored spanning trees
============================================

With parallel edges, a spanning tree has to remember which copy it used.
The map from parking functions to such trees, and its inverse, depend on a
vertex ranking; every ranking gives a bijection.
"""

# %%
from gparking import build_multigraph, count_spanning_trees, enumerate_parking
from gparking.bijection import algorithm_a, all_rankings, theta_parking

# two parallel root edges, a loop, and a triangle
G = build_multigraph(4, [(0, 1), (0, 1), (1, 2), (2, 3), (1, 3), (3, 3)])
fs = enumerate_parking(G)
print(len(fs), "parking functions,", count_spanning_trees(G), "spanning trees")

# %%
# Each tree is printed as (vertex, parent, color) triples.
for f in fs[:6]:
    T, order = algorithm_a(G, None, f)
    print(f, "->", T.triples(), "order", order.with_root())

# %%
# The inverse recovers f for every ranking.
for tau in all_rankings(G.n):
    ok = all(theta_parking(G, tau, algorithm_a(G, tau, f)[0]) == f for f in fs)
    trees = {algorithm_a(G, tau, f)[0] for f in fs}
    print("ranking", tau, "round trip ok:", ok, "distinct trees:", len(trees))
