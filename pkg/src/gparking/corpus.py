"""Small multigraph families used for exhaustive and randomized checks."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graph import Multigraph, build_multigraph


def edge_slots(k: int) -> list[tuple[int, int]]:
    """Every vertex pair ``i <= j`` on ``k`` vertices, loops included."""
    return [(i, j) for i in range(k) for j in range(i, k)]


def all_multigraphs(max_vertices: int, max_edges: int, connected: bool = True) -> Iterator[Multigraph]:
    """Every labeled multigraph on 1..max_vertices vertices with at most max_edges edges."""
    for k in range(1, max_vertices + 1):
        slots = edge_slots(k)
        for m in range(max_edges + 1):
            for combo in itertools.combinations_with_replacement(slots, m):
                G = build_multigraph(k, combo)
                if not connected or G.is_connected():
                    yield G


def random_connected_multigraph(rng: random.Random, k: int, max_edges: int) -> Multigraph:
    """Random spanning tree plus random extra edges (loops and parallels allowed)."""
    if max_edges < k - 1:
        raise ValueError("not enough edges to connect the graph")
    perm = list(range(k))
    rng.shuffle(perm)
    edges = [(perm[i], perm[rng.randrange(i)]) for i in range(1, k)]
    slots = edge_slots(k)
    edges += [rng.choice(slots) for _ in range(rng.randint(0, max_edges - len(edges)))]
    return build_multigraph(k, edges)


def three_rankings(n: int, rng: random.Random | None = None) -> list[tuple[int, ...]]:
    """Identity, reversal and one more ranking (distinct when ``n >= 3``)."""
    ident = tuple(range(1, n + 1))
    rev = ident[::-1]
    out = [ident]
    if rev != ident:
        out.append(rev)
    if n >= 3:
        perms = [p for p in itertools.permutations(ident) if p not in out]
        out.append(rng.choice(perms) if rng else perms[0])
    return out
