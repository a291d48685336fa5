"""Vertex rankings and the bijection between G-parking functions and colored spanning trees.

A ranking ``tau`` is a sequence of length ``n`` with ``tau[v - 1]`` the rank of
vertex ``v``; smaller ranks are processed first. ``None`` means the identity.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import GraphError, NotParkingError, RankingError, RootValueError
from .graph import Multigraph

Ranking = Optional[Sequence[int]]


# -- rankings ---------------------------------------------------------------

def identity_ranking(n: int) -> tuple[int, ...]:
    return tuple(range(1, n + 1))


def reversed_ranking(n: int) -> tuple[int, ...]:
    return tuple(range(n, 0, -1))


def all_rankings(n: int) -> Iterator[tuple[int, ...]]:
    return itertools.permutations(range(1, n + 1))


def check_ranking(tau: Ranking, n: int) -> tuple[int, ...]:
    if tau is None:
        return identity_ranking(n)
    tau = tuple(int(t) for t in tau)
    if sorted(tau) != list(range(1, n + 1)):
        raise RankingError(f"ranking {tau} is not a permutation of 1..{n}")
    return tau


def rank_vector(tau: Ranking, n: int) -> tuple[int, ...]:
    """Ranks indexed by vertex, with the root ranked 0."""
    return (0,) + check_ranking(tau, n)


def restrict_ranking(tau: Ranking, n: int, removed: int) -> tuple[int, ...]:
    """Ranking on the graph left after vertex ``removed`` is merged away.

    Relative order of the surviving vertices is kept and ranks are compressed
    back to ``1 .. n - 1``.
    """
    tau = check_ranking(tau, n)
    kept = [t for v, t in enumerate(tau, start=1) if v != removed]
    order = sorted(kept)
    return tuple(order.index(t) + 1 for t in kept)


# -- data -------------------------------------------------------------------

@dataclass(frozen=True)
class VertexOrder:
    """Processing order ``(v_1, ..., v_n)`` of the non-root vertices."""

    order: tuple[int, ...]

    @property
    def position(self) -> dict[int, int]:
        pos = {v: i for i, v in enumerate(self.order, start=1)}
        pos[0] = 0
        return pos

    def with_root(self) -> tuple[int, ...]:
        return (0,) + self.order

    def __getitem__(self, i: int) -> int:
        """1-based access, ``order[0]`` is the root."""
        return self.with_root()[i]

    def __len__(self):
        return len(self.order)


@dataclass(frozen=True)
class ColoredSpanningTree:
    """Spanning tree rooted at 0; ``parent[0]`` and ``color[0]`` are ``-1``."""

    parent: tuple[int, ...]
    color: tuple[int, ...]

    def triples(self) -> list[tuple[int, int, int]]:
        return [(v, self.parent[v], self.color[v]) for v in range(1, len(self.parent))]

    def to_json(self) -> str:
        return json.dumps([list(t) for t in self.triples()])

    @classmethod
    def from_triples(cls, triples: Iterable[Sequence[int]], vertex_count: int) -> "ColoredSpanningTree":
        parent = [-1] * vertex_count
        color = [-1] * vertex_count
        for item in triples:
            v, p, c = (int(x) for x in item)
            if not 0 < v < vertex_count or parent[v] != -1:
                raise GraphError(f"bad or repeated tree vertex {v}")
            parent[v], color[v] = p, c
        return cls(tuple(parent), tuple(color))

    def children(self) -> dict[int, list[int]]:
        kids: dict[int, list[int]] = {v: [] for v in range(len(self.parent))}
        for v in range(1, len(self.parent)):
            kids[self.parent[v]].append(v)
        return kids


def validate_tree(G: Multigraph, T: ColoredSpanningTree) -> None:
    k = G.vertex_count
    if len(T.parent) != k or len(T.color) != k:
        raise GraphError("tree does not cover the vertex set")
    for v in range(1, k):
        p, c = T.parent[v], T.color[v]
        if not 0 <= p < k or p == v:
            raise GraphError(f"vertex {v} has an invalid parent {p}")
        if not 0 <= c < G.mu[v][p]:
            raise GraphError(f"edge {{{v},{p}}}_{c} is not in the graph")
    # every vertex must reach the root without revisiting
    for v in range(1, k):
        seen = set()
        while v != 0:
            if v in seen:
                raise GraphError("parent links contain a cycle")
            seen.add(v)
            v = T.parent[v]


# -- Algorithm A ------------------------------------------------------------

def _run_a(G: Multigraph, rank: Sequence[int], f: Sequence[int]):
    """Core of the parking-to-tree map.

    Returns ``(parent, color, order)`` or ``None`` when the queue runs dry
    before every vertex is processed.
    """
    k = G.vertex_count
    mu = G.mu
    val = list(f)
    parent = [-1] * k
    color = [-1] * k
    done = [False] * k
    queued = [False] * k
    queued[0] = True
    queue = {0}
    order = []
    while queue:
        v = min(queue, key=rank.__getitem__)
        queue.discard(v)
        done[v] = True
        if v:
            order.append(v)
        row = mu[v]
        for w in range(1, k):
            m = row[w]
            if not m or done[w] or queued[w]:
                continue
            if 0 <= val[w] < m:
                parent[w], color[w] = v, val[w]
                queued[w] = True
                queue.add(w)
            elif val[w] >= m:
                val[w] -= m
    if len(order) != k - 1:
        return None
    return parent, color, order


def _check_root(f: Sequence[int], G: Multigraph) -> None:
    if len(f) != G.vertex_count:
        raise NotParkingError(f"labeling has {len(f)} values, graph has {G.vertex_count} vertices")
    if f[0] != -1:
        raise RootValueError(f"root value is {f[0]}, expected -1")


def algorithm_a(G: Multigraph, tau: Ranking, f: Sequence[int]) -> tuple[ColoredSpanningTree, VertexOrder]:
    """Map a G-parking function to its colored spanning tree and processing order."""
    _check_root(f, G)
    out = _run_a(G, rank_vector(tau, G.n), f)
    if out is None:
        raise NotParkingError("not a G-parking function")
    parent, color, order = out
    parent[0] = color[0] = -1
    return ColoredSpanningTree(tuple(parent), tuple(color)), VertexOrder(tuple(order))


def parking_to_tree(G: Multigraph, tau: Ranking, f: Sequence[int]) -> ColoredSpanningTree:
    return algorithm_a(G, tau, f)[0]


# -- Algorithm B ------------------------------------------------------------

def tree_order(G: Multigraph, tau: Ranking, T: ColoredSpanningTree) -> VertexOrder:
    """Order in which the inverse map visits the vertices of ``T``.

    The next vertex is the lowest-ranked one hanging off the explored part.
    """
    rank = rank_vector(tau, G.n)
    kids = T.children()
    frontier = set(kids[0])
    order = []
    while frontier:
        v = min(frontier, key=rank.__getitem__)
        frontier.discard(v)
        order.append(v)
        frontier.update(kids[v])
    return VertexOrder(tuple(order))


def theta_parking(G: Multigraph, tau: Ranking, T: ColoredSpanningTree) -> tuple[int, ...]:
    """Inverse of :func:`algorithm_a`: colored spanning tree to G-parking function.

    ``f(v)`` is the color of the tree edge above ``v`` plus the number of edges
    (with multiplicity) from ``v`` to vertices processed strictly before its
    parent.
    """
    validate_tree(G, T)
    pos = tree_order(G, tau, T).position
    f = [-1] * G.vertex_count
    for v in range(1, G.vertex_count):
        cut = pos[T.parent[v]]
        f[v] = T.color[v] + sum(m for w, m in enumerate(G.mu[v]) if w != v and pos[w] < cut)
    return tuple(f)


tree_to_parking = theta_parking


# -- Ord / Rea --------------------------------------------------------------

def ord_(G: Multigraph, tau: Ranking, f: Sequence[int]) -> VertexOrder:
    return algorithm_a(G, tau, f)[1]


def rea(G: Multigraph, tau: Ranking, f: Sequence[int]) -> tuple[int, ...]:
    """``f`` read along its processing order, with the root's -1 in front."""
    order = ord_(G, tau, f)
    return (-1,) + tuple(f[v] for v in order.order)
