"""Rooted multigraphs on vertices 0..n with canonically colored parallel edges.

Vertex 0 is always the root. Parallel copies joining ``i`` and ``j`` carry the
colors ``0 .. mu(i, j) - 1``; since every operation here re-canonicalizes
colors, the multiplicity matrix is the whole state of a graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import DisconnectedGraphError, GraphError


class ColoredEdge(NamedTuple):
    u: int
    v: int
    color: int = 0

    @property
    def endpoints(self) -> tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)

    @property
    def is_loop(self) -> bool:
        return self.u == self.v


@dataclass(frozen=True)
class Multigraph:
    """Immutable multigraph stored as a symmetric multiplicity matrix.

    ``mu[i][i]`` is the number of loops at ``i``.
    """

    mu: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.mu)
        if k == 0:
            raise GraphError("a graph needs at least the root vertex")
        for i, row in enumerate(self.mu):
            if len(row) != k:
                raise GraphError("multiplicity matrix must be square")
            for j, m in enumerate(row):
                if m < 0 or m != self.mu[j][i]:
                    raise GraphError(f"bad multiplicity at ({i}, {j})")

    # -- basic shape ------------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return len(self.mu)

    @property
    def n(self) -> int:
        """Number of non-root vertices."""
        return len(self.mu) - 1

    @property
    def vertices(self) -> range:
        return range(len(self.mu))

    @property
    def total_edges(self) -> int:
        k = len(self.mu)
        return sum(self.mu[i][j] for i in range(k) for j in range(i, k))

    def multiplicity(self, i: int, j: int) -> int:
        return self.mu[i][j]

    def loops(self, v: int) -> int:
        return self.mu[v][v]

    def degree(self, v: int) -> int:
        """Degree with each loop contributing two."""
        return sum(self.mu[v]) + self.mu[v][v]

    def neighbors(self, v: int) -> list[int]:
        return [w for w, m in enumerate(self.mu[v]) if m and w != v]

    def edges(self) -> Iterator[ColoredEdge]:
        """Every edge copy, ordered by endpoint pair then color."""
        k = len(self.mu)
        for i in range(k):
            for j in range(i, k):
                for c in range(self.mu[i][j]):
                    yield ColoredEdge(i, j, c)

    def edge_list(self) -> list[tuple[int, int]]:
        return [(e.u, e.v) for e in self.edges()]

    def has_edge(self, e: ColoredEdge) -> bool:
        i, j = e.endpoints
        k = len(self.mu)
        return 0 <= i and j < k and 0 <= e.color < self.mu[i][j]

    # -- connectivity -----------------------------------------------------

    def component_of(self, v: int) -> set[int]:
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for w in self.neighbors(x):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen

    def is_connected(self) -> bool:
        return len(self.component_of(0)) == len(self.mu)

    def require_connected(self) -> None:
        if not self.is_connected():
            raise DisconnectedGraphError("graph is not connected")

    # -- serialization ----------------------------------------------------

    def to_json(self) -> str:
        return json.dumps({"vertices": self.vertex_count,
                           "edges": [list(p) for p in self.edge_list()]})

    def __repr__(self):
        return f"Multigraph({self.vertex_count}, {self.edge_list()})"


def build_multigraph(vertex_count: int, edge_list: Iterable[Sequence[int]]) -> Multigraph:
    """Build a graph on ``0 .. vertex_count - 1``; repeated pairs become parallel edges."""
    if vertex_count < 1:
        raise GraphError("vertex_count must be positive")
    mu = [[0] * vertex_count for _ in range(vertex_count)]
    for pair in edge_list:
        if len(pair) != 2:
            raise GraphError(f"edge {pair!r} is not a vertex pair")
        u, v = (int(x) for x in pair)
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        mu[u][v] += 1
        if u != v:
            mu[v][u] += 1
    return Multigraph(tuple(map(tuple, mu)))


def from_matrix(mu: Sequence[Sequence[int]]) -> Multigraph:
    return Multigraph(tuple(tuple(int(m) for m in row) for row in mu))


def load_json(text: str) -> Multigraph:
    """Parse ``{"vertices": k, "edges": [[u, v], ...]}``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from None
    if not isinstance(data, dict) or "vertices" not in data:
        raise GraphError('graph JSON needs a "vertices" field')
    edges = data.get("edges", [])
    if not isinstance(data["vertices"], int) or not isinstance(edges, list):
        raise GraphError('"vertices" must be an integer and "edges" a list')
    return build_multigraph(data["vertices"], edges)


# -- standard families ------------------------------------------------------

def complete_graph(k: int) -> Multigraph:
    return build_multigraph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def path_graph(k: int) -> Multigraph:
    return build_multigraph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Multigraph:
    return build_multigraph(k, [(i, (i + 1) % k) for i in range(k)])


# -- local statistics -------------------------------------------------------

def outdeg(G: Multigraph, I: Iterable[int], v: int) -> int:
    """Edges from ``v`` to vertices outside ``I``, counted with multiplicity."""
    I = set(I)
    if v not in I:
        raise GraphError(f"vertex {v} is not in the set")
    if 0 in I:
        raise GraphError("the root may not belong to the set")
    row = G.mu[v]
    return sum(m for w, m in enumerate(row) if w not in I)


def _require_edge(G: Multigraph, e: ColoredEdge) -> None:
    if not G.has_edge(e):
        raise GraphError(f"edge {tuple(e)} is not in the graph")


def is_bridge(G: Multigraph, e: ColoredEdge) -> bool:
    _require_edge(G, e)
    i, j = e.endpoints
    if i == j or G.mu[i][j] > 1:
        return False
    return j not in delete_edge(G, e).component_of(i)


def classify_edge(G: Multigraph, e: ColoredEdge) -> str:
    """Return ``"loop"``, ``"bridge"`` or ``"ordinary"``."""
    _require_edge(G, e)
    if e.is_loop:
        return "loop"
    return "bridge" if is_bridge(G, e) else "ordinary"


# -- minors -----------------------------------------------------------------

def delete_edge(G: Multigraph, e: ColoredEdge) -> Multigraph:
    _require_edge(G, e)
    i, j = e.endpoints
    mu = [list(row) for row in G.mu]
    mu[i][j] -= 1
    if i != j:
        mu[j][i] -= 1
    return from_matrix(mu)


def contract_edge(G: Multigraph, e: ColoredEdge) -> Multigraph:
    """Merge the larger endpoint ``j`` of ``e`` into the smaller ``i``.

    The other parallel copies of ``e`` become loops at ``i``, so the edge count
    drops by exactly one. Vertices above ``j`` shift down by one.
    """
    _require_edge(G, e)
    if e.is_loop:
        raise GraphError("cannot contract a loop")
    i, j = e.endpoints
    k = G.vertex_count
    mu = [list(row) for row in G.mu]
    loops = mu[i][i] + mu[j][j] + mu[i][j] - 1
    for w in range(k):
        if w not in (i, j):
            mu[i][w] += mu[j][w]
            mu[w][i] = mu[i][w]
    mu[i][i] = loops
    keep = [w for w in range(k) if w != j]
    return from_matrix([[mu[a][b] for b in keep] for a in keep])


contract_root_edge = contract_edge


def relabel_after_contraction(v: int, removed: int) -> int:
    """Label of ``v`` once vertex ``removed`` has been merged away."""
    if v == removed:
        raise GraphError(f"vertex {v} no longer exists")
    return v - 1 if v > removed else v


# -- spanning trees ---------------------------------------------------------

def _bareiss_det(a: list[list[int]]) -> int:
    """Exact determinant by fraction-free elimination."""
    a = [row[:] for row in a]
    size = len(a)
    if size == 0:
        return 1
    sign, prev = 1, 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for r in range(k + 1, size):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(k + 1, size):
            for c in range(k + 1, size):
                a[r][c] = (a[r][c] * a[k][k] - a[r][k] * a[k][c]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


def laplacian(G: Multigraph) -> list[list[int]]:
    k = G.vertex_count
    lap = [[-G.mu[i][j] if i != j else 0 for j in range(k)] for i in range(k)]
    for i in range(k):
        lap[i][i] = sum(G.mu[i]) - G.mu[i][i]
    return lap


def count_spanning_trees(G: Multigraph) -> int:
    """Matrix-tree count; parallel copies are distinct, loops ignored."""
    G.require_connected()
    lap = laplacian(G)
    return _bareiss_det([row[1:] for row in lap[1:]])
