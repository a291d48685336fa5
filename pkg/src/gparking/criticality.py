"""Critical vertices, weak/strong v-identical sets and bridge vertices.

Everything here is computed from a :class:`ParkingTable`, the full list of
G-parking functions of a graph together with their processing orders under a
fixed ranking. Weak and strong identical sets are obtained by filtering that
table, which is fine for graphs with a handful of vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .bijection import Ranking, _run_a, check_ranking, rank_vector, restrict_ranking
from .errors import GraphError, NotParkingError
from .graph import (ColoredEdge, Multigraph, contract_edge, delete_edge, outdeg,
                    relabel_after_contraction)
from .parking import enumerate_parking, weight_w


@dataclass(frozen=True)
class BridgeStats:
    bridge_vertices: frozenset[int]

    @property
    def b(self) -> int:
        return len(self.bridge_vertices)


@dataclass
class ParkingTable:
    """G-parking functions of ``G`` with their orders under ranking ``tau``."""

    G: Multigraph
    tau: Ranking = None
    functions: list[tuple[int, ...]] = field(init=False)
    orders: dict[tuple[int, ...], tuple[int, ...]] = field(init=False)

    def __post_init__(self):
        self.tau = check_ranking(self.tau, self.G.n)
        rank = rank_vector(self.tau, self.G.n)
        self.functions = enumerate_parking(self.G)
        self.orders = {f: tuple(_run_a(self.G, rank, f)[2]) for f in self.functions}
        self._rank = rank
        self._bridges: dict[tuple[int, ...], frozenset[int]] = {}

    def order(self, f: Sequence[int]) -> tuple[int, ...]:
        f = tuple(f)
        try:
            return self.orders[f]
        except KeyError:
            raise NotParkingError(f"{list(f)} is not a G-parking function") from None

    def rea(self, f: Sequence[int]) -> tuple[int, ...]:
        return tuple(f[v] for v in self.order(f))

    @cached_property
    def _reas(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        return {f: self.rea(f) for f in self.functions}

    def suffix(self, f: Sequence[int], v: int) -> tuple[int, ...]:
        """``I_v``: the vertices from ``v`` onward in the order of ``f``."""
        order = self.order(f)
        return order[order.index(v):]

    # -- critical vertices -------------------------------------------------

    def critical_vertices(self, f: Sequence[int]) -> frozenset[int]:
        f = tuple(f)
        order = self.order(f)
        crit = {0}
        for i, v in enumerate(order):
            if f[v] == outdeg(self.G, order[i:], v) - 1:
                crit.add(v)
        return frozenset(crit)

    # -- identical sets ----------------------------------------------------

    def weak_identical(self, f: Sequence[int], v: int, value_floor: bool = True) -> list[tuple[int, ...]]:
        """Parking functions weak ``v``-identical to ``f``.

        A member shares the order and values of ``f`` before ``v``, has
        ``g(v) >= f(v)``, and has ``g(w) >= outdeg(I_v, w)`` for every ``w``
        of ``I_v`` ranked ahead of ``v``. ``value_floor=False`` drops the
        ``g(v) >= f(v)`` clause; the bridge set is the same either way.
        """
        f = tuple(f)
        if v == 0:
            raise GraphError("the root has no identical sets")
        order = self.order(f)
        i = order.index(v)
        prefix_ord = order[:i]
        prefix_rea = self._reas[f][:i]
        I_v = order[i:]
        floors = [(w, outdeg(self.G, I_v, w)) for w in I_v if self._rank[w] < self._rank[v]]
        out = []
        for g in self.functions:
            if self.orders[g][:i] != prefix_ord or self._reas[g][:i] != prefix_rea:
                continue
            if value_floor and g[v] < f[v]:
                continue
            if all(g[w] >= d for w, d in floors):
                out.append(g)
        return out

    def strong_identical(self, f: Sequence[int], v: int, value_floor: bool = True) -> list[tuple[int, ...]]:
        i = self.order(f).index(v)
        return [g for g in self.weak_identical(f, v, value_floor) if self.orders[g][i] == v]

    def bridge_vertices(self, f: Sequence[int]) -> frozenset[int]:
        f = tuple(f)
        if f not in self._bridges:
            found = set()
            for v in self.critical_vertices(f) - {0}:
                i = self.order(f).index(v)
                weak = self.weak_identical(f, v)
                # strong is a subset of weak, so equal sizes means every weak
                # member keeps v at the same position
                if all(self.orders[g][i] == v for g in weak):
                    found.add(v)
            self._bridges[f] = frozenset(found)
        return self._bridges[f]

    def b(self, f: Sequence[int]) -> int:
        return len(self.bridge_vertices(f))

    def bw_pairs(self) -> list[tuple[int, int]]:
        return [(self.b(f), weight_w(self.G, f)) for f in self.functions]


# -- functional surface -----------------------------------------------------

def critical_vertices(G: Multigraph, tau: Ranking, f: Sequence[int]) -> frozenset[int]:
    return ParkingTable(G, tau).critical_vertices(f)


def weak_identical(G: Multigraph, tau: Ranking, f: Sequence[int], v: int,
                   value_floor: bool = True) -> list[tuple[int, ...]]:
    return ParkingTable(G, tau).weak_identical(f, v, value_floor)


def strong_identical(G: Multigraph, tau: Ranking, f: Sequence[int], v: int,
                     value_floor: bool = True) -> list[tuple[int, ...]]:
    return ParkingTable(G, tau).strong_identical(f, v, value_floor)


def bridge_vertices(G: Multigraph, tau: Ranking, f: Sequence[int]) -> BridgeStats:
    return BridgeStats(ParkingTable(G, tau).bridge_vertices(f))


# -- root-edge reduction maps -----------------------------------------------

def distinguished_neighbor(G: Multigraph, tau: Ranking) -> int:
    """The lowest-ranked neighbor of the root."""
    rank = rank_vector(tau, G.n)
    nbrs = G.neighbors(0)
    if not nbrs:
        raise GraphError("the root has no neighbors")
    return min(nbrs, key=rank.__getitem__)


def _root_edge_vertex(G: Multigraph, e: ColoredEdge) -> int:
    if not G.has_edge(e):
        raise GraphError(f"edge {tuple(e)} is not in the graph")
    i, j = e.endpoints
    if i != 0 or j == 0:
        raise GraphError("edge must join the root to another vertex")
    return j


def phi_contract(G: Multigraph, e: ColoredEdge, f: Sequence[int]) -> tuple[int, ...]:
    """Drop the value at ``u`` when the root edge ``{0, u}`` is contracted.

    Requires ``f(u) == 0``; the result lives on :func:`contract_edge` of ``G``.
    """
    u = _root_edge_vertex(G, e)
    if f[u] != 0:
        raise NotParkingError(f"contraction needs f({u}) == 0, got {f[u]}")
    return tuple(x for v, x in enumerate(f) if v != u)


def phi_inverse(G: Multigraph, e: ColoredEdge, g: Sequence[int]) -> tuple[int, ...]:
    u = _root_edge_vertex(G, e)
    return tuple(g[:u]) + (0,) + tuple(g[u:])


def psi_delete(G: Multigraph, e: ColoredEdge, f: Sequence[int]) -> tuple[int, ...]:
    """Lower the value at ``u`` by one when the root edge ``{0, u}`` is deleted."""
    u = _root_edge_vertex(G, e)
    if f[u] < 1:
        raise NotParkingError(f"deletion needs f({u}) >= 1, got {f[u]}")
    g = list(f)
    g[u] -= 1
    return tuple(g)


def psi_inverse(G: Multigraph, e: ColoredEdge, g: Sequence[int]) -> tuple[int, ...]:
    u = _root_edge_vertex(G, e)
    f = list(g)
    f[u] += 1
    return tuple(f)


def contracted_setting(G: Multigraph, tau: Ranking, e: ColoredEdge):
    """Graph, ranking and vertex relabeling after contracting root edge ``e``."""
    u = _root_edge_vertex(G, e)
    H = contract_edge(G, e)
    sigma = restrict_ranking(tau, G.n, u)
    return H, sigma, lambda v: relabel_after_contraction(v, u)


def deleted_setting(G: Multigraph, tau: Ranking, e: ColoredEdge):
    _root_edge_vertex(G, e)
    return delete_edge(G, e), check_ranking(tau, G.n)
