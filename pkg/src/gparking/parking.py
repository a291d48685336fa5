"""G-parking functions: membership, enumeration and the weight statistic."""

from __future__ import annotations

import itertools
from typing import Sequence

from .bijection import _check_root, _run_a
from .errors import NotParkingError
from .graph import Multigraph, outdeg


def _box(G: Multigraph) -> list[range]:
    # f(v) < outdeg({v}, v) is forced by the singleton subset {v}
    return [range(0, sum(G.mu[v]) - G.mu[v][v]) for v in range(1, G.vertex_count)]


def is_parking_bruteforce(G: Multigraph, f: Sequence[int]) -> bool:
    """Reference test: try every nonempty root-free vertex subset."""
    if len(f) != G.vertex_count or f[0] != -1:
        return False
    rest = range(1, G.vertex_count)
    for size in range(1, G.vertex_count):
        for I in itertools.combinations(rest, size):
            if not any(0 <= f[v] < outdeg(G, I, v) for v in I):
                return False
    return True


def is_parking_fast(G: Multigraph, f: Sequence[int]) -> bool:
    """Membership via the parking-to-tree algorithm consuming every vertex."""
    if len(f) != G.vertex_count or f[0] != -1:
        return False
    if any(x < 0 for x in f[1:]):
        return False
    return _run_a(G, (0,) + tuple(range(1, G.vertex_count)), f) is not None


def is_parking(G: Multigraph, f: Sequence[int]) -> bool:
    G.require_connected()
    return is_parking_fast(G, tuple(f))


def check_parking(G: Multigraph, f: Sequence[int]) -> None:
    """Raise :class:`RootValueError` or :class:`NotParkingError` unless ``f`` is G-parking."""
    G.require_connected()
    _check_root(f, G)
    if not is_parking_fast(G, tuple(f)):
        raise NotParkingError("not a G-parking function")


def enumerate_parking(G: Multigraph) -> list[tuple[int, ...]]:
    """All G-parking functions in lexicographic order of their value vectors."""
    G.require_connected()
    rank = (0,) + tuple(range(1, G.vertex_count))
    out = []
    for tail in itertools.product(*_box(G)):
        f = (-1,) + tail
        if _run_a(G, rank, f) is not None:
            out.append(f)
    return out


def weight_w(G: Multigraph, f: Sequence[int]) -> int:
    """``|E| - |V| - sum(f)``; nonnegative on G-parking functions."""
    return G.total_edges - G.vertex_count - sum(f)
