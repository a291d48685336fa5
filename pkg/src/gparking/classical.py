"""Classical parking functions as the complete-graph case.

Values are 0-based: ``alpha`` parks iff its sorted rearrangement ``b`` has
``b[i] <= i`` for ``i = 0 .. n-1``.
"""

from __future__ import annotations

import itertools
from math import comb
from typing import Sequence

from .errors import NotParkingError
from .graph import complete_graph
from .parking import is_parking_fast
from .tutte import Poly


def _values(alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(a) for a in alpha)
    if any(a < 0 for a in alpha):
        raise ValueError(f"negative entry in {alpha}")
    return alpha


def is_classical_parking(alpha: Sequence[int]) -> bool:
    alpha = _values(alpha)
    return all(b <= i for i, b in enumerate(sorted(alpha)))


def is_complete_graph_parking(alpha: Sequence[int]) -> bool:
    """Same question answered on ``K_{n+1}`` by the G-parking machinery."""
    alpha = _values(alpha)
    return is_parking_fast(complete_graph(len(alpha) + 1), (-1,) + alpha)


def embed_classical(alpha: Sequence[int]) -> tuple[int, ...]:
    """Prepend the root value -1, giving a ``K_{n+1}``-parking function."""
    alpha = _values(alpha)
    if not is_classical_parking(alpha):
        raise NotParkingError(f"{alpha} is not a parking function")
    return (-1,) + alpha


def enumerate_classical(n: int) -> list[tuple[int, ...]]:
    """All parking functions of length ``n`` in lexicographic order."""
    return [a for a in itertools.product(range(n), repeat=n) if is_classical_parking(a)]


def critical_maxima(alpha: Sequence[int]) -> frozenset[int]:
    """1-based positions ``i`` whose value ``j = a_i`` is a critical maximum.

    That is, exactly ``n - 1 - j`` entries exceed ``j`` and all of them sit to
    the left of ``i``.
    """
    alpha = _values(alpha)
    n = len(alpha)
    found = set()
    for i, j in enumerate(alpha, start=1):
        larger = [k for k, a in enumerate(alpha, start=1) if a > j]
        if len(larger) == n - 1 - j and all(k < i for k in larger):
            found.add(i)
    return frozenset(found)


def cm(alpha: Sequence[int]) -> int:
    return len(critical_maxima(alpha))


def tutte_complete(n: int) -> Poly:
    """Tutte polynomial of ``K_{n+1}`` summed over classical parking functions."""
    if n < 1:
        raise ValueError("n must be at least 1")
    top = comb(n, 2)
    return Poly([((cm(a), top - sum(a)), 1) for a in enumerate_classical(n)])
