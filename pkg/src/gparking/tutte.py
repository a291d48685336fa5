"""Exact bivariate polynomials and two independent routes to the Tutte polynomial."""

from __future__ import annotations

import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable, Mapping

from .bijection import Ranking
from .criticality import ParkingTable
from .errors import GraphError
from .graph import ColoredEdge, Multigraph, contract_edge, delete_edge, is_bridge


class Poly:
    """Polynomial in ``x`` and ``y`` with integer coefficients.

    Stored sparsely as ``{(x_exp, y_exp): coeff}`` with no zero coefficients.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        acc: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for (a, b), c in items:
            if a < 0 or b < 0:
                raise ValueError("exponents must be nonnegative")
            acc[(a, b)] = acc.get((a, b), 0) + int(c)
        self.terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def const(cls, c: int) -> "Poly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c: int = 1) -> "Poly":
        return cls({(a, b): c})

    @classmethod
    def parse(cls, text: str) -> "Poly":
        """Read back the output of :meth:`__str__`."""
        text = text.replace(" ", "")
        if text in ("", "0"):
            return cls()
        terms = []
        for chunk in text.replace("-", "+-").split("+"):
            if not chunk:
                continue
            sign = -1 if chunk.startswith("-") else 1
            chunk = chunk.lstrip("-")
            coef, a, b = 1, 0, 0
            for factor in chunk.split("*"):
                base, _, exp = factor.partition("^")
                e = int(exp) if exp else 1
                if base == "x":
                    a += e
                elif base == "y":
                    b += e
                else:
                    coef *= int(base)
            terms.append(((a, b), sign * coef))
        return cls(terms)

    def __add__(self, other: "Poly") -> "Poly":
        return Poly(list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + Poly({k: -c for k, c in other.terms.items()})

    def __mul__(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly({k: c * other for k, c in self.terms.items()})
        return Poly([((a1 + a2, b1 + b2), c1 * c2)
                     for (a1, b1), c1 in self.terms.items()
                     for (a2, b2), c2 in other.terms.items()])

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly.const(other)
        return isinstance(other, Poly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __call__(self, x: int, y: int) -> int:
        return sum(c * x ** a * y ** b for (a, b), c in self.terms.items())

    def degree_x(self) -> int:
        return max((a for a, _ in self.terms), default=0)

    def degree_y(self) -> int:
        return max((b for _, b in self.terms), default=0)

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        # constant part of y first, then ascending y; within a y-degree, descending x
        return [(a, b, self.terms[(a, b)])
                for a, b in sorted(self.terms, key=lambda k: (k[1], -k[0]))]

    def __str__(self):
        parts = []
        for a, b, c in self.sorted_terms():
            mono = []
            if a:
                mono.append("x" if a == 1 else f"x^{a}")
            if b:
                mono.append("y" if b == 1 else f"y^{b}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(mono)
            else:
                body = "*".join([str(abs(c))] + mono)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(s + body for s, body in parts[1:])

    def __repr__(self):
        return f"Poly({self})"

    def to_json(self) -> str:
        return json.dumps({"terms": [{"x": a, "y": b, "c": c} for a, b, c in self.sorted_terms()]})


X = Poly.monomial(1, 0)
Y = Poly.monomial(0, 1)
ONE = Poly.const(1)


def poly_eval(p: Poly, x: int, y: int) -> int:
    return p(x, y)


# -- via G-parking functions ------------------------------------------------

def _bw_chunk(args):
    G, tau, chunk = args
    table = ParkingTable(G, tau)
    return [(table.b(f), table.G.total_edges - table.G.vertex_count - sum(f)) for f in chunk]


def bw_multiset(G: Multigraph, tau: Ranking = None, jobs: int | None = None) -> Counter:
    """Multiset of ``(b(f), w(f))`` over all G-parking functions."""
    G.require_connected()
    if jobs is None:
        jobs = int(os.environ.get("GPARKING_JOBS", "1"))
    table = ParkingTable(G, tau)
    if jobs <= 1 or len(table.functions) < 64:
        return Counter(table.bw_pairs())
    fs = table.functions
    chunks = [fs[i::jobs] for i in range(jobs)]
    with ProcessPoolExecutor(jobs) as pool:
        parts = pool.map(_bw_chunk, [(G, table.tau, c) for c in chunks])
    out = Counter()
    for part in parts:
        out.update(part)
    return out


def tutte_from_bw(bw: Counter) -> Poly:
    return Poly([((b, w), c) for (b, w), c in bw.items()])


def tutte_parking(G: Multigraph, tau: Ranking = None, jobs: int | None = None) -> Poly:
    """Sum of ``x^b(f) y^w(f)`` over the G-parking functions of ``G``."""
    return tutte_from_bw(bw_multiset(G, tau, jobs))


# -- deletion-contraction ---------------------------------------------------

def _first_edge(G: Multigraph) -> ColoredEdge | None:
    return next(G.edges(), None)


@lru_cache(maxsize=200_000)
def _delcon(G: Multigraph) -> Poly:
    e = _first_edge(G)
    if e is None:
        if G.vertex_count != 1:
            raise GraphError("edgeless graph with several vertices is disconnected")
        return ONE
    if e.is_loop:
        return Y * _delcon(delete_edge(G, e))
    if is_bridge(G, e):
        return X * _delcon(contract_edge(G, e))
    return _delcon(contract_edge(G, e)) + _delcon(delete_edge(G, e))


def tutte_delcon(G: Multigraph) -> Poly:
    """Tutte polynomial by deletion-contraction on the lowest edge.

    Loop: ``y * T(G - e)``; bridge: ``x * T(G / e)``; otherwise
    ``T(G / e) + T(G - e)``. Memoized on the labeled multiplicity matrix.
    """
    G.require_connected()
    return _delcon(G)
