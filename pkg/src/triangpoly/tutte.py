"""Homological Tutte polynomials T^j of a complex and the classical graph oracle."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .complexes import ChainComplex, SpanningSelector, betti, spanning_subcomplex
from .exactlin import SparseMatrix, rank
from .poly import MultiPoly
from .statesum import DEFAULT_CAP_BITS, check_cap, enumerate_states

XY = ("X", "Y")


def tutte_homological(c: ChainComplex, j: int, *, cap_bits: int | None = DEFAULT_CAP_BITS,
                      jobs: int = 1, method: str = "incremental") -> MultiPoly:
    """Sum of ``X^(b_{j-1}(L) - b_{j-1}(K^(j))) Y^(b_j(L))`` over spanning j-subcomplexes L.

    ``method="naive"`` builds every spanning subcomplex and computes its Betti
    numbers from scratch; the default walks subsets with incremental
    elimination, using ``b_j(L) = |A| - r(A)`` and
    ``b_{j-1}(L) - b_{j-1}(K^(j)) = r(E) - r(A)``.
    """
    if j < 1 or j > c.top:
        raise ValueError(f"need 1 <= j <= {c.top}, got {j}")
    if method == "naive":
        return _tutte_naive(c, j, cap_bits)
    if method != "incremental":
        raise ValueError(f"unknown method {method!r}")
    tab = enumerate_states(c.boundary(j), cap_bits=cap_bits, jobs=jobs)
    terms: dict = {}
    for (size, rk, _), count in tab.counts.items():
        e = (tab.full_rank - rk, size - rk)
        terms[e] = terms.get(e, 0) + count
    return MultiPoly(XY, terms)


def _tutte_naive(c: ChainComplex, j: int, cap_bits) -> MultiPoly:
    m = c.dims[j]
    check_cap(m, cap_bits)
    base = betti(c.skeleton(j), j - 1)
    terms: dict = {}
    for mask in range(1 << m):
        sub = spanning_subcomplex(c, SpanningSelector(j, m, mask))
        e = (betti(sub, j - 1) - base, betti(sub, j))
        terms[e] = terms.get(e, 0) + 1
    return MultiPoly(XY, terms)


@dataclass(frozen=True)
class GraphView:
    """Multigraph on vertices ``0..num_vertices-1``; loops and parallel edges allowed."""

    num_vertices: int
    edges: tuple

    def __post_init__(self):
        edges = tuple(tuple(int(x) for x in e) for e in self.edges)
        for e in edges:
            if len(e) != 2 or not all(0 <= x < self.num_vertices for x in e):
                raise ValueError(f"edge {e} has endpoints outside 0..{self.num_vertices - 1}")
        object.__setattr__(self, "edges", edges)


def _components(n: int, edges: Sequence) -> int:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = n
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            comps -= 1
    return comps


def tutte_graph(g: GraphView, *, cap_bits: int | None = DEFAULT_CAP_BITS) -> MultiPoly:
    """Classical state sum ``X^(c(H)-c(G)) Y^(n(H))`` with ``n(H) = c(H) + |E(H)| - |V|``."""
    if g.num_vertices == 0:
        raise ValueError("graph must have at least one vertex")
    m = len(g.edges)
    check_cap(m, cap_bits)
    cg = _components(g.num_vertices, g.edges)
    terms: dict = {}
    for mask in range(1 << m):
        sub = [e for i, e in enumerate(g.edges) if mask >> i & 1]
        ch = _components(g.num_vertices, sub)
        e = (ch - cg, ch + len(sub) - g.num_vertices)
        terms[e] = terms.get(e, 0) + 1
    return MultiPoly(XY, terms)


def graph_chain_complex(g: GraphView) -> ChainComplex:
    """1-dimensional chain complex of a multigraph (boundary of edge uv is v - u for u < v)."""
    ent = {}
    for j, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        a, b = min(u, v), max(u, v)
        ent[(a, j)] = -1
        ent[(b, j)] = 1
    d1 = SparseMatrix(g.num_vertices, len(g.edges), ent)
    return ChainComplex((g.num_vertices, len(g.edges)), (d1,))


def spanning_tree_count(g: GraphView) -> int:
    """Brute-force count of spanning trees (edge subsets that are connected and acyclic)."""
    n = g.num_vertices
    cg = _components(n, g.edges)
    need = n - cg
    total = 0
    m = len(g.edges)
    for mask in range(1 << m):
        if bin(mask).count("1") != need:
            continue
        sub = [e for i, e in enumerate(g.edges) if mask >> i & 1]
        if _components(n, sub) == cg:
            total += 1
    return total


def simplicial_spanning_trees(c: ChainComplex, n: int, *,
                              cap_bits: int | None = DEFAULT_CAP_BITS) -> int:
    """Brute-force count of n-dimensional spanning trees.

    A spanning tree is a set of n-cells with ``H_n(L) = 0`` whose spanning
    subcomplex has the same ``(n-1)``-st Betti number as the n-skeleton,
    i.e. ``|A| = rank D_n[:, A] = rank D_n``.
    """
    d = c.boundary(n)
    m = d.cols
    check_cap(m, cap_bits)
    target = rank(d)
    total = 0
    for mask in range(1 << m):
        idx = [i for i in range(m) if mask >> i & 1]
        if len(idx) == target and rank(d.select_columns(idx)) == target:
            total += 1
    return total
