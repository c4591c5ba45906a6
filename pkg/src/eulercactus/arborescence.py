"""Spanning out-arborescences: exact counting and enumeration.

An arborescence rooted at ``u`` is a spanning set of ``n - 1`` edges in which
every vertex is reached from ``u`` along a unique directed path.  Loops never
belong to one and are ignored.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import BudgetExceeded, InvalidArgument
from .graph import Digraph, contract_edge

__all__ = [
    "DEFAULT_MAX_ARBORESCENCES",
    "ArborescenceCount",
    "ContractionCheck",
    "bareiss_determinant",
    "laplacian",
    "count_arborescences",
    "enumerate_arborescences",
    "check_contraction_correspondence",
]

DEFAULT_MAX_ARBORESCENCES = 10**5


def bareiss_determinant(matrix) -> int:
    """Determinant of a square integer matrix by fraction-free elimination.

    Every intermediate value is an exact integer (each division is exact), so
    the result has no rounding at any size.
    """
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise InvalidArgument("matrix is not square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def laplacian(g: Digraph) -> list:
    """In-degree Laplacian ``diag(indeg) - A``; parallel edges count with multiplicity."""
    lap = [[0] * g.n for _ in range(g.n)]
    for t, h in g.edges:
        if t == h:
            continue
        lap[h][h] += 1
        lap[t][h] -= 1
    return lap


class ArborescenceCount(NamedTuple):
    root: int
    count: int


def count_arborescences(g: Digraph, root: int = 0) -> ArborescenceCount:
    """Number of arborescences rooted at ``root`` (directed matrix-tree theorem)."""
    if not 0 <= root < g.n:
        raise InvalidArgument(f"root {root} is not a vertex")
    lap = laplacian(g)
    keep = [v for v in range(g.n) if v != root]
    minor = [[lap[i][j] for j in keep] for i in keep]
    return ArborescenceCount(root, bareiss_determinant(minor))


def enumerate_arborescences(g: Digraph, root: int = 0, cap: int = DEFAULT_MAX_ARBORESCENCES) -> list:
    """All arborescences rooted at ``root`` as frozensets of edge ids.

    Every non-root vertex picks one incoming edge; a pick is rejected when
    following the already chosen parent edges from its tail leads back to
    the vertex itself.
    """
    if not 0 <= root < g.n:
        raise InvalidArgument(f"root {root} is not a vertex")
    order = [v for v in range(g.n) if v != root]
    parent = [None] * g.n  # parent[v] = tail of the chosen in-edge
    chosen = []
    out = []

    def closes_cycle(v, t):
        while t is not None and t != root:
            if t == v:
                return True
            t = parent[t]
        return False

    def rec(k):
        if k == len(order):
            if len(out) >= cap:
                raise BudgetExceeded("arborescence enumeration", cap)
            out.append(frozenset(chosen))
            return
        v = order[k]
        for e in g.in_edges[v]:
            t = g.edges[e][0]
            if t == v or closes_cycle(v, t):
                continue
            parent[v] = t
            chosen.append(e)
            rec(k + 1)
            chosen.pop()
            parent[v] = None

    rec(0)
    out.sort(key=sorted)
    return out


class ContractionCheck(NamedTuple):
    holds: bool
    with_edge: int  # arborescences rooted at the tail of e that contain e
    contracted: int  # arborescences of the contracted graph at the merged vertex

    def __bool__(self):
        return self.holds


def check_contraction_correspondence(g: Digraph, e: int, cap: int = DEFAULT_MAX_ARBORESCENCES) -> ContractionCheck:
    """Arborescences at ``u`` through ``e = (u, v)`` versus arborescences of
    the graph with ``e`` contracted, rooted at the merged vertex.

    The left side is enumerated, the right side counted by determinant.
    """
    u, _ = g.edges[e]
    left = sum(1 for a in enumerate_arborescences(g, u, cap) if e in a)
    c = contract_edge(g, e)
    right = count_arborescences(c.graph, c.merged).count
    return ContractionCheck(left == right, left, right)
