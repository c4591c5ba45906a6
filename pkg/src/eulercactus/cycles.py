"""Cycle enumeration: directed cycles B(D), undirected cycles F(X), cyclomatic number."""

from __future__ import annotations

from .errors import BudgetExceeded, InvalidState
from .graph import Digraph, Multigraph, components, expand_loops
from .walks import Cycle

__all__ = [
    "DEFAULT_MAX_CYCLES",
    "directed_cycles",
    "undirected_cycles",
    "multigraph_cycles",
    "cyclomatic_number",
]

DEFAULT_MAX_CYCLES = 10**6


def _make_cycle(edges, verts) -> Cycle:
    k = edges.index(min(edges))
    return Cycle(tuple(edges[k:] + edges[:k]), tuple(verts[k:] + verts[:k]))


def directed_cycles(g: Digraph, cap: int = DEFAULT_MAX_CYCLES) -> list:
    """Every directed cycle of ``g`` exactly once, sorted by (length, edge ids).

    Each cycle is found from its smallest vertex ``s`` by extending simple
    paths through vertices larger than ``s``.  Parallel edges give distinct
    cycles.  A loop is a cycle of length 1 (the image of the digon it would
    become under loop expansion).
    """
    found = []

    def emit(edges, verts):
        if len(found) >= cap:
            raise BudgetExceeded("directed cycle enumeration", cap)
        found.append(_make_cycle(edges, verts))

    for e, (t, h) in enumerate(g.edges):
        if t == h:
            emit([e], [t])

    on_path = [False] * g.n
    path_e: list = []
    path_v: list = []

    def extend(s, v):
        for e in g.out_edges[v]:
            w = g.edges[e][1]
            if w == v:
                continue
            if w == s:
                emit(path_e + [e], path_v)
            elif w > s and not on_path[w]:
                on_path[w] = True
                path_e.append(e)
                path_v.append(w)
                extend(s, w)
                path_v.pop()
                path_e.pop()
                on_path[w] = False

    for s in range(g.n):
        on_path[s] = True
        path_v.append(s)
        extend(s, s)
        path_v.pop()
        on_path[s] = False
    found.sort()
    return found


def _undirected_closed_paths(x: Multigraph):
    """Yield ``(edges, vertices)`` for each cycle of ``x`` traversed from its
    smallest vertex, once per direction (a digon is yielded twice)."""
    on_path = [False] * x.n
    path_e: list = []
    path_v: list = []

    def extend(s, v):
        for e, w in x.incident[v]:
            if w == s:
                if len(path_e) >= 2 or (len(path_e) == 1 and e != path_e[0]):
                    yield path_e + [e], list(path_v)
            elif w > s and not on_path[w]:
                on_path[w] = True
                path_e.append(e)
                path_v.append(w)
                yield from extend(s, w)
                path_v.pop()
                path_e.pop()
                on_path[w] = False

    for s in range(x.n):
        on_path[s] = True
        path_v.append(s)
        yield from extend(s, s)
        path_v.pop()
        on_path[s] = False


def undirected_cycles(x: Multigraph, cap: int = DEFAULT_MAX_CYCLES) -> list:
    """F(X): edge sets of the undirected cycle subgraphs of ``x``.

    Each subgraph appears once as a frozenset; a pair of parallel edges is a
    digon.  Sorted by (size, sorted edge ids).
    """
    seen = set()
    for edges, _ in _undirected_closed_paths(x):
        key = frozenset(edges)
        if key not in seen:
            if len(seen) >= cap:
                raise BudgetExceeded("undirected cycle enumeration", cap)
            seen.add(key)
    return sorted(seen, key=lambda s: (len(s), sorted(s)))


def multigraph_cycles(x: Multigraph, cap: int = DEFAULT_MAX_CYCLES) -> list:
    """B(X) of a multigraph: its cycles as circuits, i.e. with a direction of traversal.

    A digon yields one cycle, a longer undirected cycle two.
    """
    seen = set()
    for edges, verts in _undirected_closed_paths(x):
        c = _make_cycle(edges, verts)
        if c not in seen:
            if len(seen) >= cap:
                raise BudgetExceeded("multigraph cycle enumeration", cap)
            seen.add(c)
    return sorted(seen)


def cyclomatic_number(g) -> int:
    """``m - n + 1`` of a connected graph (loops expanded to digons first)."""
    comps = components(g)
    if len(comps) > 1:
        raise InvalidState(f"graph is disconnected: component {comps[1]} is separated from vertex 0")
    if isinstance(g, Digraph):
        g = expand_loops(g)
    return g.m - g.n + 1
