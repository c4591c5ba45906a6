"""Graph data model: loopless / loop-allowed digraphs and loopless multigraphs.

Vertices and edges are dense integer ids ``0..n-1`` and ``0..m-1``.  Parallel
edges are distinct edges with distinct ids.  Graphs are immutable; every
operation returns a new graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, NamedTuple, Sequence, Union

from .errors import BudgetExceeded, InvalidArgument, InvalidState

__all__ = [
    "Digraph",
    "Multigraph",
    "Orientation",
    "Degrees",
    "Contraction",
    "degrees",
    "is_connected",
    "components",
    "is_eulerian",
    "contract_edge",
    "expand_loops",
    "loop_expansion_edge_map",
    "edge_subgraph",
    "underlying_multigraph",
    "orientations",
    "forget",
]


@dataclass(frozen=True)
class Digraph:
    """Directed multigraph.

    ``edges[e] = (tail, head)``.  A loop is an edge with ``tail == head`` and
    is only accepted when ``allow_loops`` is set.
    """

    n: int
    edges: tuple = ()
    allow_loops: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgument("a graph needs at least one vertex")
        edges = tuple((int(t), int(h)) for t, h in self.edges)
        for e, (t, h) in enumerate(edges):
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise InvalidArgument(f"edge {e} = ({t}, {h}) has an endpoint outside 0..{self.n - 1}")
            if t == h and not self.allow_loops:
                raise InvalidArgument(f"edge {e} is a loop at {t}; loops need allow_loops=True")
        object.__setattr__(self, "edges", edges)

    directed = True

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def out_edges(self) -> tuple:
        out = [[] for _ in range(self.n)]
        for e, (t, _) in enumerate(self.edges):
            out[t].append(e)
        return tuple(tuple(x) for x in out)

    @cached_property
    def in_edges(self) -> tuple:
        inc = [[] for _ in range(self.n)]
        for e, (_, h) in enumerate(self.edges):
            inc[h].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def incident(self) -> tuple:
        """Per vertex, ``(edge, other endpoint)`` ignoring direction; a loop appears once."""
        inc = [[] for _ in range(self.n)]
        for e, (t, h) in enumerate(self.edges):
            inc[t].append((e, h))
            if t != h:
                inc[h].append((e, t))
        return tuple(tuple(x) for x in inc)

    @property
    def loop_counts(self) -> tuple:
        counts = [0] * self.n
        for t, h in self.edges:
            if t == h:
                counts[t] += 1
        return tuple(counts)

    @property
    def has_loops(self) -> bool:
        return any(t == h for t, h in self.edges)

    def endpoints(self, e: int) -> tuple:
        return self.edges[e]


@dataclass(frozen=True)
class Multigraph:
    """Undirected loopless multigraph; each edge is stored as ``(min, max)``."""

    n: int
    edges: tuple = ()

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgument("a graph needs at least one vertex")
        norm = []
        for e, (u, v) in enumerate(self.edges):
            u, v = int(u), int(v)
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidArgument(f"edge {e} = ({u}, {v}) has an endpoint outside 0..{self.n - 1}")
            if u == v:
                raise InvalidArgument(f"edge {e} is a loop; multigraphs are loopless")
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", tuple(norm))

    directed = False
    allow_loops = False
    has_loops = False

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incident(self) -> tuple:
        inc = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append((e, v))
            inc[v].append((e, u))
        return tuple(tuple(x) for x in inc)

    def endpoints(self, e: int) -> tuple:
        return self.edges[e]

    def degree(self, v: int) -> int:
        return len(self.incident[v])


Graph = Union[Digraph, Multigraph]


class Degrees(NamedTuple):
    in_degree: tuple
    out_degree: tuple
    max_out: int


def degrees(g: Digraph) -> Degrees:
    """In/out degree of every vertex and the maximum out-degree.

    A loop counts once towards both the in- and out-degree of its vertex.
    """
    ind = [0] * g.n
    outd = [0] * g.n
    for t, h in g.edges:
        outd[t] += 1
        ind[h] += 1
    return Degrees(tuple(ind), tuple(outd), max(outd))


def components(g: Graph) -> list:
    """Weakly connected components as sorted vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for _, w in g.incident[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def _is_balanced(g: Graph) -> bool:
    if g.directed:
        d = degrees(g)
        return d.in_degree == d.out_degree
    return all(len(g.incident[v]) % 2 == 0 for v in range(g.n))


def is_eulerian(g: Graph) -> bool:
    """True iff ``g`` has an Eulerian circuit covering every edge and vertex.

    Uses the classical criterion: at least one edge, connected (isolated
    vertices included), in = out at each vertex (digraph) or even degrees
    (multigraph).  The single vertex without edges is not Eulerian.
    """
    return g.m > 0 and is_connected(g) and _is_balanced(g)


class Contraction(NamedTuple):
    graph: Digraph
    merged: int
    vertex_map: tuple  # old vertex -> new vertex
    edge_map: tuple  # old edge -> new edge, or None when deleted


def contract_edge(g: Digraph, e: int) -> Contraction:
    """Contract the non-loop edge ``e = (u, v)`` of an Eulerian digraph.

    ``u`` and ``v`` become one vertex; every edge joining ``u`` and ``v`` (in
    either direction, ``e`` included) is deleted rather than turned into a loop.
    ``v`` is removed and the vertices after it shift down by one.
    """
    if not 0 <= e < g.m:
        raise InvalidArgument(f"edge {e} does not exist")
    u, v = g.edges[e]
    if u == v:
        raise InvalidArgument(f"edge {e} is a loop and cannot be contracted")
    if not is_eulerian(g):
        raise InvalidState("contract_edge requires an Eulerian digraph")
    target = [u if w == v else w for w in range(g.n)]
    vmap = tuple(x - (1 if x > v else 0) for x in target)
    new_edges, emap = [], []
    pair = {u, v}
    for t, h in g.edges:
        if t in pair and h in pair and t != h:
            emap.append(None)
            continue
        emap.append(len(new_edges))
        new_edges.append((vmap[t], vmap[h]))
    out = Digraph(g.n - 1, tuple(new_edges), g.allow_loops)
    # Balance and connectivity survive; the digon collapses to the bare vertex.
    assert out.m == 0 or is_eulerian(out)
    return Contraction(out, vmap[u], vmap, tuple(emap))


def loop_expansion_edge_map(g: Digraph) -> tuple:
    """For each edge of ``expand_loops(g)``, the id of the edge it came from."""
    src = []
    for e, (t, h) in enumerate(g.edges):
        src.append(e)
        if t == h:
            src.append(e)
    return tuple(src)


def expand_loops(g: Digraph) -> Digraph:
    """Replace every loop at ``v`` by a digon ``v -> w -> v`` through a fresh vertex ``w``.

    Edges keep their relative order; a loop becomes two consecutive edges.
    Fresh vertices are numbered ``n, n+1, ...`` in loop order.  The result is
    loopless and its cycles correspond one-to-one with those of ``g``.
    """
    if not g.has_loops:
        return g if not g.allow_loops else Digraph(g.n, g.edges, False)
    edges = []
    fresh = g.n
    for t, h in g.edges:
        if t == h:
            edges.append((t, fresh))
            edges.append((fresh, t))
            fresh += 1
        else:
            edges.append((t, h))
    return Digraph(fresh, tuple(edges), False)


def edge_subgraph(g: Graph, edge_ids: Sequence[int]):
    """Subgraph spanned by ``edge_ids`` with vertices relabelled densely.

    Returns ``(subgraph, vertices)`` where ``vertices[i]`` is the original id
    of new vertex ``i``.  Edge ids in the subgraph follow the order of
    ``edge_ids``.
    """
    edge_ids = list(edge_ids)
    if not edge_ids:
        raise InvalidArgument("edge_subgraph needs at least one edge")
    verts = sorted({x for e in edge_ids for x in g.edges[e]})
    index = {v: i for i, v in enumerate(verts)}
    sub = [(index[g.edges[e][0]], index[g.edges[e][1]]) for e in edge_ids]
    if g.directed:
        return Digraph(len(verts), tuple(sub), g.allow_loops), tuple(verts)
    return Multigraph(len(verts), tuple(sub)), tuple(verts)


def underlying_multigraph(g: Digraph) -> Multigraph:
    """Forget directions.  Loops are not representable and are rejected."""
    if g.has_loops:
        raise InvalidArgument("underlying multigraph of a digraph with loops is undefined")
    return Multigraph(g.n, g.edges)


@dataclass(frozen=True)
class Orientation:
    """A choice of direction for each edge of ``base``.

    ``reversed[e]`` is False when edge ``(u, v)`` (stored with ``u < v``) is
    oriented ``u -> v``.
    """

    base: Multigraph
    reversed: tuple = field(default=())

    def __post_init__(self):
        if len(self.reversed) != self.base.m:
            raise InvalidArgument("orientation length does not match edge count")

    def to_digraph(self) -> Digraph:
        edges = tuple((v, u) if r else (u, v) for (u, v), r in zip(self.base.edges, self.reversed))
        return Digraph(self.base.n, edges)


def orientations(x: Multigraph, cap: int = 20) -> Iterator[Orientation]:
    """All ``2**m`` orientations; edge 0 is the lowest-order bit of a counter."""
    if x.m > cap:
        raise BudgetExceeded(f"orientation enumeration over {x.m} edges", cap)
    for mask in range(1 << x.m):
        yield Orientation(x, tuple(bool(mask >> i & 1) for i in range(x.m)))


def forget(o: Union[Orientation, Digraph]) -> Multigraph:
    """The forgetful map: drop directions edge by edge."""
    g = o.to_digraph() if isinstance(o, Orientation) else o
    return Multigraph(g.n, g.edges)
