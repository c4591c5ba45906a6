"""Bridgeless cactus recognition.

A connected graph is a bridgeless cactus (built by gluing cycles one at a
time at a single vertex) exactly when each of its blocks is one cycle.  The
block decomposition is computed on the underlying undirected multigraph;
parallel edges are told apart by id, and each loop is a block of its own.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .cycles import DEFAULT_MAX_CYCLES, directed_cycles, undirected_cycles
from .errors import InvalidArgument, InvalidState
from .graph import is_connected
from .walks import Cycle

__all__ = [
    "Block",
    "BlockStructure",
    "SDecomposition",
    "NotInS",
    "IntersectionGraph",
    "CyclePath",
    "blocks",
    "block_as_cycle",
    "s_decompose",
    "is_christmas_cactus",
    "intersection_graph",
    "cycle_path",
]


class Block(NamedTuple):
    edges: frozenset
    vertices: frozenset


class BlockStructure(NamedTuple):
    blocks: list
    block_count: tuple  # per vertex: number of blocks containing it

    @property
    def cut_vertices(self) -> list:
        return [v for v, c in enumerate(self.block_count) if c >= 2]


def blocks(g) -> BlockStructure:
    """Biconnected components, ordered by smallest edge id."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found = []
    edge_stack = []
    clock = 0
    for e, (t, h) in enumerate(g.edges):
        if t == h:
            found.append(Block(frozenset([e]), frozenset([t])))
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frames: (vertex, edge used to reach it, position in incidence list)
        stack = [[root, -1, 0]]
        while stack:
            frame = stack[-1]
            v, via, i = frame
            inc = g.incident[v]
            if i < len(inc):
                frame[2] += 1
                e, w = inc[i]
                if e == via or w == v:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    edge_stack.append(e)
                    stack.append([w, e, 0])
                elif disc[w] < disc[v]:
                    edge_stack.append(e)
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                comp = []
                while True:
                    f = edge_stack.pop()
                    comp.append(f)
                    if f == via:
                        break
                verts = frozenset(x for f in comp for x in g.edges[f])
                found.append(Block(frozenset(comp), verts))
    found.sort(key=lambda b: min(b.edges))
    count = [0] * n
    for b in found:
        for v in b.vertices:
            count[v] += 1
    return BlockStructure(found, tuple(count))


def block_as_cycle(g, block: Block) -> Optional[Cycle]:
    """The cycle formed by ``block``, or None when the block is not a single cycle."""
    edges = sorted(block.edges)
    if g.directed:
        out, indeg = {}, {}
        for e in edges:
            t, h = g.edges[e]
            if t in out or h in indeg:
                return None
            out[t] = e
            indeg[h] = e
        start = edges[0]
        seq_e, seq_v = [start], [g.edges[start][0]]
        v = g.edges[start][1]
        while v != seq_v[0]:
            e = out[v]
            seq_e.append(e)
            seq_v.append(v)
            v = g.edges[e][1]
    else:
        inc = {}
        for e in edges:
            for x in g.edges[e]:
                inc.setdefault(x, []).append(e)
        if any(len(es) != 2 for es in inc.values()):
            return None
        start = edges[0]
        u, v = g.edges[start]
        seq_e, seq_v = [start], [u]
        prev = start
        while v != u:
            nxt = inc[v][0] if inc[v][1] == prev else inc[v][1]
            seq_e.append(nxt)
            seq_v.append(v)
            a, b = g.edges[nxt]
            v = b if a == v else a
            prev = nxt
    if len(seq_e) != len(edges):
        return None
    return Cycle(tuple(seq_e), tuple(seq_v))


@dataclass(frozen=True)
class SDecomposition:
    """``cycles[0] * cycles[1] * ...``: each cycle after the first meets the
    union of its predecessors in exactly ``attach_vertices[i - 1]``."""

    cycles: tuple
    attach_vertices: tuple

    def __bool__(self):
        return True


@dataclass(frozen=True)
class NotInS:
    """Failure witness: a block that is not a cycle (None for an edgeless graph)."""

    block: Optional[Block]
    reason: str

    def __bool__(self):
        return False


def s_decompose(g):
    """Write a connected graph as cycles glued one at a time at single vertices.

    Leaf blocks of the block-cut tree are peeled, smallest edge id first; the
    peel order reversed is the gluing order.  Returns an ``SDecomposition``
    or a falsy ``NotInS`` naming the first block that is not a cycle.
    """
    if not is_connected(g):
        raise InvalidState("s_decompose needs a connected graph")
    bs = blocks(g)
    if not bs.blocks:
        return NotInS(None, "graph has no edges")
    cycles = []
    for b in bs.blocks:
        c = block_as_cycle(g, b)
        if c is None:
            return NotInS(b, f"block with {len(b.edges)} edges on {len(b.vertices)} vertices is not a cycle")
        cycles.append(c)

    remaining = set(range(len(cycles)))
    count = list(bs.block_count)
    peeled, attach = [], []
    while remaining:
        for i in sorted(remaining):
            shared = [v for v in bs.blocks[i].vertices if count[v] >= 2]
            if len(shared) <= 1:
                break
        remaining.discard(i)
        for v in bs.blocks[i].vertices:
            count[v] -= 1
        peeled.append(i)
        attach.append(shared[0] if shared else None)
    order = peeled[::-1]
    return SDecomposition(tuple(cycles[i] for i in order), tuple(attach[::-1][1:]))


def is_christmas_cactus(g) -> bool:
    """Bridgeless cactus in which no vertex lies on more than two blocks."""
    if not s_decompose(g):
        return False
    return max(blocks(g).block_count) <= 2


class IntersectionGraph(NamedTuple):
    cycles: list
    edges: list  # pairs (i, j), i < j, of cycles sharing a vertex
    is_tree: bool


def intersection_graph(g, cap: int = DEFAULT_MAX_CYCLES) -> IntersectionGraph:
    """Graph on the cycles of ``g`` joining cycles with a common vertex.

    Uses directed cycles for a digraph and undirected cycle subgraphs for a
    multigraph.
    """
    if g.directed:
        cycles = directed_cycles(g, cap)
        vsets = [c.vertex_set for c in cycles]
    else:
        cycles = undirected_cycles(g, cap)
        vsets = [frozenset(x for e in c for x in g.edges[e]) for c in cycles]
    k = len(cycles)
    adj = [[] for _ in range(k)]
    pairs = []
    for i in range(k):
        for j in range(i + 1, k):
            if vsets[i] & vsets[j]:
                pairs.append((i, j))
                adj[i].append(j)
                adj[j].append(i)
    connected = False
    if k:
        seen = {0}
        todo = [0]
        while todo:
            for j in adj[todo.pop()]:
                if j not in seen:
                    seen.add(j)
                    todo.append(j)
        connected = len(seen) == k
    return IntersectionGraph(cycles, pairs, connected and len(pairs) == k - 1)


class CyclePath(NamedTuple):
    cycles: tuple
    junctions: tuple  # junctions[j] is the single vertex shared by cycles j and j + 1


def cycle_path(g, u: int, v: int) -> CyclePath:
    """Chain of cycles from ``u`` to ``v`` in a bridgeless cactus.

    Consecutive cycles share exactly one vertex and the junctions together
    with ``u`` and ``v`` are pairwise distinct; it is the path between ``u``
    and ``v`` in the block-cut tree.
    """
    if u == v:
        raise InvalidArgument("cycle_path needs two distinct vertices")
    if not s_decompose(g):
        raise InvalidState("cycle_path needs a bridgeless cactus")
    bs = blocks(g)
    member = [[] for _ in range(g.n)]
    for i, b in enumerate(bs.blocks):
        for x in b.vertices:
            member[x].append(i)

    def node(x):
        return ("v", x) if len(member[x]) >= 2 else ("b", member[x][0])

    def neighbours(nd):
        kind, x = nd
        if kind == "v":
            return [("b", i) for i in member[x]]
        return [("v", y) for y in sorted(bs.blocks[x].vertices) if len(member[y]) >= 2]

    src, dst = node(u), node(v)
    prev = {src: None}
    todo = deque([src])
    while todo:
        nd = todo.popleft()
        if nd == dst:
            break
        for nb in neighbours(nd):
            if nb not in prev:
                prev[nb] = nd
                todo.append(nb)
    path = []
    nd = dst
    while nd is not None:
        path.append(nd)
        nd = prev[nd]
    path.reverse()
    chosen = [x for kind, x in path if kind == "b"]
    junctions = [x for kind, x in path[1:-1] if kind == "v"]
    cycles = tuple(block_as_cycle(g, bs.blocks[i]) for i in chosen)
    return CyclePath(cycles, tuple(junctions))
