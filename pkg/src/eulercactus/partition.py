"""Partitions of the edge set into edge-disjoint cycles."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import BudgetExceeded, InvalidState
from .graph import degrees
from .walks import Cycle

__all__ = [
    "DEFAULT_MAX_PARTITIONS",
    "CyclePartition",
    "PartitionUniqueness",
    "veblen_partition",
    "iter_partitions",
    "enumerate_partitions",
    "has_unique_partition",
]

DEFAULT_MAX_PARTITIONS = 10**5


@dataclass(frozen=True, eq=False)
class CyclePartition:
    """A set of edge-disjoint cycles covering every edge.

    Identity is the sorted tuple of sorted edge-id tuples, so two partitions
    are equal exactly when they group the edges the same way.
    """

    cycles: tuple

    def __post_init__(self):
        object.__setattr__(self, "cycles", tuple(sorted(self.cycles, key=lambda c: sorted(c.edges))))

    @property
    def key(self) -> tuple:
        return tuple(tuple(sorted(c.edges)) for c in self.cycles)

    def __eq__(self, other):
        if not isinstance(other, CyclePartition):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __lt__(self, other):
        return self.key < other.key

    def __len__(self):
        return len(self.cycles)

    def is_valid_for(self, g) -> bool:
        seen = [c.edge_set for c in self.cycles]
        total = sum(len(s) for s in seen)
        return total == g.m and frozenset().union(*seen) == frozenset(range(g.m))

    def to_json(self) -> list:
        return [list(k) for k in self.key]


def _cycle(edges, verts) -> Cycle:
    k = edges.index(min(edges))
    return Cycle(tuple(edges[k:] + edges[:k]), tuple(verts[k:] + verts[:k]))


def _check_balanced(g) -> None:
    if g.directed:
        d = degrees(g)
        for v in range(g.n):
            if d.in_degree[v] != d.out_degree[v]:
                raise InvalidState(
                    f"vertex {v} has in-degree {d.in_degree[v]} but out-degree {d.out_degree[v]}"
                )
    else:
        for v in range(g.n):
            if len(g.incident[v]) % 2:
                raise InvalidState(f"vertex {v} has odd degree {len(g.incident[v])}")


def _next_edges(g, v, usable):
    """Edges leaving ``v`` (any incident edge when undirected) in id order."""
    if g.directed:
        return [(e, g.edges[e][1]) for e in g.out_edges[v] if usable(e)]
    return sorted((e, w) for e, w in g.incident[v] if usable(e))


def veblen_partition(g) -> CyclePartition:
    """Greedy cycle partition.

    Start at the tail of the smallest unused edge and keep walking along the
    smallest unused edge out of the current vertex.  The first time a vertex
    repeats, the closed stretch since its earlier visit is a cycle; remove it
    and start over.  Balance (even degrees) guarantees the walk never stalls.
    """
    _check_balanced(g)
    used = [False] * g.m
    cycles = []
    remaining = g.m
    while remaining:
        first = used.index(False)
        start = g.edges[first][0]
        verts, edges, pos = [start], [], {start: 0}
        in_walk = set()
        while True:
            options = _next_edges(g, verts[-1], lambda e: not used[e] and e not in in_walk)
            e, w = options[0]
            edges.append(e)
            in_walk.add(e)
            if w in pos:
                i = pos[w]
                cyc_e, cyc_v = edges[i:], verts[i:]
                break
            pos[w] = len(verts)
            verts.append(w)
        for e in cyc_e:
            used[e] = True
        remaining -= len(cyc_e)
        cycles.append(_cycle(cyc_e, cyc_v))
    return CyclePartition(tuple(cycles))


def _cycles_through(g, e, uncovered):
    """Cycles containing edge ``e`` that use only edges in ``uncovered``."""
    u, v = g.edges[e]
    if g.directed and u == v:
        yield [e], [u]
        return
    on_path = {u, v}
    path_e, path_v = [e], [u, v]

    def extend(x):
        for f, y in _next_edges(g, x, lambda f: f != e and uncovered[f]):
            if y == x:
                continue
            if y == u:
                yield path_e + [f], list(path_v)
            elif y not in on_path:
                on_path.add(y)
                path_e.append(f)
                path_v.append(y)
                yield from extend(y)
                path_v.pop()
                path_e.pop()
                on_path.discard(y)

    yield from extend(v)


def iter_partitions(g) -> Iterator[CyclePartition]:
    """Yield every cycle partition of ``g`` exactly once.

    Backtracks on the smallest uncovered edge, branching over each cycle
    through it inside the uncovered edges.
    """
    uncovered = [True] * g.m
    chosen: list = []

    def rec(left):
        if left == 0:
            yield CyclePartition(tuple(chosen))
            return
        e = uncovered.index(True)
        for cyc_e, cyc_v in list(_cycles_through(g, e, uncovered)):
            for f in cyc_e:
                uncovered[f] = False
            chosen.append(_cycle(cyc_e, cyc_v))
            yield from rec(left - len(cyc_e))
            chosen.pop()
            for f in cyc_e:
                uncovered[f] = True

    if g.m:
        yield from rec(g.m)


def enumerate_partitions(g, cap: int = DEFAULT_MAX_PARTITIONS) -> list:
    out = []
    for p in iter_partitions(g):
        if len(out) >= cap:
            raise BudgetExceeded("cycle partition enumeration", cap)
        out.append(p)
    out.sort()
    return out


class PartitionUniqueness(NamedTuple):
    unique: bool
    witnesses: tuple  # the unique partition, or two distinct ones

    def __bool__(self):
        return self.unique


def has_unique_partition(g) -> PartitionUniqueness:
    """Decide uniqueness by enumerating until a second partition shows up."""
    found = []
    for p in iter_partitions(g):
        found.append(p)
        if len(found) == 2:
            break
    return PartitionUniqueness(len(found) == 1, tuple(found))
