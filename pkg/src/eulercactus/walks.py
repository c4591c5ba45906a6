"""Walks, trails, circuits (closed trails up to rotation) and cycles."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import InvalidArgument, MalformedWalk

__all__ = [
    "Walk",
    "WalkClass",
    "Circuit",
    "Cycle",
    "validate",
    "canonicalize",
    "first_simple_closed_subtrail",
    "remove_subtrail",
]


@dataclass(frozen=True)
class Walk:
    """Alternating sequence ``v0 e1 v1 ... ed vd``.

    Stored as ``vertices = (v0, ..., vd)`` and ``edges = (e1, ..., ed)``, so
    ``edges[k]`` runs from ``vertices[k]`` to ``vertices[k + 1]``.
    """

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(self.vertices) != len(self.edges) + 1:
            raise InvalidArgument("a walk has exactly one more vertex than edges")

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    @property
    def is_trail(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def rotate(self, k: int) -> "Walk":
        """Closed walk started at position ``k`` instead of 0."""
        if not self.closed:
            raise InvalidArgument("only closed walks can be rotated")
        d = self.length
        k %= d
        core = self.vertices[:-1]
        vs = core[k:] + core[:k]
        return Walk(vs + (vs[0],), self.edges[k:] + self.edges[:k])

    def subtrail(self, i: int, j: int) -> "Walk":
        """``v_i w v_j``: the stretch from position ``i`` to position ``j``."""
        return Walk(self.vertices[i : j + 1], self.edges[i:j])

    @classmethod
    def from_edges(cls, g, edges, start=None) -> "Walk":
        """Walk along ``edges`` in ``g``.

        In a multigraph the start vertex is ambiguous; ``start`` picks it
        (default: the first endpoint of the first edge).
        """
        edges = tuple(edges)
        if not edges:
            raise InvalidArgument("empty edge sequence")
        if g.directed:
            vs = [g.edges[edges[0]][0]]
            for e in edges:
                vs.append(g.edges[e][1])
            return cls(tuple(vs), edges)
        cur = g.edges[edges[0]][0] if start is None else start
        vs = [cur]
        for e in edges:
            a, b = g.edges[e]
            cur = b if cur == a else a
            vs.append(cur)
        return cls(tuple(vs), edges)


class WalkClass(enum.IntEnum):
    WALK = 0
    TRAIL = 1
    CLOSED_TRAIL = 2
    SIMPLE_CLOSED_TRAIL = 3


def validate(w: Walk, g) -> WalkClass:
    """Strongest class that ``w`` belongs to in ``g``.

    Raises MalformedWalk with the offending edge position when an edge does
    not join the neighbouring vertices (respecting direction in a digraph).
    """
    if w.length == 0:
        raise MalformedWalk("a walk needs at least one edge", 0)
    for k, e in enumerate(w.edges):
        if not 0 <= e < g.m:
            raise MalformedWalk(f"edge {e} does not exist", k)
        a, b = w.vertices[k], w.vertices[k + 1]
        t, h = g.edges[e]
        ok = (t, h) == (a, b) if g.directed else {t, h} == {a, b}
        if not ok:
            raise MalformedWalk(f"edge {e} does not join {a} and {b}", k)
    if not w.is_trail:
        return WalkClass.WALK
    if not w.closed:
        return WalkClass.TRAIL
    inner = w.vertices[:-1]
    if len(set(inner)) == len(inner):
        return WalkClass.SIMPLE_CLOSED_TRAIL
    return WalkClass.CLOSED_TRAIL


@dataclass(frozen=True, eq=False)
class Circuit:
    """Closed trail up to cyclic rotation.

    ``edges`` is the rotation that starts with the smallest edge id, which is
    the lexicographically minimal rotation since a trail never repeats an edge.
    ``vertices[k]`` is where ``edges[k]`` starts.  Equality and hashing use the
    edge sequence only.
    """

    edges: tuple
    vertices: tuple

    def __eq__(self, other):
        if not isinstance(other, Circuit):
            return NotImplemented
        return self.edges == other.edges

    def __hash__(self):
        return hash(self.edges)

    def __lt__(self, other):
        return (len(self.edges), self.edges) < (len(other.edges), other.edges)

    @property
    def length(self) -> int:
        return len(self.edges)

    @property
    def edge_set(self) -> frozenset:
        return frozenset(self.edges)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @property
    def is_cycle(self) -> bool:
        return len(set(self.vertices)) == len(self.vertices)

    def as_walk(self) -> Walk:
        return Walk(self.vertices + (self.vertices[0],), self.edges)

    def __str__(self) -> str:
        return ",".join(map(str, self.edges))


@dataclass(frozen=True, eq=False)
class Cycle(Circuit):
    """A circuit that repeats no vertex."""

    def __post_init__(self):
        if not self.is_cycle:
            raise InvalidArgument(f"circuit {self} repeats a vertex")


def canonicalize(t: Walk) -> Circuit:
    """Canonical representative of the rotation class of a closed trail.

    Returns a ``Cycle`` when the trail is simple.
    """
    if not (t.length and t.closed and t.is_trail):
        raise InvalidArgument("canonicalize needs a non-empty closed trail")
    k = t.edges.index(min(t.edges))
    r = t.rotate(k) if k else t
    cls = Cycle if len(set(r.vertices[:-1])) == r.length else Circuit
    return cls(r.edges, r.vertices[:-1])


def first_simple_closed_subtrail(t: Walk):
    """``(cycle, i, j)`` for the first simple closed subtrail ``v_i t v_j``.

    ``j`` is the smallest index that repeats an earlier vertex ``v_i``.
    """
    if not (t.length and t.closed):
        raise InvalidArgument("first_simple_closed_subtrail needs a closed trail")
    last = {}
    for j, v in enumerate(t.vertices):
        if v in last:
            i = last[v]
            return canonicalize(t.subtrail(i, j)), i, j
        last[v] = j
    raise AssertionError("a closed walk always repeats its first vertex")


def remove_subtrail(t: Walk, i: int, j: int) -> Walk | None:
    """Cut the closed subtrail ``v_i t v_j`` (with ``v_i == v_j``) out of ``t``.

    Returns the remaining closed walk, or None when nothing is left.
    """
    if t.vertices[i] != t.vertices[j]:
        raise InvalidArgument("subtrail endpoints differ")
    vs = t.vertices[: i + 1] + t.vertices[j + 1 :]
    es = t.edges[:i] + t.edges[j:]
    if not es:
        return None
    return Walk(vs, es)
