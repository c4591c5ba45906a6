"""The poset T(D): partitions of the edge set into connected Eulerian parts,
ordered by refinement."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import BudgetExceeded
from .graph import edge_subgraph, is_eulerian

__all__ = [
    "DEFAULT_MAX_LATTICE_EDGES",
    "DEFAULT_MAX_LATTICE_ELEMENTS",
    "EulerianPartition",
    "Poset",
    "Condition8",
    "set_partitions_rgs",
    "enumerate_eulerian_partitions",
    "build_poset",
    "check_condition_8",
]

DEFAULT_MAX_LATTICE_EDGES = 10
DEFAULT_MAX_LATTICE_ELEMENTS = 10**5


def set_partitions_rgs(k: int) -> Iterator[list]:
    """Restricted growth strings of length ``k`` in lexicographic order.

    ``a[0] = 0`` and ``a[i] <= 1 + max(a[:i])``; ``a[i]`` is the block of
    item ``i``.  The yielded list is reused, copy it to keep it.
    """
    if k == 0:
        yield []
        return
    a = [0] * k
    b = [1] * k  # b[i] = 1 + max(a[:i]), the largest value allowed at i
    while True:
        yield a
        i = k - 1
        while i > 0 and a[i] == b[i]:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        top = max(b[i], a[i] + 1)
        for j in range(i + 1, k):
            a[j] = 0
            b[j] = top


@dataclass(frozen=True)
class EulerianPartition:
    """Edge partition whose parts each span a connected Eulerian subgraph."""

    parts: tuple  # sorted tuple of sorted edge-id tuples

    @property
    def masks(self) -> tuple:
        return tuple(sum(1 << e for e in p) for p in self.parts)

    def refines(self, other: "EulerianPartition") -> bool:
        """Every part of ``self`` lies inside a part of ``other``."""
        theirs = other.masks
        return all(any(p & q == p for q in theirs) for p in self.masks)

    def to_json(self) -> list:
        return [list(p) for p in self.parts]


def enumerate_eulerian_partitions(
    g,
    cap: int = DEFAULT_MAX_LATTICE_ELEMENTS,
    max_edges: int = DEFAULT_MAX_LATTICE_EDGES,
) -> list:
    """All elements of T(g), in restricted-growth-string order of their edge labelling."""
    if g.m > max_edges:
        raise BudgetExceeded(f"lattice enumeration over {g.m} edges", max_edges)
    valid: dict = {}

    def ok(mask):
        if mask not in valid:
            edges = [e for e in range(g.m) if mask >> e & 1]
            valid[mask] = is_eulerian(edge_subgraph(g, edges)[0])
        return valid[mask]

    out = []
    for rgs in set_partitions_rgs(g.m):
        masks = [0] * (max(rgs) + 1 if rgs else 0)
        for e, blk in enumerate(rgs):
            masks[blk] |= 1 << e
        if all(ok(mk) for mk in masks):
            if len(out) >= cap:
                raise BudgetExceeded("lattice element enumeration", cap)
            parts = tuple(sorted(tuple(e for e in range(g.m) if mk >> e & 1) for mk in masks))
            out.append(EulerianPartition(parts))
    return out


class Poset:
    """Finite poset given by its elements and a ``leq`` predicate.

    Down-sets and up-sets are stored as integer bitmasks over element indices.
    """

    def __init__(self, elements, leq):
        self.elements = list(elements)
        k = len(self.elements)
        self.down = [0] * k
        self.up = [0] * k
        for i in range(k):
            for j in range(k):
                if leq(self.elements[i], self.elements[j]):
                    self.down[j] |= 1 << i
                    self.up[i] |= 1 << j

    def __len__(self):
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.down[j] >> i & 1)

    def _bits(self, mask):
        return [i for i in range(len(self)) if mask >> i & 1]

    def meet(self, i: int, j: int):
        """Greatest common lower bound, or None when it does not exist."""
        lower = self.down[i] & self.down[j]
        for k in self._bits(lower):
            if self.down[k] == lower:
                return k
        return None

    def join(self, i: int, j: int):
        upper = self.up[i] & self.up[j]
        for k in self._bits(upper):
            if self.up[k] == upper:
                return k
        return None

    def minimal(self) -> list:
        return [i for i in range(len(self)) if self.down[i] == 1 << i]

    def maximal(self) -> list:
        return [i for i in range(len(self)) if self.up[i] == 1 << i]

    def is_join_semilattice(self) -> bool:
        k = len(self)
        return all(self.join(i, j) is not None for i in range(k) for j in range(i + 1, k))

    def is_lattice(self) -> bool:
        k = len(self)
        return all(
            self.join(i, j) is not None and self.meet(i, j) is not None
            for i in range(k)
            for j in range(i + 1, k)
        )

    def covers(self) -> list:
        """Pairs ``(i, j)`` with ``i < j`` and nothing strictly between."""
        out = []
        for j in range(len(self)):
            below = self.down[j] & ~(1 << j)
            for i in self._bits(below):
                between = below & self.up[i] & ~(1 << i)
                if not between:
                    out.append((i, j))
        return sorted(out)

    def to_json(self) -> dict:
        return {
            "elements": [e.to_json() if hasattr(e, "to_json") else e for e in self.elements],
            "covers": [list(c) for c in self.covers()],
        }


def build_poset(g, cap: int = DEFAULT_MAX_LATTICE_ELEMENTS, max_edges: int = DEFAULT_MAX_LATTICE_EDGES) -> Poset:
    return Poset(enumerate_eulerian_partitions(g, cap, max_edges), EulerianPartition.refines)


class Condition8(NamedTuple):
    is_lattice: bool
    minimal_count: int
    is_join_semilattice: bool
    minimal: list  # the minimal elements of T(g)


def check_condition_8(g, cap: int = DEFAULT_MAX_LATTICE_ELEMENTS, max_edges: int = DEFAULT_MAX_LATTICE_EDGES) -> Condition8:
    """Is T(g) a lattice?  Meets and joins are found by brute force over
    common lower and upper bounds."""
    poset = build_poset(g, cap, max_edges)
    mins = poset.minimal()
    return Condition8(
        poset.is_lattice(),
        len(mins),
        poset.is_join_semilattice(),
        [poset.elements[i] for i in mins],
    )
