"""Eulerian circuits: construction, enumeration, B.E.S.T. counting, interlacing pairs."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable, Optional

from .arborescence import count_arborescences
from .errors import BudgetExceeded, InvalidArgument, InvalidState
from .graph import Digraph, degrees, expand_loops, is_eulerian
from .walks import Circuit, Walk, canonicalize

__all__ = [
    "DEFAULT_MAX_CIRCUITS",
    "InterlacingPair",
    "DeBruijnReport",
    "find_eulerian_circuit",
    "visit_eulerian_circuits",
    "enumerate_eulerian_circuits",
    "best_count",
    "has_unique_eulerian_circuit",
    "find_interlacing_pair",
    "interlacing_pairs",
    "de_bruijn_interlace",
    "de_bruijn_sequence",
]

DEFAULT_MAX_CIRCUITS = 10**5


def _require_eulerian(g):
    if not is_eulerian(g):
        raise InvalidState("graph is not Eulerian (needs edges, connectivity and in-degree = out-degree)")


def find_eulerian_circuit(g: Digraph) -> Circuit:
    """Hierholzer's algorithm from the tail of edge 0, always taking the
    smallest unused out-edge."""
    _require_eulerian(g)
    nxt = [0] * g.n
    out = g.out_edges
    stack_v = [g.edges[0][0]]
    stack_e: list = []
    circuit: list = []
    while stack_v:
        v = stack_v[-1]
        if nxt[v] < len(out[v]):
            e = out[v][nxt[v]]
            nxt[v] += 1
            stack_v.append(g.edges[e][1])
            stack_e.append(e)
        else:
            stack_v.pop()
            if stack_e:
                circuit.append(stack_e.pop())
    circuit.reverse()
    return canonicalize(Walk.from_edges(g, circuit))


def visit_eulerian_circuits(g: Digraph, visit: Callable[[Circuit], bool], anchor: Optional[int] = None) -> None:
    """Call ``visit`` on every Eulerian circuit until it returns True.

    Circuits are generated as the Eulerian trails that end with the edge
    ``anchor`` (default: the last edge); each circuit has exactly one such
    rotation.
    """
    _require_eulerian(g)
    m = g.m
    anchor = m - 1 if anchor is None else anchor
    tail, head = g.edges[anchor]
    used = [False] * m
    used[anchor] = True
    out = g.out_edges
    edges = g.edges
    path: list = []

    def rec(v):
        if len(path) == m - 1:
            trail = path + [anchor]
            return visit(canonicalize(Walk.from_edges(g, trail)))
        for e in out[v]:
            if not used[e]:
                used[e] = True
                path.append(e)
                stop = rec(edges[e][1])
                path.pop()
                used[e] = False
                if stop:
                    return True
        return False

    rec(head)


def enumerate_eulerian_circuits(g: Digraph, cap: int = DEFAULT_MAX_CIRCUITS, anchor: Optional[int] = None) -> list:
    """Every Eulerian circuit of ``g``, sorted by edge sequence."""
    found: list = []

    def visit(c):
        if len(found) >= cap:
            raise BudgetExceeded("Eulerian circuit enumeration", cap)
        found.append(c)
        return False

    visit_eulerian_circuits(g, visit, anchor)
    found.sort()
    return found


def best_count(g: Digraph) -> int:
    """Number of Eulerian circuits: arborescences times the product of
    ``(outdeg(v) - 1)!``.  Loops are expanded to digons first."""
    _require_eulerian(g)
    h = expand_loops(g)
    tau = count_arborescences(h, 0).count
    total = tau
    for d in degrees(h).out_degree:
        total *= factorial(d - 1)
    return total


def has_unique_eulerian_circuit(g: Digraph) -> bool:
    return best_count(g) == 1


@dataclass(frozen=True)
class InterlacingPair:
    """``a, b, a, b`` visited in that order with no other visit to ``a`` or ``b``
    in between.

    ``rotation`` is the position in ``circuit.vertices`` where the witnessing
    rotation starts; ``indices`` are positions in that rotation
    ``(v_0, ..., v_d)`` with ``v_d = v_0``.
    """

    a: int
    b: int
    rotation: int
    indices: tuple


def _positions(z: Circuit) -> dict:
    pos: dict = {}
    for i, v in enumerate(z.vertices):
        pos.setdefault(v, []).append(i)
    return pos


def _pair_witness(z: Circuit, a: int, b: int, pos: dict, ordered: bool = False) -> Optional[InterlacingPair]:
    """Witness for ``{a, b}``; with ``ordered`` only an ``a b a b`` reading counts."""
    d = z.length
    if a == b:
        p = pos.get(a, [])
        if len(p) < 3:
            return None
        s = p[0]
        idx = [q - s for q in p[:4]]
        if len(idx) == 3:
            idx.append(d)  # the closing v_d = v_0 is the fourth visit
        return InterlacingPair(a, a, s, tuple(idx))
    pa, pb = pos.get(a, []), pos.get(b, [])
    if len(pa) < 2 or len(pb) < 2:
        return None
    word = sorted([(q, a) for q in pa] + [(q, b) for q in pb])
    k = len(word)
    for j in range(k):
        x, y, x2, y2 = (word[(j + r) % k][1] for r in range(4))
        if x == x2 and y == y2 and x != y and (x == a or not ordered):
            s = word[j][0]
            idx = tuple((word[(j + r) % k][0] - s) % d for r in range(4))
            return InterlacingPair(x, y, s, idx)
    return None


def find_interlacing_pair(g: Digraph, z: Circuit, distinct: bool = False) -> Optional[InterlacingPair]:
    """First interlacing pair of the Eulerian circuit ``z``, or None.

    The occurrences of ``a`` and ``b`` around the circuit form a cyclic word;
    a rotation exhibits ``a b a b`` exactly when four cyclically consecutive
    letters of that word read ``a b a b``.  For ``a == b`` this needs three
    visits (the rotation's closing vertex repeats its first), i.e. out-degree
    at least 3.  Pairs are tried in vertex order; ``distinct`` skips ``a == b``.
    """
    if z.length != g.m or z.edge_set != frozenset(range(g.m)):
        raise InvalidArgument("z is not an Eulerian circuit of g")
    pos = _positions(z)
    verts = sorted(pos)
    for i, a in enumerate(verts):
        for b in verts[i:]:
            if distinct and a == b:
                continue
            w = _pair_witness(z, a, b, pos)
            if w is not None:
                return w
    return None


def interlacing_pairs(z: Circuit) -> set:
    """Every ordered interlacing pair ``(a, b)`` of ``z``.

    The relation need not be symmetric: occurrences ``a b a b b a`` give
    ``(a, b)`` but never ``b a b a``.
    """
    pos = _positions(z)
    verts = sorted(pos)
    return {(a, b) for a in verts for b in verts if _pair_witness(z, a, b, pos, ordered=True) is not None}


def de_bruijn_sequence(g: Digraph, z: Circuit) -> str:
    """Read the cyclic binary sequence off a circuit of a De Bruijn digraph:
    each edge contributes the last bit of its head."""
    return "".join(str(g.edges[e][1] & 1) for e in z.edges)


@dataclass(frozen=True)
class DeBruijnReport:
    n: int
    circuit_count: int
    circuit: Circuit
    sequence: str
    pair: InterlacingPair
    pair_strings: tuple


def de_bruijn_interlace(n: int, max_n: int = 4) -> DeBruijnReport:
    """Count the circuits of the order-``n`` De Bruijn digraph and exhibit an
    interlacing pair of distinct ``n``-bit strings in one of them."""
    from .generators import gen_de_bruijn

    if not 2 <= n <= max_n:
        raise InvalidArgument(f"n must lie in [2, {max_n}], got {n}")
    g = gen_de_bruijn(n)
    count = best_count(g)
    expected = 2 ** (2**n - (n + 1))
    if count != expected:
        raise AssertionError(f"De Bruijn circuit count {count} != {expected}")
    z = find_eulerian_circuit(g)
    pair = find_interlacing_pair(g, z, distinct=True)
    if pair is None:
        raise AssertionError("no distinct interlacing pair found")
    fmt = f"0{n}b"
    return DeBruijnReport(n, count, z, de_bruijn_sequence(g, z), pair, (format(pair.a, fmt), format(pair.b, fmt)))
