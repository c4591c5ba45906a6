"""Brute-force reference implementations.

These deliberately share no code with the library beyond the graph
containers: they enumerate edge subsets, permutations and index tuples
directly from the definitions, so agreement with the library is evidence
rather than tautology.  Only meant for small graphs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations


def _touched(edges, subset):
    vs = set()
    for e in subset:
        vs.update(edges[e])
    return vs


def _connected(edges, subset):
    subset = list(subset)
    if not subset:
        return False
    adj: dict = {}
    for e in subset:
        a, b = edges[e]
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    start = next(iter(adj))
    seen, stack = {start}, [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(adj)


def brute_directed_cycles(g) -> set:
    """Edge sets that form one directed cycle: every touched vertex has
    in- and out-degree 1 inside the set, and the set is connected."""
    outm = [0] * g.n
    inm = [0] * g.n
    for e, (t, h) in enumerate(g.edges):
        outm[t] |= 1 << e
        inm[h] |= 1 << e
    out = set()
    for mask in range(1, 1 << g.m):
        if all(
            (mask & outm[v]).bit_count() == (mask & inm[v]).bit_count() <= 1
            for v in range(g.n)
        ):
            sub = [e for e in range(g.m) if mask >> e & 1]
            if _connected(g.edges, sub):
                out.add(frozenset(sub))
    return out


def brute_undirected_cycles(x) -> set:
    """Edge sets of size >= 2 where every touched vertex has degree 2 and the set is connected."""
    out = set()
    for mask in range(1, 1 << x.m):
        sub = [e for e in range(x.m) if mask >> e & 1]
        if len(sub) < 2:
            continue
        deg: dict = {}
        for e in sub:
            for v in x.edges[e]:
                deg[v] = deg.get(v, 0) + 1
        if all(d == 2 for d in deg.values()) and _connected(x.edges, sub):
            out.add(frozenset(sub))
    return out


def brute_partitions(m: int, cycles) -> set:
    """Exact covers of ``range(m)`` by members of ``cycles``."""
    cycles = [frozenset(c) for c in cycles]
    found = set()

    def rec(left, chosen):
        if not left:
            found.add(frozenset(chosen))
            return
        e = min(left)
        for c in cycles:
            if e in c and c <= left:
                rec(left - c, chosen + [c])

    rec(frozenset(range(m)), [])
    return found


def brute_arborescences(g, root) -> set:
    """(n-1)-subsets of non-loop edges in which every non-root vertex has
    exactly one incoming edge and is reachable from ``root``."""
    usable = [e for e in range(g.m) if g.edges[e][0] != g.edges[e][1]]
    found = set()
    for sub in combinations(usable, g.n - 1):
        heads = [g.edges[e][1] for e in sub]
        if root in heads or len(set(heads)) != g.n - 1:
            continue
        reach, stack = {root}, [root]
        while stack:
            v = stack.pop()
            for e in sub:
                t, h = g.edges[e]
                if t == v and h not in reach:
                    reach.add(h)
                    stack.append(h)
        if len(reach) == g.n:
            found.add(frozenset(sub))
    return found


def brute_circuit_count(g) -> int:
    """Eulerian circuits up to rotation: closed edge sequences that start
    with edge 0 and use each edge once."""
    m = g.m
    used = [False] * m
    used[0] = True
    start = g.edges[0][0]

    def rec(v, k):
        if k == m:
            return 1 if v == start else 0
        total = 0
        for e in range(m):
            if not used[e] and g.edges[e][0] == v:
                used[e] = True
                total += rec(g.edges[e][1], k + 1)
                used[e] = False
        return total

    return rec(g.edges[0][1], 1)


def literal_interlacing_pairs(vertices) -> set:
    """Pairs (a, b) read straight off the definition.

    ``vertices`` is ``(v_0, ..., v_d)`` with ``v_d = v_0``.  For every
    rotation, look for indices ``i1 < i2 < i3 < i4`` in ``[0, d]`` with
    ``v_i1 = v_i3 = a``, ``v_i2 = v_i4 = b`` and no other index strictly
    between ``i1`` and ``i4`` carrying ``a`` or ``b``.
    """
    base = list(vertices[:-1])
    d = len(base)
    found = set()
    for r in range(d):
        rot = base[r:] + base[:r]
        rot.append(rot[0])
        for i1, i2, i3, i4 in combinations(range(d + 1), 4):
            a, b = rot[i1], rot[i2]
            if rot[i3] != a or rot[i4] != b:
                continue
            inner = [j for j in range(i1 + 1, i4) if j not in (i2, i3)]
            if all(rot[j] not in (a, b) for j in inner):
                found.add((a, b))
    return found


def _edge_multiset_degree_ok(g, sub) -> bool:
    bal: dict = {}
    for e in sub:
        t, h = g.edges[e]
        bal[t] = bal.get(t, 0) + 1
        bal[h] = bal.get(h, 0) - 1
    return all(v == 0 for v in bal.values())


def brute_in_s(g) -> bool:
    """Membership in S from the gluing definition.

    A graph is in S when its edges form a single cycle, or when some cycle
    meets the rest of the graph in exactly one vertex and removing it leaves
    a graph in S.
    """
    cycles = brute_directed_cycles(g) if g.directed else brute_undirected_cycles(g)
    cycles = [c for c in cycles]

    @lru_cache(maxsize=None)
    def ok(edges: frozenset) -> bool:
        if edges in cycles_set:
            return True
        for c in cycles:
            if not c < edges:
                continue
            rest = edges - c
            shared = _touched(g.edges, c) & _touched(g.edges, rest)
            if len(shared) == 1 and _connected(g.edges, rest) and ok(rest):
                return True
        return False

    cycles_set = set(cycles)
    return ok(frozenset(range(g.m)))


def brute_eulerian_parts(g) -> list:
    """Every partition of the edge set into connected balanced parts, by
    recursive choice of the part holding the lowest remaining edge."""
    m = g.m
    good: dict = {}

    def valid(part):
        if part not in good:
            good[part] = _connected(g.edges, part) and _edge_multiset_degree_ok(g, part)
        return good[part]

    out = []

    def rec(left, parts):
        if not left:
            out.append(frozenset(parts))
            return
        e = min(left)
        rest = sorted(left - {e})
        for k in range(len(rest) + 1):
            for extra in combinations(rest, k):
                part = frozenset((e,) + extra)
                if valid(part):
                    rec(left - part, parts + [part])

    rec(frozenset(range(m)), [])
    return out


def brute_is_lattice(elements) -> bool:
    """``elements`` are partitions (sets of frozensets); order is refinement."""
    elements = list(elements)

    def leq(p, q):
        return all(any(a <= b for b in q) for a in p)

    for p in elements:
        for q in elements:
            lows = [r for r in elements if leq(r, p) and leq(r, q)]
            if not any(all(leq(r, s) for r in lows) for s in lows):
                return False
            ups = [r for r in elements if leq(p, r) and leq(q, r)]
            if not any(all(leq(s, r) for r in ups) for s in ups):
                return False
    return True
