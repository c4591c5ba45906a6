"""Seeded graph families.

All randomness comes from ``Lcg64`` so the same seed gives the same graph on
any platform and in any language that copies the recurrence below.
"""

from __future__ import annotations

from .errors import GenerationFailed, InvalidArgument
from .graph import Digraph, Multigraph, components, is_connected

__all__ = [
    "Lcg64",
    "gen_cactus",
    "gen_christmas_cactus",
    "gen_de_bruijn",
    "gen_random_eulerian",
    "gen_random_even_multigraph",
    "gen_two_in_two_out",
]

_MASK64 = (1 << 64) - 1


class Lcg64:
    """64-bit linear congruential generator.

    state' = state * 6364136223846793005 + 1442695040888963407  (mod 2**64)

    The seed is taken mod 2**64 and stepped once before the first output.
    Each output is the high 32 bits of the new state.  ``below(k)`` maps an
    output to ``[0, k)`` as ``(x * k) >> 32``.
    """

    MULTIPLIER = 6364136223846793005
    INCREMENT = 1442695040888963407

    def __init__(self, seed: int):
        self.state = seed & _MASK64
        self.next_u32()

    def next_u32(self) -> int:
        self.state = (self.state * self.MULTIPLIER + self.INCREMENT) & _MASK64
        return self.state >> 32

    def below(self, k: int) -> int:
        if k <= 0:
            raise InvalidArgument("below() needs a positive bound")
        return (self.next_u32() * k) >> 32

    def between(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def shuffle(self, items: list) -> list:
        """Fisher-Yates, in place, from the back."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items


def _glue_cycle(edges, a, b, length, fresh, split):
    """Append a directed cycle of ``length`` through tree vertices ``a`` and ``b``.

    The cycle runs ``a -> ... -> b -> ... -> a`` with ``split`` fresh vertices
    on the first arc and the rest on the second.  Returns the next fresh id.
    """
    inner = length - 2
    first = list(range(fresh, fresh + split))
    second = list(range(fresh + split, fresh + inner))
    route = [a] + first + [b] + second + [a]
    for t, h in zip(route, route[1:]):
        edges.append((t, h))
    return fresh + inner


def gen_cactus(seed: int, t: int, max_len: int = 4, parents=None, lengths=None) -> Digraph:
    """Random bridgeless cactus with ``t`` cycles.

    A random tree on ``t + 1`` nodes (node ``i`` hangs from a node below it)
    has each tree edge replaced by a directed cycle of length in
    ``[2, max_len]`` through both of its ends.  ``parents`` (length ``t``,
    parent of node ``i + 1``) and ``lengths`` override the random choices.
    """
    if t < 1 or max_len < 2:
        raise InvalidArgument("gen_cactus needs t >= 1 and max_len >= 2")
    rng = Lcg64(seed)
    edges: list = []
    fresh = t + 1
    for i in range(1, t + 1):
        p = parents[i - 1] if parents is not None else rng.below(i)
        length = lengths[i - 1] if lengths is not None else rng.between(2, max_len)
        if length < 2 or not 0 <= p < i:
            raise InvalidArgument(f"bad parent {p} or length {length} for tree node {i}")
        split = rng.below(length - 1)
        fresh = _glue_cycle(edges, p, i, length, fresh, split)
    return Digraph(fresh, tuple(edges))


def gen_christmas_cactus(seed: int, t: int, max_len: int = 4) -> Digraph:
    """Random bridgeless cactus whose vertices each lie on at most two cycles.

    Cycles are added one at a time; each new cycle is glued at a random vertex
    that so far lies on exactly one cycle, so no vertex ever joins a third.
    """
    if t < 1 or max_len < 2:
        raise InvalidArgument("gen_christmas_cactus needs t >= 1 and max_len >= 2")
    rng = Lcg64(seed)
    first_len = rng.between(2, max_len)
    edges = [(i, (i + 1) % first_len) for i in range(first_len)]
    n = first_len
    on_cycles = [1] * n
    for _ in range(1, t):
        free = [v for v in range(n) if on_cycles[v] == 1]
        a = free[rng.below(len(free))]
        length = rng.between(2, max_len)
        route = [a] + list(range(n, n + length - 1)) + [a]
        edges.extend(zip(route, route[1:]))
        on_cycles[a] += 1
        on_cycles.extend([1] * (length - 1))
        n += length - 1
    return Digraph(n, tuple(edges))


def gen_de_bruijn(n: int, max_n: int = 5) -> Digraph:
    """Binary De Bruijn digraph of order ``n``.

    Vertex ``s`` is the integer with the bits ``s_1 ... s_n`` (``s_1`` most
    significant); its two out-edges go to ``(s << 1 | x) mod 2**n`` for
    ``x = 0, 1``, in that order.  Loops sit at all-zeros and all-ones.
    """
    if not 1 <= n <= max_n:
        raise InvalidArgument(f"n must lie in [1, {max_n}], got {n}")
    size = 1 << n
    mask = size - 1
    edges = [(s, ((s << 1) & mask) | x) for s in range(size) for x in (0, 1)]
    return Digraph(size, tuple(edges), allow_loops=True)


def gen_random_eulerian(seed: int, n: int, k: int, max_len: int | None = None) -> Digraph:
    """Union of ``k`` random directed cycles on ``n`` vertices, restricted to
    the weakly connected component carrying edge 0.

    Each cycle has length in ``[2, min(n, max_len)]`` and visits distinct
    vertices in random order.  Parallel edges are kept.  Every cycle lies in a
    single component, so the component is Eulerian.
    """
    if n < 2 or k < 1:
        raise InvalidArgument("gen_random_eulerian needs n >= 2 and k >= 1")
    top = n if max_len is None else max(2, min(n, max_len))
    rng = Lcg64(seed)
    edges = []
    for _ in range(k):
        length = rng.between(2, top)
        verts = rng.shuffle(list(range(n)))[:length]
        edges.extend(zip(verts, verts[1:] + verts[:1]))
    g = Digraph(n, tuple(edges))
    comp = next(c for c in components(g) if edges[0][0] in c)
    index = {v: i for i, v in enumerate(comp)}
    kept = tuple((index[a], index[b]) for a, b in edges if a in index)
    return Digraph(len(comp), kept)


def gen_random_even_multigraph(seed: int, n: int, k: int, max_len: int | None = None) -> Multigraph:
    """Connected multigraph with every degree even: ``gen_random_eulerian``
    with directions forgotten.  A directed digon becomes two parallel edges."""
    g = gen_random_eulerian(seed, n, k, max_len)
    return Multigraph(g.n, g.edges)


def gen_two_in_two_out(seed: int, n: int, retries: int = 1000) -> Digraph:
    """Connected loopless digraph with every in- and out-degree equal to 2.

    Vertex ``v`` gets edges to ``p(v)`` and ``q(v)`` for two random
    derangements ``p``, ``q``; draws repeat until the result is connected.
    Edges are listed as ``v -> p(v)``, ``v -> q(v)`` for ``v = 0, 1, ...``.
    """
    if n < 2:
        raise InvalidArgument("gen_two_in_two_out needs n >= 2")
    rng = Lcg64(seed)

    def derangement():
        while True:
            perm = rng.shuffle(list(range(n)))
            if all(perm[v] != v for v in range(n)):
                return perm

    for _ in range(retries):
        p, q = derangement(), derangement()
        edges = tuple(e for v in range(n) for e in ((v, p[v]), (v, q[v])))
        g = Digraph(n, edges)
        if is_connected(g):
            return g
    raise GenerationFailed(f"no connected 2-in 2-out digraph on {n} vertices after {retries} draws")
