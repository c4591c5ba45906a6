"""Hypothesis strategies built on the seeded generators."""

from hypothesis import strategies as st

from eulercactus.generators import gen_cactus, gen_christmas_cactus, gen_random_eulerian
from eulercactus.graph import Digraph, forget

seeds = st.integers(min_value=0, max_value=2**63)


@st.composite
def eulerian_digraphs(draw, max_edges=10):
    seed = draw(seeds)
    n = draw(st.integers(2, 6))
    k = draw(st.integers(1, 4))
    g = gen_random_eulerian(seed, n, k, max_len=4)
    while g.m > max_edges:
        g = gen_random_eulerian(seed, n, 1, max_len=4)
    return g


@st.composite
def cacti(draw, christmas=False):
    seed = draw(seeds)
    t = draw(st.integers(1, 4))
    if christmas:
        return gen_christmas_cactus(seed, t, max_len=3)
    return gen_cactus(seed, t, max_len=3)


@st.composite
def looped_digraphs(draw):
    """An Eulerian digraph with a few loops sprinkled on its vertices."""
    g = draw(eulerian_digraphs(max_edges=8))
    at = draw(st.lists(st.integers(0, g.n - 1), min_size=1, max_size=3))
    return Digraph(g.n, g.edges + tuple((v, v) for v in at), allow_loops=True)


@st.composite
def eulerian_multigraphs(draw, max_edges=9):
    """Undirected shadow of an Eulerian digraph: every degree is even."""
    return forget(draw(eulerian_digraphs(max_edges=max_edges)))
