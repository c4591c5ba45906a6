"""Small named graphs used throughout the tests, demos and the CLI."""

from .generators import gen_de_bruijn
from .graph import Digraph, Multigraph

__all__ = ["c3", "d4", "fig8", "star3", "chain3", "digon", "de_bruijn2", "triangle", "FIXTURES"]


def c3() -> Digraph:
    """Directed triangle 0 -> 1 -> 2 -> 0."""
    return Digraph(3, ((0, 1), (1, 2), (2, 0)))


def digon() -> Digraph:
    return Digraph(2, ((0, 1), (1, 0)))


def d4() -> Digraph:
    """Two vertices u=0, v=1 with edges a1, a2: u -> v (ids 0, 1) and b1, b2: v -> u (ids 2, 3)."""
    return Digraph(2, ((0, 1), (0, 1), (1, 0), (1, 0)))


def fig8() -> Digraph:
    """Triangles 0 -> 1 -> 2 -> 0 and 0 -> 3 -> 4 -> 0 sharing vertex 0."""
    return Digraph(5, ((0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)))


def star3() -> Digraph:
    """Three digons at the centre 0."""
    return Digraph(4, ((0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0)))


def chain3() -> Digraph:
    """Digons 0-1, 1-2, 2-3 in a row."""
    return Digraph(4, ((0, 1), (1, 0), (1, 2), (2, 1), (2, 3), (3, 2)))


def de_bruijn2() -> Digraph:
    return gen_de_bruijn(2)


def triangle() -> Multigraph:
    return Multigraph(3, ((0, 1), (1, 2), (0, 2)))


FIXTURES = {
    "c3": c3,
    "d4": d4,
    "fig8": fig8,
    "star3": star3,
    "chain3": chain3,
    "digon": digon,
    "de_bruijn2": de_bruijn2,
    "triangle": triangle,
}
