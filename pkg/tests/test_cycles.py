import pytest
from hypothesis import given, settings

from eulercactus.cycles import cyclomatic_number, directed_cycles, multigraph_cycles, undirected_cycles
from eulercactus.errors import BudgetExceeded, InvalidState
from eulercactus.fixtures import c3, d4, de_bruijn2, fig8, star3
from eulercactus.graph import Digraph, Multigraph, expand_loops, forget, orientations

from .oracles import brute_directed_cycles, brute_undirected_cycles
from .strategies import eulerian_digraphs, eulerian_multigraphs, looped_digraphs


def test_c3_has_one_cycle():
    cs = directed_cycles(c3())
    assert [c.edges for c in cs] == [(0, 1, 2)]


def test_d4_has_four_digons():
    assert [c.edges for c in directed_cycles(d4())] == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_fig8_and_star3():
    assert [c.edges for c in directed_cycles(fig8())] == [(0, 1, 2), (3, 4, 5)]
    assert len(directed_cycles(star3())) == 3


def test_de_bruijn2_cycles_include_loops():
    cs = directed_cycles(de_bruijn2())
    loops = [c for c in cs if c.length == 1]
    assert len(loops) == 2
    assert {c.edge_set for c in cs} == brute_directed_cycles(de_bruijn2())


def test_undirected_triangle():
    x = Multigraph(3, ((0, 1), (1, 2), (0, 2)))
    assert undirected_cycles(x) == [frozenset({0, 1, 2})]


def test_cyclomatic_examples():
    assert cyclomatic_number(c3()) == 1
    assert cyclomatic_number(d4()) == 3
    assert cyclomatic_number(de_bruijn2()) == 5  # 8 - 4 + 1, loops included


def test_cyclomatic_needs_connected():
    with pytest.raises(InvalidState):
        cyclomatic_number(Digraph(4, c3().edges))


def test_cycle_budget():
    with pytest.raises(BudgetExceeded):
        directed_cycles(d4(), cap=3)


@settings(max_examples=60)
@given(eulerian_digraphs(max_edges=11))
def test_directed_cycles_match_subset_oracle(g):
    assert {c.edge_set for c in directed_cycles(g)} == brute_directed_cycles(g)


@settings(max_examples=40)
@given(looped_digraphs())
def test_loop_cycles_match_expansion(g):
    # each loop is one length-1 cycle; expanding loops to digons keeps the count
    assert len(directed_cycles(g)) == len(directed_cycles(expand_loops(g)))
    assert {c.edge_set for c in directed_cycles(g)} == brute_directed_cycles(g)


@settings(max_examples=40)
@given(eulerian_multigraphs())
def test_undirected_cycles_match_subset_oracle(x):
    assert set(undirected_cycles(x)) == brute_undirected_cycles(x)


@settings(max_examples=40)
@given(eulerian_multigraphs())
def test_directed_cycles_of_multigraph_orient_undirected_ones(x):
    f = undirected_cycles(x)
    expected = sum(1 if len(c) == 2 else 2 for c in f)
    assert len(multigraph_cycles(x)) == expected
    assert {c.edge_set for c in multigraph_cycles(x)} == set(f)


@settings(max_examples=20)
@given(eulerian_multigraphs(max_edges=7))
def test_orientation_cycles_inject_into_undirected(x):
    f = set(undirected_cycles(x))
    for o in orientations(x):
        sets = [c.edge_set for c in directed_cycles(o.to_digraph())]
        assert len(set(sets)) == len(sets)
        assert set(sets) <= f


@given(eulerian_digraphs())
def test_cycle_count_at_least_cyclomatic(g):
    assert len(directed_cycles(g)) >= cyclomatic_number(g)
    assert len(undirected_cycles(forget(g))) >= cyclomatic_number(forget(g))
