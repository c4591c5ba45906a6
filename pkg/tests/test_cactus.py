from itertools import combinations

import pytest
from hypothesis import given, settings

from eulercactus.cactus import (
    blocks,
    cycle_path,
    intersection_graph,
    is_christmas_cactus,
    s_decompose,
)
from eulercactus.errors import InvalidArgument, InvalidState
from eulercactus.fixtures import c3, chain3, d4, de_bruijn2, digon, fig8, star3, triangle
from eulercactus.graph import Digraph, Multigraph, forget, is_eulerian, orientations
from eulercactus.partition import has_unique_partition

from .oracles import brute_in_s
from .strategies import cacti, eulerian_digraphs, eulerian_multigraphs, looped_digraphs


def test_c3_one_block():
    bs = blocks(c3())
    assert len(bs.blocks) == 1 and bs.cut_vertices == []


def test_fig8_blocks_and_cut_vertex():
    bs = blocks(fig8())
    assert [sorted(b.edges) for b in bs.blocks] == [[0, 1, 2], [3, 4, 5]]
    assert bs.cut_vertices == [0]


def test_parallel_edges_stay_in_one_block():
    bs = blocks(d4())
    assert len(bs.blocks) == 1 and bs.blocks[0].edges == frozenset(range(4))


def test_loops_are_their_own_blocks():
    bs = blocks(de_bruijn2())
    loop_blocks = [b for b in bs.blocks if len(b.edges) == 1]
    assert len(loop_blocks) == 2


def test_s_decompose_c3():
    dec = s_decompose(c3())
    assert dec and [c.edges for c in dec.cycles] == [(0, 1, 2)]
    assert dec.attach_vertices == ()


def test_s_decompose_fig8_is_valid():
    dec = s_decompose(fig8())
    assert sorted(c.edges for c in dec.cycles) == [(0, 1, 2), (3, 4, 5)]
    assert dec.attach_vertices == (0,)


def _check_gluing(g, dec):
    seen_v = set(dec.cycles[0].vertex_set)
    seen_e = set(dec.cycles[0].edge_set)
    for c, w in zip(dec.cycles[1:], dec.attach_vertices):
        assert c.vertex_set & seen_v == {w}
        assert not c.edge_set & seen_e
        seen_v |= c.vertex_set
        seen_e |= c.edge_set
    assert seen_e == set(range(g.m))


@given(cacti())
def test_generated_cacti_decompose(g):
    dec = s_decompose(g)
    assert dec
    _check_gluing(g, dec)


def test_d4_witness_block():
    res = s_decompose(d4())
    assert not res and res.block.edges == frozenset(range(4))


def test_s_decompose_needs_connected():
    with pytest.raises(InvalidState):
        s_decompose(Digraph(4, c3().edges))


def test_christmas_examples():
    assert is_christmas_cactus(chain3())
    assert is_christmas_cactus(fig8())
    assert not is_christmas_cactus(star3())
    assert not is_christmas_cactus(d4())


@given(cacti(christmas=True))
def test_christmas_generator(g):
    assert is_christmas_cactus(g)


def test_intersection_graph_examples():
    ig = intersection_graph(c3())
    assert len(ig.cycles) == 1 and ig.edges == [] and ig.is_tree
    assert intersection_graph(chain3()).is_tree
    assert not intersection_graph(star3()).is_tree  # triangle of three digons
    assert not intersection_graph(d4()).is_tree


def test_cycle_path_examples():
    p = cycle_path(c3(), 0, 2)
    assert len(p.cycles) == 1 and p.junctions == ()
    p = cycle_path(chain3(), 0, 3)
    assert [c.edges for c in p.cycles] == [(0, 1), (2, 3), (4, 5)]
    assert p.junctions == (1, 2)
    with pytest.raises(InvalidArgument):
        cycle_path(c3(), 1, 1)
    with pytest.raises(InvalidState):
        cycle_path(d4(), 0, 1)


@given(cacti())
def test_cycle_path_properties(g):
    for u, v in combinations(range(g.n), 2):
        p = cycle_path(g, u, v)
        assert u in p.cycles[0].vertex_set and v in p.cycles[-1].vertex_set
        for k, w in enumerate(p.junctions):
            assert p.cycles[k].vertex_set & p.cycles[k + 1].vertex_set == {w}
        pts = [u, *p.junctions, v]
        assert len(set(pts)) == len(pts)


@settings(max_examples=80)
@given(eulerian_digraphs())
def test_recognizer_matches_gluing_oracle(g):
    assert bool(s_decompose(g)) == brute_in_s(g)


@settings(max_examples=40)
@given(looped_digraphs())
def test_recognizer_with_loops(g):
    assert bool(s_decompose(g)) == brute_in_s(g)


@settings(max_examples=40)
@given(eulerian_multigraphs())
def test_multigraph_recognizer(x):
    assert bool(s_decompose(x)) == brute_in_s(x)


@settings(max_examples=25)
@given(eulerian_multigraphs(max_edges=7))
def test_membership_is_orientation_independent(x):
    # only Eulerian orientations can lie in S, so those are the ones compared
    in_s = bool(s_decompose(x))
    checked = 0
    for o in orientations(x):
        d = o.to_digraph()
        if is_eulerian(d):
            assert bool(s_decompose(d)) == in_s
            checked += 1
    assert checked >= 1


def test_undirected_examples():
    assert s_decompose(triangle())
    assert not s_decompose(Multigraph(2, ((0, 1),) * 4))
    assert bool(s_decompose(forget(chain3())))
    assert has_unique_partition(forget(digon()))
