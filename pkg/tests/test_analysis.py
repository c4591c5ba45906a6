import json

from hypothesis import given, settings

from eulercactus.analysis import SKIPPED, Budgets, analyze, batch_verify, family_corpus
from eulercactus.fixtures import d4, fig8, star3, triangle
from eulercactus.graph import Digraph, Multigraph, forget

from .strategies import cacti, eulerian_digraphs, eulerian_multigraphs, looped_digraphs

THEOREM = [f"c{i}" for i in range(1, 9)]
PROPOSITION = ["p1", "p2", "p3", "p4", "p4_enumeration", "p5"]


def test_fig8_all_true():
    rep = analyze(fig8())
    assert all(rep.conditions[c] is True for c in THEOREM)
    assert all(rep.proposition[p] is True for p in PROPOSITION)
    assert rep.witness["unique_partition"] == [[[0, 1, 2], [3, 4, 5]]]
    assert rep.witness["interlacing_pair"] is None


def test_d4_all_false_with_witnesses():
    rep = analyze(d4())
    assert all(rep.conditions[c] is False for c in THEOREM)
    assert all(rep.proposition[p] is False for p in PROPOSITION)
    w = rep.witness
    assert len(w["partitions"]) == 2
    assert w["non_cycle_block"] == [0, 1, 2, 3]
    assert w["interlacing_pair"] is not None
    assert rep.agrees


def test_star3_splits():
    rep = analyze(star3())
    assert all(rep.conditions[c] is True for c in THEOREM)
    assert all(rep.proposition[p] is False for p in PROPOSITION)
    assert rep.agrees


def test_budget_degrades_to_skipped():
    rep = analyze(d4(), Budgets(max_cycles=2, max_lattice_edges=3, max_circuits=1))
    for c in ("c1", "c2", "c3", "c6", "c8"):
        assert rep.conditions[c] == SKIPPED
    assert rep.proposition["p3"] == SKIPPED
    assert rep.proposition["p5"] == SKIPPED
    assert rep.conditions["c4"] is False and rep.agrees


def test_not_eulerian_report():
    rep = analyze(Digraph(2, ((0, 1),)))
    out = rep.to_json()
    assert out["eulerian"] is False and "reason" in out and out["conditions"] == {}


def test_multigraph_report():
    out = analyze(triangle()).to_json()
    assert out["kind"] == "multigraph" and "proposition" not in out
    assert sorted(out["conditions"]) == ["c1", "c2", "c3", "c4", "c5", "c6"]
    assert all(out["conditions"].values())
    bad = analyze(Multigraph(2, ((0, 1),) * 4))
    assert not any(bad.conditions.values()) and bad.agrees


def test_json_schema_is_stable():
    out = json.loads(analyze(fig8()).dumps())
    assert sorted(out) == ["agrees", "conditions", "eulerian", "kind", "m", "n", "proposition", "schema", "witness"]
    assert out["schema"] == 1


@settings(max_examples=60)
@given(eulerian_digraphs())
def test_random_digraphs_agree(g):
    rep = analyze(g)
    assert rep.agrees, rep.to_json()


@settings(max_examples=40)
@given(looped_digraphs())
def test_looped_digraphs_agree(g):
    assert analyze(g, Budgets(max_lattice_edges=8)).agrees


@settings(max_examples=40)
@given(eulerian_multigraphs())
def test_multigraphs_agree(x):
    assert analyze(x).agrees


@settings(max_examples=30)
@given(cacti())
def test_cactus_multigraph_shadow_in_s(g):
    # forgetting directions of a cactus keeps it a cactus
    assert all(v is True for v in analyze(forget(g)).conditions.values())


def test_batch_parallel_matches_serial():
    corpus = family_corpus("random_eulerian", 30) + family_corpus("christmas", 10)
    one = batch_verify(corpus, jobs=1)
    two = batch_verify(corpus, jobs=2)
    assert one == two and one.ok and one.total == 40
    assert one.per_family["christmas"] == one.positives["christmas"] == 10


def test_batch_reports_errors_per_instance():
    summary = batch_verify([("bad/x", None), ("cactus/1", fig8())])
    assert summary.total == 2 and len(summary.errors) == 1 and summary.errors[0][0] == "bad/x"
