"""Condition batteries: evaluate every characterization independently and
check that they agree."""

from __future__ import annotations

import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .arborescence import count_arborescences
from .cactus import intersection_graph, is_christmas_cactus, s_decompose
from .cycles import (
    DEFAULT_MAX_CYCLES,
    cyclomatic_number,
    directed_cycles,
    undirected_cycles,
)
from .errors import BudgetExceeded
from .euler import (
    DEFAULT_MAX_CIRCUITS,
    best_count,
    find_eulerian_circuit,
    find_interlacing_pair,
    visit_eulerian_circuits,
)
from .generators import (
    gen_cactus,
    gen_christmas_cactus,
    gen_de_bruijn,
    gen_random_eulerian,
    gen_random_even_multigraph,
    gen_two_in_two_out,
)
from .graph import degrees, is_eulerian
from .lattice import DEFAULT_MAX_LATTICE_EDGES, check_condition_8
from .partition import DEFAULT_MAX_PARTITIONS, has_unique_partition

__all__ = [
    "SCHEMA_VERSION",
    "SKIPPED",
    "Budgets",
    "ConditionReport",
    "analyze",
    "BatchSummary",
    "batch_verify",
    "family_corpus",
    "FAMILIES",
]

SCHEMA_VERSION = 1
SKIPPED = "skipped: budget"


@dataclass(frozen=True)
class Budgets:
    max_cycles: int = DEFAULT_MAX_CYCLES
    max_partitions: int = DEFAULT_MAX_PARTITIONS
    max_circuits: int = DEFAULT_MAX_CIRCUITS
    max_lattice_edges: int = DEFAULT_MAX_LATTICE_EDGES


@dataclass
class ConditionReport:
    kind: str
    n: int
    m: int
    eulerian: bool
    conditions: dict = field(default_factory=dict)
    proposition: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)
    reason: Optional[str] = None

    @staticmethod
    def _agree(values) -> bool:
        seen = {v for v in values if isinstance(v, bool)}
        return len(seen) <= 1

    @property
    def theorem_agrees(self) -> bool:
        return self._agree(self.conditions.values())

    @property
    def proposition_agrees(self) -> bool:
        return self._agree(self.proposition.values())

    @property
    def agrees(self) -> bool:
        return self.theorem_agrees and self.proposition_agrees

    def to_json(self) -> dict:
        out = {
            "schema": SCHEMA_VERSION,
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "eulerian": self.eulerian,
            "conditions": self.conditions,
            "witness": self.witness,
            "agrees": self.agrees,
        }
        if self.kind == "digraph":
            out["proposition"] = self.proposition
        if self.reason is not None:
            out["reason"] = self.reason
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _edge_usage(cycle_edge_sets, m):
    usage = [0] * m
    for s in cycle_edge_sets:
        for e in s:
            usage[e] += 1
    return usage


def _cycle_conditions(report, edge_sets, m, cyclomatic):
    """Conditions (1), (2), (3), (6) from the list of all cycles."""
    usage = _edge_usage(edge_sets, m)
    report.conditions["c1"] = all(
        not (a & b) for i, a in enumerate(edge_sets) for b in edge_sets[i + 1 :]
    )
    report.conditions["c2"] = all(u == 1 for u in usage)
    covered = frozenset().union(*edge_sets) if edge_sets else frozenset()
    report.conditions["c3"] = sum(len(s) for s in edge_sets) == m and covered == frozenset(range(m))
    report.conditions["c6"] = len(edge_sets) == cyclomatic
    report.witness["cycle_count"] = len(edge_sets)
    report.witness["cyclomatic_number"] = cyclomatic
    shared = [e for e, u in enumerate(usage) if u > 1]
    if shared:
        report.witness["shared_edge"] = shared[0]


def _partition_condition(report, g):
    res = has_unique_partition(g)
    report.conditions["c4"] = res.unique
    key = "unique_partition" if res.unique else "partitions"
    report.witness[key] = [p.to_json() for p in res.witnesses]


def _s_condition(report, g):
    dec = s_decompose(g)
    report.conditions["c5"] = bool(dec)
    if dec:
        report.witness["s_decomposition"] = {
            "cycles": [list(c.edges) for c in dec.cycles],
            "attach": list(dec.attach_vertices),
        }
    else:
        report.witness["non_cycle_block"] = sorted(dec.block.edges) if dec.block else None
    return dec


def _proposition(report, g, budgets, in_s):
    prop = report.proposition
    prop["p1"] = bool(in_s) and degrees(g).max_out <= 2
    prop["p2"] = is_christmas_cactus(g)
    try:
        prop["p3"] = intersection_graph(g, budgets.max_cycles).is_tree
    except BudgetExceeded:
        prop["p3"] = SKIPPED
    count = best_count(g)
    report.witness["circuit_count"] = count
    prop["p4"] = count == 1

    seen = []

    def second(_):
        seen.append(1)
        return len(seen) >= 2

    visit_eulerian_circuits(g, second)
    prop["p4_enumeration"] = len(seen) == 1

    clean = []
    visited = [0]

    def no_pair(z):
        visited[0] += 1
        if find_interlacing_pair(g, z) is None:
            clean.append(z)
            return True
        if visited[0] >= budgets.max_circuits:
            raise BudgetExceeded("interlacing search", budgets.max_circuits)
        return False

    try:
        visit_eulerian_circuits(g, no_pair)
        prop["p5"] = bool(clean)
    except BudgetExceeded:
        prop["p5"] = SKIPPED
    z = find_eulerian_circuit(g)
    pair = find_interlacing_pair(g, z)
    report.witness["circuit"] = list(z.edges)
    report.witness["interlacing_pair"] = (
        None
        if pair is None
        else {"a": pair.a, "b": pair.b, "rotation": pair.rotation, "indices": list(pair.indices)}
    )


def analyze(g, budgets: Budgets = Budgets()) -> ConditionReport:
    """Evaluate every characterizing condition of ``g`` on its own.

    For a digraph: theorem conditions c1-c8 and proposition conditions p1-p5
    (p4 twice: by B.E.S.T. count and by enumeration).  For a multigraph: the
    six undirected conditions c1-c6.  A condition whose enumeration would
    exceed its budget is reported as ``"skipped: budget"``.
    """
    kind = "digraph" if g.directed else "multigraph"
    report = ConditionReport(kind, g.n, g.m, is_eulerian(g))
    if not report.eulerian:
        report.reason = "graph is not connected Eulerian"
        return report

    try:
        if g.directed:
            edge_sets = [c.edge_set for c in directed_cycles(g, budgets.max_cycles)]
        else:
            edge_sets = undirected_cycles(g, budgets.max_cycles)
        _cycle_conditions(report, edge_sets, g.m, cyclomatic_number(g))
    except BudgetExceeded:
        for c in ("c1", "c2", "c3", "c6"):
            report.conditions[c] = SKIPPED
    _partition_condition(report, g)
    in_s = _s_condition(report, g)
    if g.directed:
        tau = count_arborescences(g, 0).count
        report.conditions["c7"] = tau == 1
        report.witness["arborescences"] = tau
        if g.m <= budgets.max_lattice_edges:
            c8 = check_condition_8(g, max_edges=budgets.max_lattice_edges)
            report.conditions["c8"] = c8.is_lattice
            report.witness["lattice_minimal_count"] = c8.minimal_count
        else:
            report.conditions["c8"] = SKIPPED
        _proposition(report, g, budgets, in_s)
    report.conditions = dict(sorted(report.conditions.items()))
    report.proposition = dict(sorted(report.proposition.items()))
    return report


def _random_eulerian_family(count, seed, max_edges=12):
    out, i = [], 0
    while len(out) < count:
        s = seed + i
        n, k = 2 + i % 5, 1 + (i // 5) % 4
        g = gen_random_eulerian(s, n, k, max_len=4)
        if g.m <= max_edges:
            out.append((f"random_eulerian/seed={s},n={n},k={k}", g))
        i += 1
    return out


FAMILIES = {
    "random_eulerian": _random_eulerian_family,
    "cactus": lambda count, seed: [
        (f"cactus/seed={seed + i},t={1 + i % 4}", gen_cactus(seed + i, 1 + i % 4, max_len=3))
        for i in range(count)
    ],
    "christmas": lambda count, seed: [
        (f"christmas/seed={seed + i},t={1 + i % 4}", gen_christmas_cactus(seed + i, 1 + i % 4, max_len=3))
        for i in range(count)
    ],
    "two_in_two_out": lambda count, seed: [
        (f"two_in_two_out/seed={seed + i},n={2 + i % 7}", gen_two_in_two_out(seed + i, 2 + i % 7))
        for i in range(count)
    ],
    "random_multigraph": lambda count, seed: [
        (f"random_multigraph/seed={seed + i},n={2 + i % 5},k={1 + (i // 5) % 3}",
         gen_random_even_multigraph(seed + i, 2 + i % 5, 1 + (i // 5) % 3, max_len=4))
        for i in range(count)
    ],
    "de_bruijn": lambda count, seed: [(f"de_bruijn/n={n}", gen_de_bruijn(n)) for n in range(1, 1 + min(count, 3))],
}


def family_corpus(family: str, count: int, seed: int = 0) -> list:
    """Deterministic ``(name, graph)`` instances of a generator family.

    ``random_eulerian`` keeps only instances with at most 12 edges; cactus
    families use cycles of length at most 3 and up to 4 cycles.
    """
    if family not in FAMILIES:
        raise KeyError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    return FAMILIES[family](count, seed)


@dataclass
class BatchSummary:
    total: int = 0
    per_family: Counter = field(default_factory=Counter)
    positives: Counter = field(default_factory=Counter)
    disagreements: list = field(default_factory=list)
    errors: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.errors

    def lines(self) -> list:
        out = []
        for fam in sorted(self.per_family):
            out.append(f"{fam}: {self.per_family[fam]} instances, {self.positives[fam]} unique-partition")
        out.append(f"total: {self.total}, disagreements: {len(self.disagreements)}, errors: {len(self.errors)}")
        out += [f"DISAGREE {name}" for name in self.disagreements]
        out += [f"ERROR {name}: {msg}" for name, msg in self.errors]
        return out


def _analyze_one(args):
    name, g, budgets = args
    try:
        return name, analyze(g, budgets), None
    except Exception as exc:  # reported per instance
        return name, None, f"{type(exc).__name__}: {exc}"


def batch_verify(instances: Iterable, budgets: Budgets = Budgets(), jobs: int = 1) -> BatchSummary:
    """Run ``analyze`` over ``(name, graph)`` pairs; results keep input order."""
    work = [(name, g, budgets) for name, g in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_analyze_one, work, chunksize=8))
    else:
        results = [_analyze_one(w) for w in work]
    summary = BatchSummary()
    for name, report, err in results:
        fam = name.split("/", 1)[0]
        summary.total += 1
        summary.per_family[fam] += 1
        if err is not None:
            summary.errors.append((name, err))
            continue
        if report.conditions.get("c4") is True:
            summary.positives[fam] += 1
        if not report.agrees:
            summary.disagreements.append(name)
    return summary
