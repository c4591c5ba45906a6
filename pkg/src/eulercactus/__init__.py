"""Eulerian digraphs and multigraphs with a unique cycle partition
(bridgeless cacti) or a unique Eulerian circuit (Christmas cacti)."""

from .analysis import Budgets, ConditionReport, analyze, batch_verify, family_corpus
from .arborescence import count_arborescences, enumerate_arborescences
from .cactus import blocks, intersection_graph, is_christmas_cactus, s_decompose
from .cycles import cyclomatic_number, directed_cycles, multigraph_cycles, undirected_cycles
from .errors import (
    BudgetExceeded,
    GenerationFailed,
    GraphError,
    InvalidArgument,
    InvalidState,
    MalformedWalk,
    ParseError,
)
from .euler import (
    best_count,
    de_bruijn_interlace,
    enumerate_eulerian_circuits,
    find_eulerian_circuit,
    find_interlacing_pair,
    has_unique_eulerian_circuit,
)
from .generators import (
    Lcg64,
    gen_cactus,
    gen_christmas_cactus,
    gen_de_bruijn,
    gen_random_eulerian,
    gen_random_even_multigraph,
    gen_two_in_two_out,
)
from .graph import Digraph, Multigraph, contract_edge, expand_loops, is_eulerian
from .io import format_graph, parse_graph, to_dot
from .lattice import build_poset, check_condition_8
from .partition import CyclePartition, enumerate_partitions, has_unique_partition, veblen_partition
from .walks import Circuit, Cycle, Walk

__version__ = "0.1.0"
