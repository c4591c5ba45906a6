"""Partitioning an Eulerian digraph into cycles.

A greedy walk that stops at the first repeated vertex always peels off a
cycle, so every Eulerian digraph has at least one cycle partition.  Some
have exactly one; the figure-eight does, the doubled digon does not.
"""

from eulercactus import enumerate_partitions, has_unique_partition, veblen_partition
from eulercactus.fixtures import d4, fig8

for name, g in (("figure-eight", fig8()), ("doubled digon", d4())):
    print(f"{name}: {g.n} vertices, edges {list(g.edges)}")
    print("  greedy partition:", veblen_partition(g).to_json())
    parts = enumerate_partitions(g)
    print(f"  all partitions ({len(parts)}):")
    for p in parts:
        print("   ", p.to_json())
    res = has_unique_partition(g)
    print("  unique:", res.unique)
    print()
