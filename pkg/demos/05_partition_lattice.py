"""The poset of Eulerian edge partitions.

Partitions of the edge set into connected Eulerian pieces, ordered by
refinement, always have the single-piece partition on top.  The bottom
elements are the cycle partitions, so the poset is a lattice exactly when
that bottom is unique.
"""

from eulercactus import build_poset, check_condition_8
from eulercactus.fixtures import d4, fig8

for name, g in (("figure-eight", fig8()), ("doubled digon", d4())):
    poset = build_poset(g)
    print(f"{name}: {len(poset)} elements")
    for i, e in enumerate(poset.elements):
        print(f"  [{i}] {e.to_json()}")
    print("  covers:", poset.covers())
    res = check_condition_8(g)
    print(f"  lattice={res.is_lattice}, minimal elements={res.minimal_count}, join-semilattice={res.is_join_semilattice}")
