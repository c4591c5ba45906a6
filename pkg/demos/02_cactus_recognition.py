"""Recognising bridgeless cacti.

A bridgeless cactus is built by gluing cycles one at a time at a single
vertex.  The recogniser checks that every block is a cycle and returns a
gluing order; otherwise it names a block that is not a cycle.
"""

from eulercactus import gen_cactus, intersection_graph, is_christmas_cactus, s_decompose
from eulercactus.cactus import cycle_path
from eulercactus.fixtures import chain3, d4, star3

g = gen_cactus(seed=7, t=4, max_len=3)
dec = s_decompose(g)
print("random cactus edges:", list(g.edges))
print("gluing order:")
print("  start with", dec.cycles[0])
for c, w in zip(dec.cycles[1:], dec.attach_vertices):
    print(f"  attach {c} at vertex {w}")

far = max(range(1, g.n), key=lambda v: len(cycle_path(g, 0, v).cycles))
path = cycle_path(g, 0, far)
print(f"cycles from 0 to {far}:", [str(c) for c in path.cycles], "junctions", path.junctions)

res = s_decompose(d4())
print("doubled digon:", res.reason, sorted(res.block.edges))

# Christmas cacti: no vertex on three blocks
for name, h in (("chain of digons", chain3()), ("star of digons", star3())):
    ig = intersection_graph(h)
    print(f"{name}: christmas={is_christmas_cactus(h)}, intersection graph tree={ig.is_tree}")
