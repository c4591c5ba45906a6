"""Multigraphs and their orientations.

For an undirected Eulerian multigraph the same story holds with undirected
cycles.  An Eulerian orientation is a cactus exactly when the multigraph is.
"""

from eulercactus import Multigraph, analyze, s_decompose, undirected_cycles
from eulercactus.graph import is_eulerian, orientations

bowtie = Multigraph(5, ((0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)))
theta = Multigraph(2, ((0, 1),) * 4)

for name, x in (("bow-tie", bowtie), ("four parallel edges", theta)):
    print(f"{name}: cycles {[sorted(c) for c in undirected_cycles(x)]}")
    print("  conditions:", analyze(x).conditions)
    eul = [o.to_digraph() for o in orientations(x) if is_eulerian(o.to_digraph())]
    in_s = {bool(s_decompose(d)) for d in eul}
    print(f"  {len(eul)} Eulerian orientations, cactus membership among them: {in_s}")
