"""Interlacing pairs in De Bruijn digraphs.

An Eulerian circuit with a visit pattern a, b, a, b (nothing else equal to
a or b in between) can be rerouted into a different circuit.  The binary De
Bruijn digraphs have many circuits, so each circuit carries such a pair;
here the pair is made of two distinct bit strings.
"""

from eulercactus import de_bruijn_interlace, gen_de_bruijn
from eulercactus.euler import de_bruijn_sequence, enumerate_eulerian_circuits

for n in (2, 3, 4):
    rep = de_bruijn_interlace(n)
    a, b = rep.pair_strings
    print(f"n={n}: {rep.circuit_count} circuits; sequence {rep.sequence}; interlacing {a} / {b}")

g = gen_de_bruijn(2)
print("all circuits of the order-2 digraph:")
for z in enumerate_eulerian_circuits(g):
    print("  ", list(z.edges), de_bruijn_sequence(g, z))
