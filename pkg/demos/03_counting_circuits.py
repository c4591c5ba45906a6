"""Counting Eulerian circuits with arborescences.

The number of Eulerian circuits equals the number of spanning
arborescences at any root times the product of (outdeg(v) - 1)!.  The
arborescence count is a determinant, evaluated exactly with fraction-free
elimination.  Contracting an edge u -> v matches the arborescences at u
that use it.
"""

from eulercactus import best_count, count_arborescences, enumerate_eulerian_circuits, gen_random_eulerian
from eulercactus.arborescence import check_contraction_correspondence, laplacian

g = gen_random_eulerian(seed=3, n=5, k=4, max_len=4)
print("graph:", g.n, "vertices,", g.m, "edges")
for row in laplacian(g):
    print("  ", row)
tau = count_arborescences(g, 0).count
print("arborescences at 0:", tau)
print("B.E.S.T. count:", best_count(g))
print("enumerated circuits:", len(enumerate_eulerian_circuits(g)))

for e in range(g.m):
    chk = check_contraction_correspondence(g, e)
    print(f"  contract edge {e} {g.edges[e]}: {chk.with_edge} arborescences use it, {chk.contracted} after contraction")
