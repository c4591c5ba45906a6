"""Evaluating every characterisation side by side.

``analyze`` computes each condition on its own, so agreement across the
report is an empirical check of the equivalences.  ``batch_verify`` runs
that over generated families.
"""

import json

from eulercactus import analyze, batch_verify, family_corpus
from eulercactus.fixtures import star3

rep = analyze(star3())
print(json.dumps(rep.to_json(), indent=2, sort_keys=True))

corpus = family_corpus("random_eulerian", 100) + family_corpus("christmas", 30) + family_corpus("two_in_two_out", 30)
summary = batch_verify(corpus, jobs=2)
print("\n".join(summary.lines()))
