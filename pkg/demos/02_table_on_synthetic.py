"""
The eleven experiments on the synthetic fixture
===============================================

Runs every configuration of the published results table on the frozen
100-document synthetic collection and prints the reference numbers next
to it. Absolute values differ (different data); the ordering is what the
fixture is built to reproduce.
"""

import time

from synsetir import fixture
from synsetir.evaluation import TABLE1_REFERENCE, evaluate, table1_configs

collection, lexicon, stops = fixture.load()
print(f"{len(collection.documents)} documents, {len(collection.queries)} queries")

###############################################################################
# Noisy rows average over ten seeds.

reference = dict(TABLE1_REFERENCE)
start = time.perf_counter()
print(f"{'experiment':34s} {'synthetic':>9s} {'reference':>9s}")
for cfg in table1_configs(seeds=fixture.NOISE_SEEDS):
    report = evaluate(collection, lexicon, stops, cfg)
    print(f"{cfg.name:34s} {report.success_at_1:9.1f} {reference[cfg.name]:9.1f}")
print(f"({time.perf_counter() - start:.0f}s)")
