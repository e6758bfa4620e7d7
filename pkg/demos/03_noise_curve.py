"""
How much disambiguation error can synset indexing absorb?
=========================================================

Corrupt a growing share of the ambiguous document tokens and watch
success at rank 1 fall. Each point averages ten seeds; the spread shows
how much a single run can move.
"""

from dataclasses import replace

import numpy as np

from synsetir import fixture
from synsetir.evaluation import DocMode, ExperimentConfig, evaluate

collection, lexicon, stops = fixture.load()
base = ExperimentConfig(space="synset", doc_mode=DocMode.NOISY, noise_seeds=fixture.NOISE_SEEDS)
word = evaluate(collection, lexicon, stops, ExperimentConfig(space="word")).success_at_1

for rate in fixture.NOISE_RATES:
    report = evaluate(collection, lexicon, stops, replace(base, noise_rate=rate))
    per_seed = np.array([r.success_at_1 for r in report.seed_reports])
    altered = np.mean([s.altered for s in report.noise])
    print(f"rate {rate:4.2f}  mean {per_seed.mean():5.1f}  min {per_seed.min():5.1f}  "
          f"max {per_seed.max():5.1f}  tokens altered {altered:6.0f}")

print(f"word indexing baseline: {word:.1f}")
