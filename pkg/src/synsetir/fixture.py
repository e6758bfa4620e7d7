"""The frozen synthetic collection used by the acceptance suite and demos."""

from functools import lru_cache

from synsetir.corpus import translate_stoplist
from synsetir.synthetic import STOP_WORDS, GeneratorOptions, SynonymyParams, generate_synthetic_collection

N_DOCS = 100
DOC_LEN = 400
SEED = 7
SYNONYMY = SynonymyParams(synset_count=2500, senses_per_synset=10, polysemy=20.0, query_synonym_swap_rate=0.5)
# Heavy polysemy, with one frequent background sense per ambiguous lemma, so
# that expanding a query to every sense costs about what synonym matching gains.
OPTIONS = GeneratorOptions(
    query_len=12,
    topic_synsets=80,
    polysemy_zipf=0.3,
    lemma_bias=1.0,
    swap_bias=1.0,
    polysemous_background=True,
)
NOISE_RATES = (0.0, 0.05, 0.10, 0.20, 0.30, 0.60)
NOISE_SEEDS = tuple(range(10))


@lru_cache(maxsize=1)
def load():
    """Return ``(collection, lexicon, stop_sets)`` for the frozen fixture."""
    collection, lexicon = generate_synthetic_collection(N_DOCS, DOC_LEN, SYNONYMY, SEED, OPTIONS)
    return collection, lexicon, translate_stoplist(STOP_WORDS, lexicon)
