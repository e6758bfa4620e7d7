from dataclasses import replace

import pytest

from synsetir.corpus import translate_stoplist, validate_collection
from synsetir.evaluation import ExperimentConfig, evaluate
from synsetir.synthetic import (
    STOP_WORDS,
    GeneratorOptions,
    InfeasibleParameters,
    SynonymyParams,
    generate_synthetic_collection,
)

OPTS = GeneratorOptions(query_len=12, topic_synsets=20)


def _gen(swap, seed=0, n_docs=20, doc_len=120, **kw):
    params = SynonymyParams(synset_count=400, senses_per_synset=4, polysemy=2.0, query_synonym_swap_rate=swap)
    return generate_synthetic_collection(n_docs, doc_len, params, seed, replace(OPTS, **kw))


def test_deterministic():
    assert _gen(0.5, seed=4) == _gen(0.5, seed=4)
    assert _gen(0.5, seed=4)[0] != _gen(0.5, seed=5)[0]


def test_output_is_valid_and_sized():
    c, lex = _gen(0.5)
    assert len(c.documents) == 20 and len(c.queries) == 20
    assert all(len(d.tokens) == 120 for d in c.documents)
    assert all(len(q.tokens) == 12 for q in c.queries)
    report = validate_collection(c, lex)
    assert report.ok, report.issues[:3]
    assert report.ambiguous_tokens > 0


def test_query_windows_and_swap_effect():
    c, lex = _gen(0.0)
    stops = translate_stoplist(STOP_WORDS, lex)
    for q in c.queries:
        doc = c.get_document(q.relevant_doc_id).tokens
        n = len(q.tokens)
        assert any(doc[i:i + n] == q.tokens for i in range(len(doc) - n + 1))
    swapped, lex1 = _gen(1.0)
    stops1 = translate_stoplist(STOP_WORDS, lex1)
    word = evaluate(c, lex, stops, ExperimentConfig(space="word")).success_at_1
    word_swapped = evaluate(swapped, lex1, stops1, ExperimentConfig(space="word")).success_at_1
    synset_swapped = evaluate(swapped, lex1, stops1, ExperimentConfig(space="synset")).success_at_1
    assert word_swapped < word
    assert word_swapped < synset_swapped


def test_full_swap_uses_unseen_synonyms():
    c, _ = _gen(1.0)
    for q in c.queries:
        doc = c.get_document(q.relevant_doc_id)
        doc_lemmas = {t.lemma for t in doc.tokens if t.tagged}
        doc_synsets = {t.synset_id for t in doc.tokens if t.tagged}
        for t in q.tokens:
            if t.tagged:
                assert t.lemma not in doc_lemmas
                assert t.synset_id in doc_synsets


def test_swap_count_rounds_half_up():
    c, _ = _gen(0.5)
    for q in c.queries:
        doc = c.get_document(q.relevant_doc_id)
        doc_lemmas = {t.lemma for t in doc.tokens if t.tagged}
        tagged = [t for t in q.tokens if t.tagged]
        swapped = sum(t.lemma not in doc_lemmas for t in tagged)
        assert swapped == int(len(tagged) * 0.5 + 0.5)


@pytest.mark.parametrize(
    "params, n_docs",
    [
        (SynonymyParams(synset_count=10, senses_per_synset=1, polysemy=1.0, query_synonym_swap_rate=0.5), 2),
        (SynonymyParams(synset_count=100, senses_per_synset=1, polysemy=50.0, query_synonym_swap_rate=0.0), 2),
        (SynonymyParams(synset_count=100, query_synonym_swap_rate=1.5), 2),
        (SynonymyParams(), 0),
    ],
)
def test_infeasible_parameters(params, n_docs):
    with pytest.raises(InfeasibleParameters):
        generate_synthetic_collection(n_docs, 50, params, 0, OPTS)
