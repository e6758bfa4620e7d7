from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synsetir.corpus import Collection, Document, Query, Token
from synsetir.evaluation import (
    TABLE1_REFERENCE,
    DocMode,
    ExperimentConfig,
    QueryMode,
    evaluate,
    format_curve_csv,
    format_seed_csv,
    format_summary_csv,
    run_experiment,
    success_at_k,
    table1_configs,
    write_reports,
)
from synsetir.indexing import IndexSpace


def test_success_at_k_examples():
    ranks = {f"q{i}": (1 if i < 31 else 2) for i in range(50)}
    assert success_at_k(ranks, 1) == pytest.approx(62.0)
    assert success_at_k(ranks, 2) == 100.0
    assert success_at_k({"q1": None, "q2": 1}, 10) == 50.0
    with pytest.raises(ValueError):
        success_at_k(ranks, 0)


@settings(max_examples=100, deadline=None)
@given(st.dictionaries(st.text(min_size=1, max_size=3), st.one_of(st.none(), st.integers(1, 30)), min_size=1))
def test_success_at_k_monotone(ranks):
    curve = [success_at_k(ranks, k) for k in range(1, 31)]
    assert all(a <= b for a, b in zip(curve, curve[1:]))
    assert all(0.0 <= v <= 100.0 for v in curve)


def _ranked_collection():
    # q1 relevant doc first, q2 second, q3 third under word indexing
    docs = (
        Document("d1", (Token("x", "x"), Token("x", "x"), Token("y", "y"))),
        Document("d2", (Token("y", "y"), Token("y", "y"), Token("z", "z"))),
        Document("d3", (Token("z", "z"),)),
    )
    queries = (
        Query("q1", (Token("x", "x"),), "d1"),
        Query("q2", (Token("x", "x"), Token("y", "y")), "d2"),
        Query("q3", (Token("y", "y"), Token("z", "z")), "d3"),
    )
    return Collection(docs, queries)


def test_curve_and_csv(tiny):
    _, lex, stops = tiny
    cfg = ExperimentConfig(name="words", space="word", scheme="nnn", top_k=4)
    report = evaluate(_ranked_collection(), lex, stops, cfg)
    assert report.per_query_ranks == {"q1": 1, "q2": 2, "q3": 3}
    assert format_curve_csv(report) == "k,percent\n1,33.3\n2,66.7\n3,100.0\n4,100.0\n"


def test_noisy_rate_zero_equals_tagged(tiny):
    c, lex, stops = tiny
    tagged = evaluate(c, lex, stops, ExperimentConfig(space="synset"))
    noisy = evaluate(c, lex, stops, ExperimentConfig(space="synset", doc_mode="noisy", noise_rate=0.0, noise_seeds=(0, 1, 2)))
    assert noisy.success_at_k == tagged.success_at_k
    assert len(noisy.seed_reports) == 3 and all(s.altered == 0 for s in noisy.noise)


def test_all_senses_on_monosemous_collection_equals_tagged(tiny):
    _, lex, stops = tiny
    jury = Token("jury", "jury", "n", "jury%1:14:00::", "n08374049")
    water = Token("water", "water", "n", "water%1:27:00::", "n14845743")
    c = Collection(
        (Document("d1", (jury, jury, water)), Document("d2", (water,))),
        (Query("q1", (water,), "d2"), Query("q2", (jury,), "d1")),
    )
    base = ExperimentConfig(space="synset")
    tagged = evaluate(c, lex, stops, base)
    assert evaluate(c, lex, stops, replace(base, doc_mode=DocMode.ALL_SENSES)).per_query_ranks == tagged.per_query_ranks
    assert evaluate(c, lex, stops, replace(base, query_mode=QueryMode.ALL_SENSES)).per_query_ranks == tagged.per_query_ranks


def test_empty_query_counts_as_failure(tiny):
    _, lex, stops = tiny
    c = Collection((Document("d1", (Token("x", "x"),)),), (Query("q1", (Token("the", "the"),), "d1"),))
    report = evaluate(c, lex, stops, ExperimentConfig(space="word"))
    assert report.failures == ["q1"] and report.success_at_1 == 0.0
    assert report.per_query_ranks == {"q1": None}


def test_tiny_fixture_word_vs_synset(tiny):
    c, lex, stops = tiny
    word = evaluate(c, lex, stops, ExperimentConfig(space="word"))
    synset = evaluate(c, lex, stops, ExperimentConfig(space="synset"))
    assert word.per_query_ranks["q1"] == 2 and synset.per_query_ranks["q1"] == 1


def test_word_space_rejects_noise():
    with pytest.raises(ValueError):
        ExperimentConfig(space="word", doc_mode="noisy", noise_rate=0.1)
    with pytest.raises(ValueError):
        ExperimentConfig(space="synset", doc_mode="noisy", noise_rate=1.5)


def test_table1_configs_shape():
    configs = table1_configs(seeds=range(10))
    assert [c.name for c in configs] == [name for name, _ in TABLE1_REFERENCE]
    assert [c.noise_rate for c in configs if c.doc_mode is DocMode.NOISY] == [0.05, 0.10, 0.20, 0.30, 0.60]
    assert all(len(c.noise_seeds) == 10 for c in configs if c.doc_mode is DocMode.NOISY)
    assert configs[9].query_mode is QueryMode.ALL_SENSES and configs[9].space is IndexSpace.SYNSET
    assert configs[10].space is IndexSpace.SENSE


def test_reference_values():
    ref = dict(TABLE1_REFERENCE)
    assert (ref["synsets"], ref["word_senses"], ref["words"]) == (62.0, 53.2, 48.0)
    assert ref["synsets_undisambiguated_queries"] == 48.5 and ref["senses_undisambiguated_queries"] == 40.9


def test_run_experiment_and_reports(tiny_corpus_path, tiny_lexicon_path, stopwords_path, tmp_path):
    configs = table1_configs(tiny_corpus_path, tiny_lexicon_path, stopwords_path, seeds=(0, 1))
    reports = [run_experiment(c) for c in configs]
    write_reports(reports, tmp_path)
    summary = (tmp_path / "summary.csv").read_text().splitlines()
    assert summary[0] == "experiment,success_at_1" and len(summary) == 12
    seeds = (tmp_path / "synsets_noise_10.seeds.csv").read_text().splitlines()
    assert seeds[0] == "seed,success_at_1,altered,eligible" and len(seeds) == 3
    assert format_summary_csv(reports[:1]) == f"experiment,success_at_1\nsynsets,{reports[0].success_at_1:.1f}\n"


def test_single_seed_report_keeps_ranks(tiny):
    c, lex, stops = tiny
    cfg = ExperimentConfig(space="synset", doc_mode="noisy", noise_rate=0.5, noise_seeds=(3,))
    report = evaluate(c, lex, stops, cfg)
    assert report.seed_reports == [] and len(report.noise) == 1 and report.per_query_ranks
    assert format_seed_csv(report).splitlines()[1].startswith("3,")
