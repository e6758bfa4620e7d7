import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synsetir.corpus import Collection, Document, Lexicon, Query, SenseCandidate, Token, format_corpus
from synsetir.noise import (
    NoiseError,
    NoiseScope,
    NoiseSpec,
    eligible_positions,
    inject_errors,
    inject_errors_with_stats,
    n_errors,
    unit_rng,
)


def _lexicon(n_lemmas=4, senses=3):
    entries = {}
    for i in range(n_lemmas):
        lemma = f"w{i}"
        entries[(lemma, "n")] = tuple(
            SenseCandidate(f"{lemma}%1:10:{k:02d}::", f"n{i * 10 + k:08d}") for k in range(1, senses + 1)
        )
    entries[("mono", "n")] = (SenseCandidate("mono%1:10:01::", "n00009999"),)
    return Lexicon(entries)


def _tok(lex, lemma, k=0):
    c = lex.candidates(lemma, "n")[k]
    return Token(lemma, lemma, "n", c.sense_key, c.synset_id)


def _collection(lex, n_docs=3, eligible=10):
    docs = []
    for d in range(n_docs):
        toks = [_tok(lex, f"w{i % 4}", i % 3) for i in range(eligible)]
        toks += [_tok(lex, "mono"), Token("the", "the", "o")]
        docs.append(Document(f"d{d}", tuple(toks)))
    queries = [Query("q0", (_tok(lex, "w1"), _tok(lex, "w2")), "d0")]
    return Collection(tuple(docs), tuple(queries))


@pytest.mark.parametrize(
    "rate, m, k", [(0.2, 10, 2), (0.05, 10, 1), (0.04, 10, 0), (0.15, 10, 2), (0.25, 2, 1), (1.0, 7, 7), (0.0, 9, 0)]
)
def test_n_errors_round_half_up(rate, m, k):
    assert n_errors(rate, m) == k


def test_exact_altered_count_per_document():
    lex = _lexicon()
    c = _collection(lex)
    noisy, stats = inject_errors_with_stats(c, lex, NoiseSpec(0.2, seed=5))
    for before, after in zip(c.documents, noisy.documents):
        changed = sum(a != b for a, b in zip(before.tokens, after.tokens))
        assert changed == 2
    assert stats.altered == 6 and stats.eligible == 30 and stats.tagged == 33
    assert noisy.queries == c.queries


def test_altered_tokens_get_a_different_valid_candidate():
    lex = _lexicon()
    c = _collection(lex)
    noisy = inject_errors(c, lex, NoiseSpec(1.0, seed=2))
    for before, after in zip(c.documents, noisy.documents):
        for a, b in zip(before.tokens, after.tokens):
            if not a.tagged or len(lex.candidates(a.lemma, a.pos)) < 2:
                assert a == b
                continue
            assert b.sense_key != a.sense_key
            assert b.lemma == a.lemma and b.surface == a.surface and b.pos == a.pos
            assert lex.synset_of(b.sense_key) == b.synset_id
            assert lex.entry_of(b.sense_key) == (a.lemma, a.pos)


def test_rate_zero_is_identity():
    lex = _lexicon()
    c = _collection(lex)
    noisy, stats = inject_errors_with_stats(c, lex, NoiseSpec(0.0, seed=9, scope=NoiseScope.BOTH))
    assert format_corpus(noisy) == format_corpus(c)
    assert stats.altered == 0


def test_deterministic_and_seed_sensitive():
    lex = _lexicon()
    c = _collection(lex, n_docs=6, eligible=20)
    a = inject_errors(c, lex, NoiseSpec(0.3, seed=11))
    b = inject_errors(c, lex, NoiseSpec(0.3, seed=11))
    other = inject_errors(c, lex, NoiseSpec(0.3, seed=12))
    assert a == b
    assert a != other


def test_units_are_independent_of_order():
    lex = _lexicon()
    c = _collection(lex, n_docs=4)
    rev = Collection(tuple(reversed(c.documents)), c.queries)
    a = inject_errors(c, lex, NoiseSpec(0.5, seed=1))
    b = inject_errors(rev, lex, NoiseSpec(0.5, seed=1))
    assert {d.id: d for d in a.documents} == {d.id: d for d in b.documents}


def test_scope_queries_only():
    lex = _lexicon()
    c = _collection(lex)
    noisy = inject_errors(c, lex, NoiseSpec(1.0, seed=0, scope=NoiseScope.QUERIES))
    assert noisy.documents == c.documents
    assert all(a != b for a, b in zip(c.queries[0].tokens, noisy.queries[0].tokens))


def test_inconsistent_tag_is_rejected():
    lex = _lexicon()
    bad = Token("w0", "w0", "n", "w0%1:10:01::", "n00000099")
    c = Collection((Document("d0", (bad, _tok(lex, "w1"))),), ())
    with pytest.raises(NoiseError, match="inconsistent"):
        inject_errors(c, lex, NoiseSpec(0.5))


def test_spec_validation():
    with pytest.raises(ValueError):
        NoiseSpec(1.5)
    with pytest.raises(ValueError):
        NoiseSpec(0.1, seed=-1)


def test_unit_rng_matches_documented_seeding():
    import hashlib

    digest = hashlib.sha256(b"doc:d7").digest()
    words = [int.from_bytes(digest[i:i + 4], "little") for i in range(0, 16, 4)]
    ref = np.random.Generator(np.random.PCG64(np.random.SeedSequence([42, *words])))
    assert unit_rng(42, "doc", "d7").integers(1 << 30, size=5).tolist() == ref.integers(1 << 30, size=5).tolist()


def test_metadata_line():
    lex = _lexicon()
    _, stats = inject_errors_with_stats(_collection(lex), lex, NoiseSpec(0.2, seed=5))
    assert stats.metadata_line() == "#NOISE rate=0.2 seed=5 altered=6 eligible=30 tagged=33 generator=pcg64-sha256"


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 40), st.floats(0, 1), st.integers(0, 2**32))
def test_exact_count_property(m, rate, seed):
    lex = _lexicon()
    toks = tuple(_tok(lex, f"w{i % 4}", i % 3) for i in range(m)) + (_tok(lex, "mono"),)
    c = Collection((Document("d", toks),), ())
    noisy = inject_errors(c, lex, NoiseSpec(rate, seed))
    changed = sum(a != b for a, b in zip(toks, noisy.documents[0].tokens))
    assert changed == n_errors(rate, m)
    assert len(eligible_positions(toks, lex)) == m
