import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from synsetir.corpus import Document, StopSets, Token
from synsetir.indexing import (
    IndexSpace,
    build_all_senses_index,
    build_index,
    expand_all_senses,
    format_index,
    project_token,
    read_index,
    term_vector,
    write_index,
)

DEBATE = Token("debate", "debate", "n", "debate%1:10:01::", "n04616654")
THE = Token("The", "the", "o")


@pytest.mark.parametrize(
    "tok, space, expected",
    [
        (DEBATE, IndexSpace.WORD, "debate"),
        (DEBATE, IndexSpace.SENSE, "debate%1:10:01::"),
        (DEBATE, IndexSpace.SYNSET, "n04616654"),
        (Token("Cervantes", "Cervantes", "o"), IndexSpace.SYNSET, "cervantes"),
        (Token("Cervantes", "Cervantes", "o"), IndexSpace.SENSE, "cervantes"),
        (THE, IndexSpace.WORD, None),
    ],
)
def test_project_token(tok, space, expected):
    stops = StopSets(stop_words=frozenset({"the"}))
    assert project_token(tok, space, stops) == expected


def test_stop_synset_removed():
    stops = StopSets(stop_synsets=frozenset({"n04616654"}))
    assert project_token(DEBATE, IndexSpace.SYNSET, stops) is None
    assert project_token(DEBATE, IndexSpace.SENSE, stops) == "debate%1:10:01::"


def test_golden_word_index(tiny, data_dir):
    c, _, stops = tiny
    idx = build_index(c.documents, IndexSpace.WORD, stops)
    assert format_index(idx) == (data_dir / "tiny_word.index").read_text()
    assert idx.postings["spring"] == [("d1", 1), ("d3", 1)]
    assert idx.df["spring"] == 2


def test_synset_index_merges_synonyms(tiny):
    c, _, stops = tiny
    idx = build_index(c.documents, IndexSpace.SYNSET, stops)
    assert idx.postings["n04616654"] == [("d1", 1), ("d2", 1)]  # debate, argument
    assert idx.postings["n09464935"] == [("d1", 1), ("d3", 1)]  # spring, fountain
    assert "v02604760" not in idx.postings  # be: stop synset


def test_index_file_round_trip(tiny, tmp_path):
    c, _, stops = tiny
    for space in IndexSpace:
        idx = build_index(c.documents, space, stops)
        write_index(idx, tmp_path / "x.index")
        back = read_index(tmp_path / "x.index")
        assert back.space is space
        assert back.postings == idx.postings and back.doc_ids == idx.doc_ids


def test_read_index_rejects_bad_df(tmp_path):
    p = tmp_path / "bad.index"
    p.write_text("#SPACE\tword\n#N\t1\n#DOCS\td1\nx\t2\td1:1\n")
    with pytest.raises(ValueError, match="df"):
        read_index(p)


def test_expand_all_senses(tiny):
    _, lex, stops = tiny
    vec = expand_all_senses([Token("spring", "spring", "n", "spring%1:28:00::", "n15210486")], lex, IndexSpace.SYNSET, stops)
    assert set(vec) == {"n15210486", "n03823627", "n09464935"}
    with pytest.raises(ValueError):
        expand_all_senses([DEBATE], lex, IndexSpace.WORD)


def test_all_senses_index_of_monosemous_equals_tagged(tiny):
    _, lex, stops = tiny
    docs = [Document("d1", (Token("jury", "jury", "n", "jury%1:14:00::", "n08374049"), Token("x", "x")))]
    a = build_all_senses_index(docs, lex, IndexSpace.SYNSET, stops)
    b = build_index(docs, IndexSpace.SYNSET, stops)
    assert a.postings == b.postings


def test_document_order_does_not_matter(tiny):
    c, _, stops = tiny
    docs = list(c.documents)
    random.Random(3).shuffle(docs)
    for space in IndexSpace:
        assert format_index(build_index(docs, space, stops)) == format_index(build_index(c.documents, space, stops))


# each sense belongs to exactly one synset; distinct senses may share one
_sense_tok = st.builds(
    lambda lemma, n: Token(lemma, lemma, "n", f"{lemma}%1:10:{n:02d}::", f"n{(ord(lemma) + n) % 3:08d}"),
    st.sampled_from(["a", "b", "c", "d"]), st.integers(0, 3),
)
_plain_tok = st.builds(lambda w: Token(w, w, "o"), st.sampled_from(["x", "y", "the"]))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.lists(st.one_of(_sense_tok, _plain_tok), min_size=1, max_size=12), min_size=1, max_size=6))
def test_synset_vocabulary_not_larger_than_sense(doc_tokens):
    docs = [Document(f"d{i}", tuple(t)) for i, t in enumerate(doc_tokens)]
    stops = StopSets(stop_words=frozenset({"the"}))
    sense = build_index(docs, IndexSpace.SENSE, stops)
    synset = build_index(docs, IndexSpace.SYNSET, stops)
    assert len(synset.vocabulary) <= len(sense.vocabulary)
    for d in docs:
        assert sum(term_vector(d.tokens, IndexSpace.SYNSET, stops).values()) == sum(
            term_vector(d.tokens, IndexSpace.SENSE, stops).values()
        )
