import sys
from pathlib import Path

import pytest

from synsetir.corpus import parse_corpus, parse_lexicon, read_stopwords, translate_stoplist

DATA = Path(__file__).parent / "data"


@pytest.fixture
def data_dir():
    return DATA


@pytest.fixture
def tiny_corpus_path():
    return DATA / "tiny_corpus.tsv"


@pytest.fixture
def tiny_lexicon_path():
    return DATA / "tiny_lexicon.tsv"


@pytest.fixture
def stopwords_path():
    return DATA / "stopwords.txt"


@pytest.fixture
def tiny(tiny_corpus_path, tiny_lexicon_path, stopwords_path):
    collection = parse_corpus(tiny_corpus_path)
    lexicon = parse_lexicon(tiny_lexicon_path)
    stops = translate_stoplist(read_stopwords(stopwords_path), lexicon)
    return collection, lexicon, stops


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text, encoding="utf-8")
    return p


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
