"""Term projection and inverted indexes over word, sense and synset spaces."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from synsetir.corpus import Document, Lexicon, StopSets, Token

TermVector = Counter  # term -> raw frequency


class IndexSpace(enum.Enum):
    WORD = "word"
    SENSE = "sense"
    SYNSET = "synset"

    @classmethod
    def parse(cls, value: "str | IndexSpace") -> "IndexSpace":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown index space {value!r} (expected word, sense or synset)") from None


def _word_term(tok: Token, stops: StopSets) -> str | None:
    term = tok.surface.lower()
    return None if term in stops.stop_words else term


def project_token(tok: Token, space: IndexSpace, stops: StopSets = StopSets()) -> str | None:
    """Return the index term for ``tok`` in ``space``, or None if it is a stop term.

    Tokens lacking a sense (or synset) annotation fall back to their lowercased
    word form in the SENSE and SYNSET spaces.
    """
    if space is IndexSpace.SENSE and tok.sense_key is not None:
        return None if tok.sense_key in stops.stop_senses else tok.sense_key
    if space is IndexSpace.SYNSET and tok.synset_id is not None:
        return None if tok.synset_id in stops.stop_synsets else tok.synset_id
    return _word_term(tok, stops)


def term_vector(tokens: Iterable[Token], space: IndexSpace, stops: StopSets = StopSets()) -> TermVector:
    vec = Counter()
    for tok in tokens:
        term = project_token(tok, space, stops)
        if term is not None:
            vec[term] += 1
    return vec


def expand_all_senses(
    tokens: Iterable[Token], lexicon: Lexicon, space: IndexSpace, stops: StopSets = StopSets()
) -> TermVector:
    """Term vector with every lexicon candidate of each token counted once.

    This ignores the annotated sense: it is the no-disambiguation baseline.
    Tokens whose (lemma, pos) is not in the lexicon contribute their word form.
    """
    if space is IndexSpace.WORD:
        raise ValueError("all-senses expansion needs the sense or synset space")
    vec = Counter()
    for tok in tokens:
        cands = lexicon.candidates(tok.lemma, tok.pos)
        if not cands:
            term = _word_term(tok, stops)
            if term is not None:
                vec[term] += 1
            continue
        for c in cands:
            if space is IndexSpace.SENSE:
                if c.sense_key not in stops.stop_senses:
                    vec[c.sense_key] += 1
            elif c.synset_id not in stops.stop_synsets:
                vec[c.synset_id] += 1
    return vec


@dataclass
class InvertedIndex:
    space: IndexSpace
    postings: dict[str, list[tuple[str, int]]]
    doc_vectors: dict[str, TermVector]
    doc_ids: list[str]
    df: dict[str, int] = field(init=False)
    max_tf: dict[str, int] = field(init=False)
    _weight_cache: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        self.df = {t: len(p) for t, p in self.postings.items()}
        self.max_tf = {d: max(v.values(), default=0) for d, v in self.doc_vectors.items()}

    @property
    def doc_count(self) -> int:
        return len(self.doc_ids)

    N = doc_count

    @property
    def vocabulary(self) -> set[str]:
        return set(self.postings)

    @classmethod
    def from_vectors(cls, vectors: Mapping[str, Mapping[str, int]], space: IndexSpace) -> "InvertedIndex":
        """Build an index from precomputed per-document term vectors."""
        if not vectors:
            raise ValueError("empty collection")
        doc_ids = sorted(vectors)
        postings: dict[str, list[tuple[str, int]]] = {}
        doc_vectors = {}
        for d in doc_ids:
            vec = Counter({t: n for t, n in vectors[d].items() if n > 0})
            doc_vectors[d] = vec
            for term, tf in vec.items():
                postings.setdefault(term, []).append((d, tf))
        postings = {t: postings[t] for t in sorted(postings)}
        return cls(space, postings, doc_vectors, doc_ids)


def build_index(docs: Iterable[Document], space: IndexSpace, stops: StopSets = StopSets()) -> InvertedIndex:
    vectors = {}
    for d in docs:
        if d.id in vectors:
            raise ValueError(f"duplicate document id {d.id!r}")
        vectors[d.id] = term_vector(d.tokens, space, stops)
    return InvertedIndex.from_vectors(vectors, space)


def build_all_senses_index(
    docs: Iterable[Document], lexicon: Lexicon, space: IndexSpace, stops: StopSets = StopSets()
) -> InvertedIndex:
    vectors = {}
    for d in docs:
        if d.id in vectors:
            raise ValueError(f"duplicate document id {d.id!r}")
        vectors[d.id] = expand_all_senses(d.tokens, lexicon, space, stops)
    return InvertedIndex.from_vectors(vectors, space)


# Index files:
#   #SPACE<TAB>synset
#   #N<TAB>3
#   #DOCS<TAB>d1<TAB>d2<TAB>d3
#   term<TAB>df<TAB>doc:tf,doc:tf,...     (terms sorted, postings by doc id)


def format_index(idx: InvertedIndex) -> str:
    lines = [f"#SPACE\t{idx.space.value}", f"#N\t{idx.doc_count}", "\t".join(["#DOCS", *idx.doc_ids])]
    for d in idx.doc_ids:
        if "," in d or ":" in d:
            raise ValueError(f"document id {d!r} cannot be written to an index file")
    for term in sorted(idx.postings):
        plist = idx.postings[term]
        lines.append(f"{term}\t{len(plist)}\t" + ",".join(f"{d}:{tf}" for d, tf in plist))
    return "\n".join(lines) + "\n"


def write_index(idx: InvertedIndex, path) -> None:
    from synsetir.io import atomic_write_text

    atomic_write_text(path, format_index(idx))


def read_index(path) -> InvertedIndex:
    space = n = None
    doc_ids = None
    vectors: dict[str, Counter] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if parts[0] == "#SPACE":
                space = IndexSpace.parse(parts[1])
            elif parts[0] == "#N":
                n = int(parts[1])
            elif parts[0] == "#DOCS":
                doc_ids = parts[1:]
                vectors = {d: Counter() for d in doc_ids}
            elif line.startswith("#"):
                continue
            else:
                if doc_ids is None or len(parts) != 3:
                    raise ValueError(f"{path}:{lineno}: malformed index line")
                term, df, plist = parts
                entries = plist.split(",")
                if int(df) != len(entries):
                    raise ValueError(f"{path}:{lineno}: df {df} does not match {len(entries)} postings")
                for entry in entries:
                    d, _, tf = entry.rpartition(":")
                    if d not in vectors:
                        raise ValueError(f"{path}:{lineno}: unknown document {d!r}")
                    vectors[d][term] = int(tf)
    if space is None or doc_ids is None or n != len(doc_ids):
        raise ValueError(f"{path}: missing or inconsistent index header")
    return InvertedIndex.from_vectors(vectors, space)
