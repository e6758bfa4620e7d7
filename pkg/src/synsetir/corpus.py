"""Sense-tagged collections, lexicons and stop sets.

Corpus files are a vertical-token TSV::

    #DOC d1
    Debate<TAB>debate<TAB>n<TAB>debate%1:10:01::<TAB>n04616654
    Cervantes<TAB>Cervantes<TAB>o<TAB>-<TAB>-

    #QUERY q1 d1
    argument<TAB>argument<TAB>n<TAB>argument%1:10:02::<TAB>n04616654

Any other line starting with ``#`` is a comment; blank lines are ignored.
Lexicon files hold one candidate per line (``lemma pos sense_key synset_id``)
in sense-number order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator

POS_CODES = ("n", "v", "a", "r", "o")
OPEN_CLASS = frozenset("nvar")
ABSENT = "-"

SENSE_KEY_RE = re.compile(r"^[^%\s]+%\d:\d\d:\d\d::$")
SYNSET_ID_RE = re.compile(r"^[nvar]\d+$")


class CorpusFormatError(ValueError):
    """A corpus, lexicon or stop-word file could not be parsed."""

    def __init__(self, message: str, path=None, line: int | None = None, column: int | None = None):
        self.path = str(path) if path is not None else None
        self.line = line
        self.column = column
        where = ""
        if self.path:
            where = self.path
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}" if where else message)
        self.message = message


@dataclass(frozen=True)
class Token:
    surface: str
    lemma: str
    pos: str = "o"
    sense_key: str | None = None
    synset_id: str | None = None

    def __post_init__(self):
        if not self.surface:
            raise ValueError("empty surface")
        if self.pos not in POS_CODES:
            raise ValueError(f"unknown part of speech {self.pos!r}")
        if self.sense_key is not None:
            if self.pos not in OPEN_CLASS:
                raise ValueError(f"sense key {self.sense_key!r} on a token with pos {self.pos!r}")
            if self.synset_id is None:
                raise ValueError(f"sense key {self.sense_key!r} without synset id")
            if not SENSE_KEY_RE.match(self.sense_key):
                raise ValueError(f"malformed sense key {self.sense_key!r}")
        if self.synset_id is not None and not SYNSET_ID_RE.match(self.synset_id):
            raise ValueError(f"malformed synset id {self.synset_id!r}")

    @property
    def tagged(self) -> bool:
        return self.sense_key is not None

    def retag(self, sense_key: str, synset_id: str) -> "Token":
        return Token(self.surface, self.lemma, self.pos, sense_key, synset_id)


@dataclass(frozen=True)
class Document:
    id: str
    tokens: tuple[Token, ...]

    def __post_init__(self):
        if not self.id:
            raise ValueError("empty document id")
        object.__setattr__(self, "tokens", tuple(self.tokens))


@dataclass(frozen=True)
class Query:
    id: str
    tokens: tuple[Token, ...]
    relevant_doc_id: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("empty query id")
        object.__setattr__(self, "tokens", tuple(self.tokens))


@dataclass(frozen=True)
class Collection:
    documents: tuple[Document, ...]
    queries: tuple[Query, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "documents", tuple(self.documents))
        object.__setattr__(self, "queries", tuple(self.queries))

    def document_ids(self) -> list[str]:
        return [d.id for d in self.documents]

    def get_document(self, doc_id: str) -> Document:
        for d in self.documents:
            if d.id == doc_id:
                return d
        raise KeyError(doc_id)


@dataclass(frozen=True)
class SenseCandidate:
    sense_key: str
    synset_id: str


@dataclass(frozen=True)
class Lexicon:
    """Candidate senses for each (lemma, pos), in sense-number order."""

    entries: dict[tuple[str, str], tuple[SenseCandidate, ...]]
    _by_key: dict[str, tuple[tuple[str, str], SenseCandidate]] = field(
        default_factory=dict, repr=False, compare=False
    )

    def __post_init__(self):
        by_key = {}
        for entry, cands in self.entries.items():
            if not cands:
                raise ValueError(f"empty candidate list for {entry}")
            for c in cands:
                prev = by_key.get(c.sense_key)
                if prev is not None and (prev[0] != entry or prev[1] != c):
                    raise ValueError(f"sense key {c.sense_key!r} listed twice inconsistently")
                by_key[c.sense_key] = (entry, c)
        object.__setattr__(self, "_by_key", by_key)

    @classmethod
    def from_rows(cls, rows: Iterable[tuple[str, str, str, str]]) -> "Lexicon":
        entries: dict[tuple[str, str], list[SenseCandidate]] = {}
        for lemma, pos, key, synset in rows:
            cand = SenseCandidate(key, synset)
            bucket = entries.setdefault((lemma, pos), [])
            if cand not in bucket:
                bucket.append(cand)
        return cls({k: tuple(v) for k, v in entries.items()})

    def candidates(self, lemma: str, pos: str) -> tuple[SenseCandidate, ...]:
        return self.entries.get((lemma, pos), ())

    def synset_of(self, sense_key: str) -> str | None:
        hit = self._by_key.get(sense_key)
        return hit[1].synset_id if hit else None

    def entry_of(self, sense_key: str) -> tuple[str, str] | None:
        hit = self._by_key.get(sense_key)
        return hit[0] if hit else None

    def __len__(self):
        return len(self.entries)

    def __contains__(self, sense_key):
        return sense_key in self._by_key


@dataclass(frozen=True)
class StopSets:
    stop_words: frozenset[str] = frozenset()
    stop_senses: frozenset[str] = frozenset()
    stop_synsets: frozenset[str] = frozenset()


def _field(value: str) -> str | None:
    return None if value == ABSENT else value


def _iter_lines(path) -> Iterator[tuple[int, str]]:
    with open(path, encoding="utf-8", newline="\n") as fh:
        for lineno, line in enumerate(fh, 1):
            yield lineno, line.rstrip("\n").rstrip("\r")


def _parse_token(line: str, path, lineno: int) -> Token:
    parts = line.split("\t")
    if len(parts) != 5:
        raise CorpusFormatError(f"expected 5 tab-separated fields, got {len(parts)}", path, lineno, 1)
    columns = [1]
    for p in parts[:-1]:
        columns.append(columns[-1] + len(p) + 1)
    surface, lemma, pos, key, synset = parts
    if not surface or surface == ABSENT:
        raise CorpusFormatError("empty surface form", path, lineno, columns[0])
    if pos not in POS_CODES:
        raise CorpusFormatError(f"unknown part of speech {pos!r}", path, lineno, columns[2])
    key, synset = _field(key), _field(synset)
    if key is not None:
        if not SENSE_KEY_RE.match(key):
            raise CorpusFormatError(f"malformed sense key {key!r}", path, lineno, columns[3])
        if pos not in OPEN_CLASS:
            raise CorpusFormatError(f"sense key on closed-class token (pos {pos!r})", path, lineno, columns[2])
        if synset is None:
            raise CorpusFormatError("sense key present without synset id", path, lineno, columns[4])
    if synset is not None and not SYNSET_ID_RE.match(synset):
        raise CorpusFormatError(f"malformed synset id {synset!r}", path, lineno, columns[4])
    lemma = surface if lemma in ("", ABSENT) else lemma
    return Token(surface, lemma, pos, key, synset)


def parse_corpus(path) -> Collection:
    """Read a vertical-token corpus file into a :class:`Collection`."""
    docs: list[Document] = []
    queries: list[Query] = []
    seen_docs: set[str] = set()
    seen_queries: set[str] = set()
    current = None  # (kind, id, relevant, header line)
    tokens: list[Token] = []

    def close():
        if current is None:
            return
        kind, unit_id, relevant, header_line = current
        if not tokens:
            raise CorpusFormatError(f"empty {'document' if kind == 'DOC' else 'query'} {unit_id!r}", path, header_line)
        if kind == "DOC":
            docs.append(Document(unit_id, tuple(tokens)))
        else:
            queries.append(Query(unit_id, tuple(tokens), relevant))

    query_lines = {}
    for lineno, line in _iter_lines(path):
        if not line.strip():
            continue
        if line.startswith("#"):
            head = line.split()
            if head[0] == "#DOC":
                if len(head) != 2:
                    raise CorpusFormatError("expected '#DOC <id>'", path, lineno, 1)
                close()
                if head[1] in seen_docs:
                    raise CorpusFormatError(f"duplicate document id {head[1]!r}", path, lineno, 6)
                seen_docs.add(head[1])
                current, tokens = ("DOC", head[1], None, lineno), []
            elif head[0] == "#QUERY":
                if len(head) != 3:
                    raise CorpusFormatError("expected '#QUERY <id> <relevant_doc_id>'", path, lineno, 1)
                close()
                if head[1] in seen_queries:
                    raise CorpusFormatError(f"duplicate query id {head[1]!r}", path, lineno, 8)
                seen_queries.add(head[1])
                query_lines[head[1]] = lineno
                current, tokens = ("QUERY", head[1], head[2], lineno), []
            continue
        if current is None:
            raise CorpusFormatError("token line before any #DOC or #QUERY header", path, lineno, 1)
        tokens.append(_parse_token(line, path, lineno))
    close()

    if not docs:
        raise CorpusFormatError("no documents in corpus", path)
    for q in queries:
        if q.relevant_doc_id not in seen_docs:
            raise CorpusFormatError(
                f"query {q.id!r} references unknown document {q.relevant_doc_id!r}", path, query_lines[q.id]
            )
    return Collection(tuple(docs), tuple(queries))


def _token_line(tok: Token) -> str:
    return "\t".join(
        (tok.surface, tok.lemma, tok.pos, tok.sense_key or ABSENT, tok.synset_id or ABSENT)
    )


def format_corpus(collection: Collection) -> str:
    """Canonical text of a collection: documents first, then queries."""
    out = []
    for d in collection.documents:
        out.append(f"#DOC {d.id}")
        out.extend(_token_line(t) for t in d.tokens)
        out.append("")
    for q in collection.queries:
        out.append(f"#QUERY {q.id} {q.relevant_doc_id}")
        out.extend(_token_line(t) for t in q.tokens)
        out.append("")
    return "\n".join(out)


def write_corpus(collection: Collection, path) -> None:
    from synsetir.io import atomic_write_text

    atomic_write_text(path, format_corpus(collection))


def parse_lexicon(path) -> Lexicon:
    rows = []
    key_to = {}
    for lineno, line in _iter_lines(path):
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 4:
            raise CorpusFormatError(f"expected 4 tab-separated fields, got {len(parts)}", path, lineno, 1)
        lemma, pos, key, synset = parts
        col_pos = len(lemma) + 2
        col_key = col_pos + len(pos) + 1
        col_syn = col_key + len(key) + 1
        if not lemma:
            raise CorpusFormatError("empty lemma", path, lineno, 1)
        if pos not in OPEN_CLASS:
            raise CorpusFormatError(f"lexicon pos must be one of n,v,a,r (got {pos!r})", path, lineno, col_pos)
        if not SENSE_KEY_RE.match(key):
            raise CorpusFormatError(f"malformed sense key {key!r}", path, lineno, col_key)
        if not SYNSET_ID_RE.match(synset):
            raise CorpusFormatError(f"malformed synset id {synset!r}", path, lineno, col_syn)
        prev = key_to.get(key)
        if prev is not None:
            if prev[2] != synset:
                raise CorpusFormatError(
                    f"sense key {key!r} maps to both {prev[2]!r} and {synset!r}", path, lineno, col_syn
                )
            if prev[:2] != (lemma, pos):
                raise CorpusFormatError(
                    f"sense key {key!r} listed under both {prev[0]}/{prev[1]} and {lemma}/{pos}", path, lineno, 1
                )
        key_to[key] = (lemma, pos, synset)
        rows.append((lemma, pos, key, synset))
    return Lexicon.from_rows(rows)


def format_lexicon(lexicon: Lexicon) -> str:
    lines = []
    for (lemma, pos), cands in lexicon.entries.items():
        for c in cands:
            lines.append(f"{lemma}\t{pos}\t{c.sense_key}\t{c.synset_id}")
    return "\n".join(lines) + ("\n" if lines else "")


def write_lexicon(lexicon: Lexicon, path) -> None:
    from synsetir.io import atomic_write_text

    atomic_write_text(path, format_lexicon(lexicon))


def read_stopwords(path) -> frozenset[str]:
    words = set()
    for _, line in _iter_lines(path):
        w = line.strip()
        if w and not w.startswith("#"):
            words.add(w)
    return frozenset(words)


def translate_stoplist(stop_words: Iterable[str], lexicon: Lexicon) -> StopSets:
    """Map stop words to every sense and synset the lexicon lists for them, across all parts of speech."""
    words = frozenset(stop_words)
    senses, synsets = set(), set()
    for w in words:
        for pos in sorted(OPEN_CLASS):
            for c in lexicon.candidates(w, pos):
                senses.add(c.sense_key)
                synsets.add(c.synset_id)
    return StopSets(words, frozenset(senses), frozenset(synsets))


@dataclass(frozen=True)
class ValidationIssue:
    kind: str  # "unknown sense" | "synset mismatch" | "lemma mismatch" | "dangling query"
    unit_id: str
    token_index: int | None
    message: str


@dataclass
class ValidationReport:
    issues: list[ValidationIssue]
    documents: int
    queries: int
    tokens: int
    tagged_tokens: int
    ambiguous_tokens: int

    @property
    def ok(self) -> bool:
        return not self.issues

    def counts(self) -> dict[str, int]:
        return {
            "documents": self.documents,
            "queries": self.queries,
            "tokens": self.tokens,
            "tagged_tokens": self.tagged_tokens,
            "ambiguous_tokens": self.ambiguous_tokens,
        }


def _check_token(tok: Token, lex: Lexicon, unit_id: str, i: int) -> ValidationIssue | None:
    if not tok.tagged:
        return None
    synset = lex.synset_of(tok.sense_key)
    if synset is None:
        return ValidationIssue("unknown sense", unit_id, i, f"sense key {tok.sense_key!r} not in lexicon")
    if synset != tok.synset_id:
        return ValidationIssue(
            "synset mismatch", unit_id, i,
            f"{tok.sense_key!r} carries {tok.synset_id!r} but the lexicon maps it to {synset!r}",
        )
    if lex.entry_of(tok.sense_key) != (tok.lemma, tok.pos):
        return ValidationIssue(
            "lemma mismatch", unit_id, i,
            f"{tok.sense_key!r} is not a candidate of {tok.lemma}/{tok.pos}",
        )
    return None


def validate_collection(c: Collection, lex: Lexicon) -> ValidationReport:
    """Check every tagged token against the lexicon. Never raises."""
    issues = []
    n_tokens = n_tagged = n_ambiguous = 0
    doc_ids = set(c.document_ids())
    units = [(d.id, d.tokens) for d in c.documents] + [(q.id, q.tokens) for q in c.queries]
    for unit_id, tokens in units:
        for i, tok in enumerate(tokens):
            n_tokens += 1
            if not tok.tagged:
                continue
            n_tagged += 1
            if len(lex.candidates(tok.lemma, tok.pos)) >= 2:
                n_ambiguous += 1
            issue = _check_token(tok, lex, unit_id, i)
            if issue:
                issues.append(issue)
    for q in c.queries:
        if q.relevant_doc_id not in doc_ids:
            issues.append(
                ValidationIssue("dangling query", q.id, None, f"relevant document {q.relevant_doc_id!r} not found")
            )
    return ValidationReport(issues, len(c.documents), len(c.queries), n_tokens, n_tagged, n_ambiguous)
