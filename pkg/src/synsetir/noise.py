"""Simulated word-sense-disambiguation errors.

Within each document (or query), the tagged tokens whose (lemma, pos) has at
least two lexicon candidates are eligible. Exactly ``round_half_up(rate * m)``
of the ``m`` eligible tokens are picked uniformly without replacement and
re-tagged with a uniformly chosen *different* candidate.

Randomness is drawn from numpy's PCG64 generator, one stream per unit,
seeded with ``SeedSequence([seed, h0, h1, h2, h3])`` where ``h0..h3`` are the
four little-endian 32-bit words of the first 16 bytes of
``sha256(kind + ":" + unit_id)`` and ``kind`` is ``doc`` or ``query``. Units
can therefore be corrupted in any order, or in parallel, with identical
results.
"""

from __future__ import annotations

import enum
import hashlib
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from synsetir.corpus import Collection, Document, Lexicon, Query, Token

GENERATOR = "pcg64-sha256"


class NoiseScope(enum.Enum):
    DOCUMENTS = "documents"
    QUERIES = "queries"
    BOTH = "both"

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown noise scope {value!r}") from None


@dataclass(frozen=True)
class NoiseSpec:
    error_rate: float
    seed: int = 0
    scope: NoiseScope = NoiseScope.DOCUMENTS

    def __post_init__(self):
        if not 0.0 <= self.error_rate <= 1.0:
            raise ValueError(f"error rate must lie in [0, 1], got {self.error_rate}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class NoiseStats:
    rate: float
    seed: int
    altered: int
    eligible: int
    tagged: int

    def metadata_line(self) -> str:
        return (
            f"#NOISE rate={self.rate:g} seed={self.seed} altered={self.altered} "
            f"eligible={self.eligible} tagged={self.tagged} generator={GENERATOR}"
        )


class NoiseError(ValueError):
    pass


def n_errors(rate: float, eligible: int) -> int:
    """Number of tokens to corrupt: rate * eligible rounded half up."""
    exact = Decimal(repr(float(rate))) * eligible
    return int(exact.quantize(Decimal(1), rounding=ROUND_HALF_UP))


def unit_rng(seed: int, kind: str, unit_id: str) -> np.random.Generator:
    digest = hashlib.sha256(f"{kind}:{unit_id}".encode("utf-8")).digest()
    words = np.frombuffer(digest[:16], dtype="<u4").tolist()
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *words])))


def eligible_positions(tokens, lexicon: Lexicon) -> list[int]:
    return [
        i for i, tok in enumerate(tokens)
        if tok.tagged and len(lexicon.candidates(tok.lemma, tok.pos)) >= 2
    ]


def _corrupt_tokens(tokens: tuple[Token, ...], lexicon: Lexicon, rate: float, rng, unit_id: str):
    positions = eligible_positions(tokens, lexicon)
    for i in positions:
        tok = tokens[i]
        if lexicon.entry_of(tok.sense_key) != (tok.lemma, tok.pos) or lexicon.synset_of(tok.sense_key) != tok.synset_id:
            raise NoiseError(
                f"{unit_id}: token {i} ({tok.sense_key}, {tok.synset_id}) is inconsistent with the lexicon entry "
                f"for {tok.lemma}/{tok.pos}; validate first"
            )
    k = n_errors(rate, len(positions))
    if k == 0:
        return tokens, 0, len(positions)
    out = list(tokens)
    chosen = rng.choice(len(positions), size=k, replace=False)
    for j in sorted(int(c) for c in chosen):
        i = positions[j]
        tok = tokens[i]
        cands = lexicon.candidates(tok.lemma, tok.pos)
        wrong = [c for c in cands if c.sense_key != tok.sense_key]
        pick = wrong[int(rng.integers(len(wrong)))]
        out[i] = tok.retag(pick.sense_key, pick.synset_id)
    return tuple(out), k, len(positions)


def inject_errors_with_stats(c: Collection, lex: Lexicon, spec: NoiseSpec) -> tuple[Collection, NoiseStats]:
    altered = eligible = 0
    tagged = 0
    docs, queries = list(c.documents), list(c.queries)
    if spec.scope in (NoiseScope.DOCUMENTS, NoiseScope.BOTH):
        for n, d in enumerate(docs):
            rng = unit_rng(spec.seed, "doc", d.id)
            toks, a, e = _corrupt_tokens(d.tokens, lex, spec.error_rate, rng, d.id)
            docs[n] = Document(d.id, toks) if a else d
            altered += a
            eligible += e
            tagged += sum(t.tagged for t in d.tokens)
    if spec.scope in (NoiseScope.QUERIES, NoiseScope.BOTH):
        for n, q in enumerate(queries):
            rng = unit_rng(spec.seed, "query", q.id)
            toks, a, e = _corrupt_tokens(q.tokens, lex, spec.error_rate, rng, q.id)
            queries[n] = Query(q.id, toks, q.relevant_doc_id) if a else q
            altered += a
            eligible += e
            tagged += sum(t.tagged for t in q.tokens)
    stats = NoiseStats(spec.error_rate, spec.seed, altered, eligible, tagged)
    return Collection(tuple(docs), tuple(queries)), stats


def inject_errors(c: Collection, lex: Lexicon, spec: NoiseSpec) -> Collection:
    """Return a copy of ``c`` with simulated disambiguation errors."""
    return inject_errors_with_stats(c, lex, spec)[0]
