"""SMART ``nnn`` / ``atc`` weighting and ranked retrieval over an inverted index.

``nnn`` keeps raw term frequencies. ``atc`` uses augmented tf
(0.5 + 0.5 tf / max_tf), natural-log idf ln(N / df) and cosine
normalization. Queries and documents are weighted with the same scheme.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Mapping

from synsetir.indexing import InvertedIndex

# Scores are rounded to this many decimals for ordering only, so that values
# equal up to float noise fall back to the doc_id tie-break.
RANK_DECIMALS = 10


class WeightingScheme(enum.Enum):
    NNN = "nnn"
    ATC = "atc"

    @classmethod
    def parse(cls, value: "str | WeightingScheme") -> "WeightingScheme":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown weighting scheme {value!r} (expected nnn or atc)") from None


class EmptyQueryError(ValueError):
    pass


@dataclass(frozen=True)
class RankedList:
    query_id: str
    items: tuple[tuple[str, float], ...]

    def rank_of(self, doc_id: str) -> int | None:
        for i, (d, _) in enumerate(self.items, 1):
            if d == doc_id:
                return i
        return None

    def top(self, k: int) -> "RankedList":
        return RankedList(self.query_id, self.items[:k])


def weight_vector(v: Mapping[str, int], scheme: WeightingScheme, idx: InvertedIndex) -> dict[str, float]:
    if not v:
        raise ValueError("cannot weight an empty vector")
    if scheme is WeightingScheme.NNN:
        return {t: float(tf) for t, tf in v.items()}
    n = idx.doc_count
    max_tf = max(v.values())
    raw = {}
    for t, tf in v.items():
        df = idx.df.get(t, 0)
        if df < 1:
            raw[t] = 0.0
            continue
        raw[t] = (0.5 + 0.5 * tf / max_tf) * math.log(n / df)
    norm = math.sqrt(sum(w * w for w in raw.values()))
    if norm == 0.0:
        return {t: 0.0 for t in raw}
    return {t: w / norm for t, w in raw.items()}


def _doc_weights(idx: InvertedIndex, scheme: WeightingScheme) -> dict[str, dict[str, float]]:
    cached = idx._weight_cache.get(scheme)
    if cached is None:
        cached = {d: weight_vector(v, scheme, idx) if v else {} for d, v in idx.doc_vectors.items()}
        idx._weight_cache[scheme] = cached
    return cached


def rank_scores(query_id: str, scores: Mapping[str, float], doc_ids) -> RankedList:
    """Total ranking: score descending, then doc_id ascending. Unscored docs get 0."""
    full = {d: float(scores.get(d, 0.0)) for d in doc_ids}
    order = sorted(full, key=lambda d: (-round(full[d], RANK_DECIMALS), d))
    return RankedList(query_id, tuple((d, full[d]) for d in order))


def score_query(
    q: Mapping[str, int], idx: InvertedIndex, scheme: WeightingScheme, query_id: str = ""
) -> RankedList:
    """Rank every indexed document against the query term vector ``q``."""
    if not q:
        raise EmptyQueryError(f"empty query {query_id}".rstrip())
    qw = weight_vector(q, scheme, idx)
    dw = _doc_weights(idx, scheme)
    scores: dict[str, float] = {}
    for term in sorted(qw):
        w = qw[term]
        if w == 0.0:
            continue
        for doc_id, _ in idx.postings.get(term, ()):
            scores[doc_id] = scores.get(doc_id, 0.0) + w * dw[doc_id][term]
    return rank_scores(query_id, scores, idx.doc_ids)


def format_run(ranked: list[RankedList], top_k: int | None = None) -> str:
    lines = []
    for rl in ranked:
        items = rl.items if top_k is None else rl.items[:top_k]
        for rank, (doc_id, score) in enumerate(items, 1):
            lines.append(f"{rl.query_id}\t{rank}\t{doc_id}\t{score:.6f}")
    return "\n".join(lines) + ("\n" if lines else "")


def read_run(path) -> dict[str, list[tuple[int, str, float]]]:
    run: dict[str, list[tuple[int, str, float]]] = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            qid, rank, doc_id, score = line.rstrip("\n").split("\t")
            run.setdefault(qid, []).append((int(rank), doc_id, float(score)))
    return run
