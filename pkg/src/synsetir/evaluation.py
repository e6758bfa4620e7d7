"""Experiment runs and success-at-rank metrics.

Every query has exactly one relevant document, so a run is summarised by the
rank of that document for each query. ``success_at_k`` is the percentage of
queries whose relevant document is ranked within the top ``k``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Mapping, Sequence

from synsetir.corpus import (
    Collection,
    Lexicon,
    StopSets,
    parse_corpus,
    parse_lexicon,
    read_stopwords,
    translate_stoplist,
)
from synsetir.indexing import IndexSpace, build_all_senses_index, build_index, expand_all_senses, term_vector
from synsetir.noise import NoiseScope, NoiseSpec, NoiseStats, inject_errors_with_stats
from synsetir.retrieval import EmptyQueryError, RankedList, WeightingScheme, score_query


class DocMode(enum.Enum):
    TAGGED = "tagged"
    ALL_SENSES = "all-senses"
    NOISY = "noisy"


class QueryMode(enum.Enum):
    TAGGED = "tagged"
    ALL_SENSES = "all-senses"


def _parse_mode(cls, value):
    if isinstance(value, cls):
        return value
    try:
        return cls(str(value).strip().lower().replace("_", "-"))
    except ValueError:
        choices = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown mode {value!r} (expected one of {choices})") from None


@dataclass(frozen=True)
class ExperimentConfig:
    name: str = "experiment"
    space: IndexSpace = IndexSpace.SYNSET
    scheme: WeightingScheme = WeightingScheme.NNN
    doc_mode: DocMode = DocMode.TAGGED
    query_mode: QueryMode = QueryMode.TAGGED
    noise_rate: float = 0.0
    noise_seeds: tuple[int, ...] = (0,)
    noise_scope: NoiseScope = NoiseScope.DOCUMENTS
    top_k: int = 10
    corpus_path: str | None = None
    lexicon_path: str | None = None
    stop_words_path: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "space", IndexSpace.parse(self.space))
        object.__setattr__(self, "scheme", WeightingScheme.parse(self.scheme))
        object.__setattr__(self, "doc_mode", _parse_mode(DocMode, self.doc_mode))
        object.__setattr__(self, "query_mode", _parse_mode(QueryMode, self.query_mode))
        object.__setattr__(self, "noise_scope", NoiseScope.parse(self.noise_scope))
        object.__setattr__(self, "noise_seeds", tuple(int(s) for s in self.noise_seeds))
        if self.space is IndexSpace.WORD and (
            self.doc_mode is not DocMode.TAGGED or self.query_mode is not QueryMode.TAGGED
        ):
            raise ValueError("noisy and all-senses modes need the sense or synset space")
        if not 0.0 <= self.noise_rate <= 1.0:
            raise ValueError(f"noise rate must lie in [0, 1], got {self.noise_rate}")
        if self.doc_mode is DocMode.NOISY and not self.noise_seeds:
            raise ValueError("noisy runs need at least one seed")
        if self.top_k < 1:
            raise ValueError("top_k must be at least 1")

    def noise_specs(self) -> list[NoiseSpec]:
        if self.doc_mode is not DocMode.NOISY:
            return []
        return [NoiseSpec(self.noise_rate, s, self.noise_scope) for s in self.noise_seeds]

    def echo(self) -> dict[str, str]:
        out = {
            "name": self.name,
            "space": self.space.value,
            "scheme": self.scheme.value,
            "doc_mode": self.doc_mode.value,
            "query_mode": self.query_mode.value,
            "top_k": str(self.top_k),
        }
        if self.doc_mode is DocMode.NOISY:
            out["noise_rate"] = f"{self.noise_rate:g}"
            out["noise_seeds"] = ",".join(map(str, self.noise_seeds))
            out["noise_scope"] = self.noise_scope.value
        return out


@dataclass
class EvalReport:
    """Outcome of one experiment.

    For noisy runs over several seeds, ``success_at_k`` is the mean over
    seeds, ``seed_reports`` holds one report per seed and ``per_query_ranks``
    is left empty.
    """

    config: ExperimentConfig
    n_documents: int
    n_queries: int
    success_at_k: list[tuple[int, float]]
    per_query_ranks: dict[str, int | None]
    failures: list[str] = field(default_factory=list)
    seed_reports: list["EvalReport"] = field(default_factory=list)
    noise: list[NoiseStats] = field(default_factory=list)

    @property
    def success_at_1(self) -> float:
        return self.success_at_k[0][1]

    def at(self, k: int) -> float:
        for kk, pct in self.success_at_k:
            if kk == k:
                return pct
        raise KeyError(k)


def success_at_k(ranks: Mapping[str, int | None], k: int) -> float:
    """Percentage of queries whose relevant document is within the top ``k``.

    A rank of None (failed query) never counts as a success.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if not ranks:
        raise ValueError("no queries")
    hits = sum(1 for r in ranks.values() if r is not None and r <= k)
    return 100.0 * hits / len(ranks)


def rank_success_curve(report: EvalReport) -> list[tuple[int, float]]:
    return list(report.success_at_k)


def format_curve_csv(report: EvalReport) -> str:
    rows = ["k,percent"] + [f"{k},{pct:.1f}" for k, pct in rank_success_curve(report)]
    return "\n".join(rows) + "\n"


def format_summary_csv(reports: Sequence[EvalReport]) -> str:
    rows = ["experiment,success_at_1"] + [f"{r.config.name},{r.success_at_1:.1f}" for r in reports]
    return "\n".join(rows) + "\n"


def format_seed_csv(report: EvalReport) -> str:
    rows = ["seed,success_at_1,altered,eligible"]
    for sub, stats in zip(report.seed_reports or [report], report.noise):
        rows.append(f"{stats.seed},{sub.success_at_1:.1f},{stats.altered},{stats.eligible}")
    return "\n".join(rows) + "\n"


def query_vector(tokens, cfg: ExperimentConfig, lexicon: Lexicon, stops: StopSets):
    if cfg.query_mode is QueryMode.ALL_SENSES:
        return expand_all_senses(tokens, lexicon, cfg.space, stops)
    return term_vector(tokens, cfg.space, stops)


def run_queries(collection: Collection, index, cfg: ExperimentConfig, lexicon: Lexicon, stops: StopSets):
    """Score every query; returns ranked lists and the ids of empty queries."""
    ranked: list[RankedList] = []
    failures: list[str] = []
    for q in collection.queries:
        vec = query_vector(q.tokens, cfg, lexicon, stops)
        try:
            ranked.append(score_query(vec, index, cfg.scheme, q.id))
        except EmptyQueryError:
            failures.append(q.id)
    return ranked, failures


def _single_run(collection: Collection, lexicon: Lexicon, stops: StopSets, cfg: ExperimentConfig) -> EvalReport:
    if cfg.doc_mode is DocMode.ALL_SENSES:
        index = build_all_senses_index(collection.documents, lexicon, cfg.space, stops)
    else:
        index = build_index(collection.documents, cfg.space, stops)
    ranked, failures = run_queries(collection, index, cfg, lexicon, stops)
    relevant = {q.id: q.relevant_doc_id for q in collection.queries}
    ranks: dict[str, int | None] = {q.id: None for q in collection.queries}
    for rl in ranked:
        ranks[rl.query_id] = rl.rank_of(relevant[rl.query_id])
    curve = [(k, success_at_k(ranks, k)) for k in range(1, cfg.top_k + 1)]
    return EvalReport(cfg, len(collection.documents), len(collection.queries), curve, ranks, failures)


def evaluate(collection: Collection, lexicon: Lexicon, stops: StopSets, cfg: ExperimentConfig) -> EvalReport:
    """Run one experiment on an in-memory collection."""
    if not collection.queries:
        raise ValueError("collection has no queries")
    if cfg.doc_mode is not DocMode.NOISY:
        return _single_run(collection, lexicon, stops, cfg)
    runs, stats = [], []
    for spec in cfg.noise_specs():
        noisy, st = inject_errors_with_stats(collection, lexicon, spec)
        runs.append(_single_run(noisy, lexicon, stops, cfg))
        stats.append(st)
    if len(runs) == 1:
        report = runs[0]
        report.noise = stats
        return report
    curve = [
        (k, sum(r.success_at_k[i][1] for r in runs) / len(runs))
        for i, k in enumerate(range(1, cfg.top_k + 1))
    ]
    failures = sorted({f for r in runs for f in r.failures})
    return EvalReport(cfg, runs[0].n_documents, runs[0].n_queries, curve, {}, failures, runs, stats)


def load_inputs(cfg: ExperimentConfig) -> tuple[Collection, Lexicon, StopSets]:
    if not cfg.corpus_path or not cfg.lexicon_path:
        raise ValueError("experiment needs corpus and lexicon paths")
    collection = parse_corpus(cfg.corpus_path)
    lexicon = parse_lexicon(cfg.lexicon_path)
    words = read_stopwords(cfg.stop_words_path) if cfg.stop_words_path else frozenset()
    return collection, lexicon, translate_stoplist(words, lexicon)


def run_experiment(cfg: ExperimentConfig) -> EvalReport:
    """parse -> stop-list translation -> (noise) -> index -> score -> report."""
    collection, lexicon, stops = load_inputs(cfg)
    return evaluate(collection, lexicon, stops, cfg)


# Row labels and reference values (% correct document ranked first) of the
# published IR-Semcor results, in publication order.
TABLE1_REFERENCE = (
    ("synsets", 62.0),
    ("word_senses", 53.2),
    ("words", 48.0),
    ("synsets_noise_05", 62.0),
    ("synsets_noise_10", 60.8),
    ("synsets_noise_20", 56.1),
    ("synsets_noise_30", 54.4),
    ("synsets_all_senses", 52.6),
    ("synsets_noise_60", 49.1),
    ("synsets_undisambiguated_queries", 48.5),
    ("senses_undisambiguated_queries", 40.9),
)


def table1_configs(
    corpus_path=None,
    lexicon_path=None,
    stop_words_path=None,
    seeds: Sequence[int] = tuple(range(10)),
    scheme: WeightingScheme = WeightingScheme.NNN,
    top_k: int = 10,
) -> list[ExperimentConfig]:
    """The eleven experiment configurations behind the published results table."""
    base = ExperimentConfig(
        scheme=scheme,
        top_k=top_k,
        corpus_path=str(corpus_path) if corpus_path else None,
        lexicon_path=str(lexicon_path) if lexicon_path else None,
        stop_words_path=str(stop_words_path) if stop_words_path else None,
    )
    syn, sense, word = IndexSpace.SYNSET, IndexSpace.SENSE, IndexSpace.WORD
    seeds = tuple(seeds)

    def noisy(name, rate):
        return replace(base, name=name, space=syn, doc_mode=DocMode.NOISY, noise_rate=rate, noise_seeds=seeds)

    return [
        replace(base, name="synsets", space=syn),
        replace(base, name="word_senses", space=sense),
        replace(base, name="words", space=word),
        noisy("synsets_noise_05", 0.05),
        noisy("synsets_noise_10", 0.10),
        noisy("synsets_noise_20", 0.20),
        noisy("synsets_noise_30", 0.30),
        replace(base, name="synsets_all_senses", space=syn, doc_mode=DocMode.ALL_SENSES),
        noisy("synsets_noise_60", 0.60),
        replace(base, name="synsets_undisambiguated_queries", space=syn, query_mode=QueryMode.ALL_SENSES),
        replace(base, name="senses_undisambiguated_queries", space=sense, query_mode=QueryMode.ALL_SENSES),
    ]


def write_reports(reports: Sequence[EvalReport], out_dir) -> list[Path]:
    """Write one ``<name>.csv`` curve per report (plus ``<name>.seeds.csv`` for
    multi-seed runs) and ``summary.csv``."""
    from synsetir.io import atomic_write_text

    out_dir = Path(out_dir)
    written = []
    for r in reports:
        p = out_dir / f"{r.config.name}.csv"
        atomic_write_text(p, format_curve_csv(r))
        written.append(p)
        if r.noise:
            p = out_dir / f"{r.config.name}.seeds.csv"
            atomic_write_text(p, format_seed_csv(r))
            written.append(p)
    p = out_dir / "summary.csv"
    atomic_write_text(p, format_summary_csv(reports))
    written.append(p)
    return written
