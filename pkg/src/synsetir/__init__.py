"""Vector-space retrieval over word forms, word senses and synsets."""

__version__ = "0.1.0"

from synsetir.corpus import (
    Collection,
    CorpusFormatError,
    Document,
    Lexicon,
    Query,
    SenseCandidate,
    StopSets,
    Token,
    parse_corpus,
    parse_lexicon,
    translate_stoplist,
    validate_collection,
)
from synsetir.evaluation import (
    DocMode,
    EvalReport,
    ExperimentConfig,
    QueryMode,
    evaluate,
    rank_success_curve,
    run_experiment,
    success_at_k,
)
from synsetir.indexing import IndexSpace, InvertedIndex, build_index, expand_all_senses, project_token, term_vector
from synsetir.noise import NoiseScope, NoiseSpec, inject_errors
from synsetir.retrieval import RankedList, WeightingScheme, score_query, weight_vector
from synsetir.synthetic import GeneratorOptions, SynonymyParams, generate_synthetic_collection

__all__ = [
    "Collection", "CorpusFormatError", "Document", "Lexicon", "Query", "SenseCandidate", "StopSets", "Token",
    "parse_corpus", "parse_lexicon", "translate_stoplist", "validate_collection",
    "DocMode", "EvalReport", "ExperimentConfig", "QueryMode", "evaluate", "rank_success_curve",
    "run_experiment", "success_at_k",
    "IndexSpace", "InvertedIndex", "build_index", "expand_all_senses", "project_token", "term_vector",
    "NoiseScope", "NoiseSpec", "inject_errors",
    "RankedList", "WeightingScheme", "score_query", "weight_vector",
    "GeneratorOptions", "SynonymyParams", "generate_synthetic_collection",
]
