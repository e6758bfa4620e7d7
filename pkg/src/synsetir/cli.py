"""Command-line interface: ``synsetir <command> ...``.

Exit codes: 0 success, 1 usage error (bad flags, missing files, bad config),
2 data error (unparseable or inconsistent corpus data).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from synsetir import __version__
from synsetir.config import ConfigError, parse_config_file
from synsetir.corpus import (
    CorpusFormatError,
    StopSets,
    format_corpus,
    format_lexicon,
    parse_corpus,
    parse_lexicon,
    read_stopwords,
    translate_stoplist,
    validate_collection,
)
from synsetir.evaluation import (
    ExperimentConfig,
    QueryMode,
    evaluate,
    load_inputs,
    run_queries,
    write_reports,
)
from synsetir.indexing import IndexSpace, build_all_senses_index, build_index, read_index, write_index
from synsetir.io import atomic_write_text
from synsetir.noise import NoiseError, NoiseScope, NoiseSpec, inject_errors_with_stats
from synsetir.retrieval import WeightingScheme, format_run
from synsetir.synthetic import (
    STOP_WORDS,
    InfeasibleParameters,
    SynonymyParams,
    generate_synthetic_collection,
)
from synsetir import fixture

EXIT_OK, EXIT_USAGE, EXIT_DATA = 0, 1, 2


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


class _Console:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def info(self, msg: str):
        if not self.quiet:
            print(msg, file=sys.stderr)

    def warn(self, msg: str):
        if not self.quiet:
            print(f"warning: {msg}", file=sys.stderr)


def _existing(path: str) -> Path:
    p = Path(path)
    if not p.is_file():
        raise UsageError(f"no such file: {path}")
    return p


def _load_corpus(path):
    try:
        return parse_corpus(_existing(path))
    except CorpusFormatError as e:
        raise DataError(str(e)) from None


def _load_lexicon(path):
    try:
        return parse_lexicon(_existing(path))
    except CorpusFormatError as e:
        raise DataError(str(e)) from None


def _stops(path, lexicon) -> StopSets:
    if not path:
        return StopSets()
    words = read_stopwords(_existing(path))
    if lexicon is None:
        return StopSets(stop_words=words)
    return translate_stoplist(words, lexicon)


def cmd_validate(args, out: _Console) -> int:
    collection = _load_corpus(args.corpus)
    lexicon = _load_lexicon(args.lexicon)
    report = validate_collection(collection, lexicon)
    for issue in report.issues:
        where = issue.unit_id if issue.token_index is None else f"{issue.unit_id}[{issue.token_index}]"
        out.warn(f"{issue.kind}: {where}: {issue.message}")
    counts = " ".join(f"{k}={v}" for k, v in report.counts().items())
    out.info(f"{counts} issues={len(report.issues)}")
    if any(i.kind == "dangling query" for i in report.issues):
        return EXIT_DATA
    if args.strict and report.issues:
        return EXIT_DATA
    return EXIT_OK


def cmd_index(args, out: _Console) -> int:
    space = IndexSpace.parse(args.space)
    collection = _load_corpus(args.corpus)
    lexicon = _load_lexicon(args.lexicon)
    stops = _stops(args.stopwords, lexicon)
    if space is not IndexSpace.WORD:
        attr = "sense_key" if space is IndexSpace.SENSE else "synset_id"
        if not any(getattr(t, attr) for d in collection.documents for t in d.tokens):
            out.warn(f"no document token carries a {attr}; the {space.value} index holds word-form fallbacks only")
    if args.doc_mode == "all-senses":
        if space is IndexSpace.WORD:
            raise UsageError("--doc-mode all-senses needs --space sense or synset")
        index = build_all_senses_index(collection.documents, lexicon, space, stops)
    else:
        index = build_index(collection.documents, space, stops)
    write_index(index, args.out)
    out.info(f"indexed {index.doc_count} documents, {len(index.postings)} terms ({space.value}) -> {args.out}")
    return EXIT_OK


def cmd_search(args, out: _Console) -> int:
    try:
        index = read_index(_existing(args.index))
    except ValueError as e:
        raise DataError(str(e)) from None
    collection = _load_corpus(args.corpus)
    query_mode = QueryMode(args.query_mode)
    lexicon = _load_lexicon(args.lexicon) if args.lexicon else None
    if query_mode is QueryMode.ALL_SENSES:
        if lexicon is None:
            raise UsageError("--query-mode all-senses needs --lexicon")
        if index.space is IndexSpace.WORD:
            raise UsageError("--query-mode all-senses needs a sense or synset index")
    if not collection.queries:
        raise DataError(f"{args.corpus}: no queries")
    cfg = ExperimentConfig(space=index.space, scheme=args.scheme, query_mode=query_mode)
    ranked, failures = run_queries(collection, index, cfg, lexicon, _stops(args.stopwords, lexicon))
    for qid in failures:
        out.warn(f"empty query {qid} (all terms removed); skipped")
    text = format_run(ranked, args.top_k)
    if args.out:
        atomic_write_text(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_inject(args, out: _Console) -> int:
    if not 0.0 <= args.rate <= 1.0:
        raise UsageError(f"--rate must lie in [0, 1], got {args.rate}")
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    collection = _load_corpus(args.corpus)
    lexicon = _load_lexicon(args.lexicon)
    spec = NoiseSpec(args.rate, args.seed, NoiseScope(args.scope))
    try:
        noisy, stats = inject_errors_with_stats(collection, lexicon, spec)
    except NoiseError as e:
        raise DataError(str(e)) from None
    atomic_write_text(args.out, format_corpus(noisy))
    atomic_write_text(f"{args.out}.noise", stats.metadata_line() + "\n")
    out.info(stats.metadata_line())
    return EXIT_OK


def cmd_experiment(args, out: _Console) -> int:
    path = _existing(args.config)
    try:
        configs = parse_config_file(path)
    except ConfigError as e:
        raise UsageError(str(e)) from None
    reports = []
    for cfg in configs:
        for p in (cfg.corpus_path, cfg.lexicon_path, cfg.stop_words_path):
            if p:
                _existing(p)
        try:
            collection, lexicon, stops = load_inputs(cfg)
            report = evaluate(collection, lexicon, stops, cfg)
        except (CorpusFormatError, NoiseError) as e:
            raise DataError(str(e)) from None
        for qid in report.failures:
            out.warn(f"{cfg.name}: empty query {qid}")
        out.info(f"{cfg.name}: success@1 = {report.success_at_1:.1f}%")
        reports.append(report)
    write_reports(reports, args.out_dir)
    return EXIT_OK


def cmd_generate(args, out: _Console) -> int:
    params = SynonymyParams(
        synset_count=args.synset_count,
        senses_per_synset=args.senses_per_synset,
        polysemy=args.polysemy,
        query_synonym_swap_rate=args.swap_rate,
    )
    try:
        collection, lexicon = generate_synthetic_collection(
            args.n_docs, args.doc_len, params, args.seed, fixture.OPTIONS
        )
    except InfeasibleParameters as e:
        raise UsageError(f"infeasible parameters: {e}") from None
    out_dir = Path(args.out)
    atomic_write_text(out_dir / "corpus.tsv", format_corpus(collection))
    atomic_write_text(out_dir / "lexicon.tsv", format_lexicon(lexicon))
    atomic_write_text(out_dir / "stopwords.txt", "\n".join(STOP_WORDS) + "\n")
    out.info(f"wrote {len(collection.documents)} documents and {len(collection.queries)} queries to {out_dir}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="synsetir", description="Word, sense and synset indexed retrieval experiments.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("--quiet", action="store_true", help="suppress diagnostics on standard error")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("validate", help="check a corpus against a lexicon")
    s.add_argument("corpus", help="corpus file (vertical-token TSV)")
    s.add_argument("lexicon", help="lexicon file")
    s.add_argument("--strict", action="store_true", help="exit 2 on any validation issue")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("index", help="build an inverted index file")
    s.add_argument("corpus")
    s.add_argument("lexicon")
    s.add_argument("--stopwords", help="stop-word list, one word per line")
    s.add_argument("--space", required=True, choices=[v.value for v in IndexSpace], help="index space")
    s.add_argument("--doc-mode", default="tagged", choices=["tagged", "all-senses"])
    s.add_argument("--out", required=True, help="index file to write")
    s.set_defaults(func=cmd_index)

    s = sub.add_parser("search", help="rank documents for every query; writes a run file")
    s.add_argument("index", help="index file from 'synsetir index'")
    s.add_argument("corpus", help="corpus file holding the queries")
    s.add_argument("--lexicon", help="lexicon file (needed for --query-mode all-senses)")
    s.add_argument("--stopwords", help="stop-word list used when the index was built")
    s.add_argument("--scheme", default="nnn", choices=[v.value for v in WeightingScheme])
    s.add_argument("--top-k", type=int, default=None, help="ranks to emit per query (default: all)")
    s.add_argument("--query-mode", default="tagged", choices=[m.value for m in QueryMode])
    s.add_argument("--out", help="run file to write (default: standard output)")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("inject", help="simulate disambiguation errors")
    s.add_argument("corpus")
    s.add_argument("lexicon")
    s.add_argument("--rate", type=float, required=True, help="error rate in [0, 1]")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--scope", default="documents", choices=[v.value for v in NoiseScope])
    s.add_argument("--out", required=True, help="corpus file to write; metadata goes to <out>.noise")
    s.set_defaults(func=cmd_inject)

    s = sub.add_parser("experiment", help="run a config or sweep file")
    s.add_argument("config", help="config or sweep file")
    s.add_argument("--out-dir", required=True)
    s.set_defaults(func=cmd_experiment)

    s = sub.add_parser("generate", help="write a synthetic corpus, lexicon and stop list")
    s.add_argument("--n-docs", type=int, default=fixture.N_DOCS)
    s.add_argument("--doc-len", type=int, default=fixture.DOC_LEN)
    s.add_argument("--swap-rate", type=float, default=fixture.SYNONYMY.query_synonym_swap_rate)
    s.add_argument("--synset-count", type=int, default=fixture.SYNONYMY.synset_count)
    s.add_argument("--senses-per-synset", type=int, default=fixture.SYNONYMY.senses_per_synset)
    s.add_argument("--polysemy", type=float, default=fixture.SYNONYMY.polysemy)
    s.add_argument("--seed", type=int, default=fixture.SEED)
    s.add_argument("--out", required=True, help="output directory")
    s.set_defaults(func=cmd_generate)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = _Console(args.quiet)
    try:
        return args.func(args, out)
    except UsageError as e:
        print(f"synsetir {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (DataError, ValueError) as e:
        print(f"synsetir {args.command}: data error: {e}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
