"""Synthetic sense-tagged collections for desk-scale retrieval experiments.

The generator builds a lexicon of artificial synsets whose member lemmas are
shared between synsets (polysemy), writes documents that mix a few topical
synsets with a shared background vocabulary, per-document proper names and
untagged stop words, and derives each query from a window of its document.
A fraction of the query's content tokens is rewritten with a *different*
lemma of the same synset, chosen among lemmas the document never uses as a
tagged token. Word indexing loses those matches; synset indexing keeps them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from synsetir.corpus import Collection, Document, Lexicon, Query, SenseCandidate, Token

POS_DIGIT = {"n": 1, "v": 2, "a": 3, "r": 4}
# Lexicographer file ranges per part of speech, as in WordNet.
LEXFILES = {"n": (3, 28), "v": (29, 43), "a": (0, 2), "r": (2, 2)}
POS_WEIGHTS = {"n": 0.6, "v": 0.25, "a": 0.1, "r": 0.05}

STOP_WORDS = (
    "the", "of", "and", "to", "a", "in", "is", "that", "it", "for", "was", "on",
    "with", "as", "he", "be", "at", "by", "his", "this", "had", "have", "from",
    "not", "but", "or", "they", "which", "an", "were",
)
# Stop words that also carry lexicon entries, so stop-list translation has
# something to translate: (lemma, pos, number of senses).
STOP_LEXICON = (("be", "v", 3), ("have", "v", 2), ("not", "r", 1))

MAX_SENSES = 30

_CONSONANTS = "bdfgklmnprstvz"
_VOWELS = "aeiou"


class InfeasibleParameters(ValueError):
    pass


@dataclass(frozen=True)
class SynonymyParams:
    synset_count: int = 1500
    senses_per_synset: int = 3
    polysemy: float = 2.0
    query_synonym_swap_rate: float = 0.5


@dataclass(frozen=True)
class GeneratorOptions:
    """Shape of the generated text, beyond the synonymy parameters.

    ``polysemy_zipf`` skews sense counts across lemmas, ``lemma_bias`` and
    ``swap_bias`` make documents and query swaps prefer polysemous lemmas
    (weight ``n_senses ** bias``), and ``polysemous_background`` gives each
    ambiguous lemma one sense in the shared background vocabulary.
    """

    query_len: int = 24
    topic_synsets: int = 40
    topic_zipf: float = 1.0
    background_fraction: float = 0.05
    background_share: float = 0.35
    name_share: float = 0.02
    names_per_doc: int = 2
    stop_share: float = 0.3
    polysemy_zipf: float = 0.0
    lemma_bias: float = 0.0
    swap_bias: float = 0.0
    polysemous_background: bool = False


def _pseudowords(rng: np.random.Generator, n: int, syllables: tuple[int, int], exclude: set[str]) -> list[str]:
    words: list[str] = []
    seen = set(exclude)
    while len(words) < n:
        k = int(rng.integers(syllables[0], syllables[1] + 1))
        w = "".join(
            _CONSONANTS[int(rng.integers(len(_CONSONANTS)))] + _VOWELS[int(rng.integers(len(_VOWELS)))]
            for _ in range(k)
        )
        if w not in seen:
            seen.add(w)
            words.append(w)
    return words


@dataclass
class _SynLex:
    lexicon: Lexicon
    synset_ids: list[str]
    synset_pos: list[str]
    members: list[list[str]]  # synset index -> lemmas
    n_senses: dict[str, int]
    order: np.ndarray
    sense_of: dict[tuple[str, int], str]  # (lemma, synset index) -> sense key


def _build_lexicon(
    rng: np.random.Generator,
    params: SynonymyParams,
    n_background: int,
    zipf: float = 0.0,
    polysemous_background: bool = False,
) -> _SynLex:
    S, m = params.synset_count, params.senses_per_synset
    slots = S * m
    cap = min(S, MAX_SENSES)  # sense numbers are two digits
    n_lemmas = max(m, min(slots, int(round(slots / params.polysemy))))
    if n_lemmas * cap < slots:
        raise InfeasibleParameters("polysemy too high for the number of synsets")
    counts = np.ones(n_lemmas, dtype=int)
    extra = slots - n_lemmas
    weights = 1.0 / np.arange(1, n_lemmas + 1) ** zipf
    while extra > 0:
        room = np.flatnonzero(counts < cap)
        p = weights[room] / weights[room].sum()
        for i in rng.choice(room, size=min(extra, len(room)), replace=True, p=p):
            if extra and counts[i] < cap:
                counts[i] += 1
                extra -= 1
    counts = np.sort(counts)[::-1]
    lemmas = _pseudowords(rng, n_lemmas, (2, 3), set(STOP_WORDS))

    # Most polysemous lemmas first, each into distinct synsets with free
    # slots. With polysemous_background, a polysemous lemma takes one
    # background (frequent) synset and spreads its other senses over topical
    # synsets, the way common words carry senses from many domains.
    order = rng.permutation(S)
    is_bg = np.zeros(S, dtype=bool)
    is_bg[order[:n_background]] = True
    free = np.full(S, m)
    members: list[list[str]] = [[] for _ in range(S)]
    for lemma, c in zip(lemmas, counts):
        chosen: list[int] = []
        if polysemous_background and c > 1:
            bg = np.flatnonzero(is_bg & (free > 0))
            if len(bg):
                chosen.append(int(rng.choice(bg)))
                free[chosen[0]] -= 1
        mask = free > 0
        if polysemous_background and c > 1 and (mask & ~is_bg).sum() >= c - len(chosen):
            mask &= ~is_bg
        avail = np.flatnonzero(mask)
        need = int(c) - len(chosen)
        if len(avail) < need:
            raise InfeasibleParameters("cannot place lemma senses in distinct synsets")
        picks = rng.choice(avail, size=need, replace=False, p=free[avail] / free[avail].sum())
        for sidx in picks:
            free[sidx] -= 1
        chosen.extend(int(x) for x in picks)
        for sidx in chosen:
            members[sidx].append(lemma)
    pos_keys = list(POS_WEIGHTS)
    pos_p = np.array([POS_WEIGHTS[k] for k in pos_keys])
    synset_pos = [pos_keys[i] for i in rng.choice(len(pos_keys), size=S, p=pos_p)]
    offsets = np.sort(rng.choice(np.arange(1_000_000, 16_000_000), size=S + 16, replace=False))
    synset_ids = [f"{synset_pos[i]}{offsets[i]:08d}" for i in range(S)]
    lexfile = [int(rng.integers(LEXFILES[pos][0], LEXFILES[pos][1] + 1)) for pos in synset_pos]

    entries: dict[tuple[str, str], list[SenseCandidate]] = {}
    sense_of: dict[tuple[str, int], str] = {}
    for s in range(S):
        pos = synset_pos[s]
        for lemma in members[s]:
            bucket = entries.setdefault((lemma, pos), [])
            key = f"{lemma}%{POS_DIGIT[pos]}:{lexfile[s]:02d}:{len(bucket) + 1:02d}::"
            bucket.append(SenseCandidate(key, synset_ids[s]))
            sense_of[(lemma, s)] = key
    extra_offsets = iter(offsets[S:])
    for lemma, pos, n in STOP_LEXICON:
        bucket = entries.setdefault((lemma, pos), [])
        for _ in range(n):
            key = f"{lemma}%{POS_DIGIT[pos]}:{LEXFILES[pos][0]:02d}:{len(bucket) + 1:02d}::"
            bucket.append(SenseCandidate(key, f"{pos}{next(extra_offsets):08d}"))
    lexicon = Lexicon({k: tuple(v) for k, v in entries.items()})
    n_senses = {lemma: int(c) for lemma, c in zip(lemmas, counts)}
    return _SynLex(lexicon, synset_ids, synset_pos, members, n_senses, order, sense_of)


class _DocState:
    """Tracks the lemma chosen for each synset of one document.

    Invariant: every synset in use has at least one member lemma that the
    document does not use, so a query token can always be swapped to an
    unseen synonym.
    """

    def __init__(self, members, need_alternative: bool, weight=None):
        self.members = members
        self.weight = weight
        self.need_alt = need_alternative
        self.lemma_for: dict[int, str] = {}
        self.used_lemmas: set[str] = set()

    def _free(self, s: int, extra: str) -> int:
        return sum(1 for w in self.members[s] if w not in self.used_lemmas and w != extra)

    def choose(self, s: int, rng: np.random.Generator) -> str | None:
        if s in self.lemma_for:
            return self.lemma_for[s]
        cands = list(self.members[s])
        if self.weight is not None:
            w = np.array([self.weight[c] for c in cands], dtype=float)
            order = list(rng.choice(len(cands), size=len(cands), replace=False, p=w / w.sum()))
        else:
            order = list(rng.permutation(len(cands)))
        for i in order:
            lemma = cands[i]
            if self.need_alt:
                if self._free(s, lemma) == 0:
                    continue
                if lemma not in self.used_lemmas and any(
                    lemma in self.members[u] and self._free(u, lemma) == 0 for u in self.lemma_for
                ):
                    continue
            self.lemma_for[s] = lemma
            self.used_lemmas.add(lemma)
            return lemma
        return None


def generate_synthetic_collection(
    n_docs: int,
    doc_len: int,
    synonymy: SynonymyParams = SynonymyParams(),
    seed: int = 0,
    options: GeneratorOptions = GeneratorOptions(),
) -> tuple[Collection, Lexicon]:
    """Generate ``n_docs`` documents of ``doc_len`` tokens, one query per document."""
    if n_docs < 1 or doc_len < 1 or options.query_len < 1:
        raise InfeasibleParameters("n_docs, doc_len and query_len must be positive")
    if synonymy.synset_count < 1 or synonymy.senses_per_synset < 1 or synonymy.polysemy < 1:
        raise InfeasibleParameters("synset_count and senses_per_synset must be positive, polysemy >= 1")
    if not 0.0 <= synonymy.query_synonym_swap_rate <= 1.0:
        raise InfeasibleParameters("query_synonym_swap_rate must lie in [0, 1]")
    if synonymy.senses_per_synset < 2 and synonymy.query_synonym_swap_rate > 0:
        raise InfeasibleParameters("synonym swaps need senses_per_synset >= 2")
    shares = options.background_share + options.name_share + options.stop_share
    if shares > 1.0:
        raise InfeasibleParameters("background, name and stop shares exceed 1")

    rng = np.random.default_rng(seed)
    S = synonymy.synset_count
    n_bg = max(1, int(round(S * options.background_fraction)))
    syn = _build_lexicon(rng, synonymy, n_bg, options.polysemy_zipf, options.polysemous_background)
    all_synsets = syn.order
    background = all_synsets[:n_bg]
    topical_pool = all_synsets[n_bg:] if S > n_bg else all_synsets
    bg_weights = 1.0 / np.arange(1, n_bg + 1)
    bg_weights /= bg_weights.sum()
    stop_vocab = list(STOP_WORDS)
    lemma_set = {lemma for (lemma, _pos) in syn.lexicon.entries}
    all_names = [w.capitalize() for w in _pseudowords(rng, n_docs * options.names_per_doc, (3, 4), lemma_set)]
    width = len(str(n_docs))
    need_alt = synonymy.senses_per_synset >= 2
    lemma_weight = None
    if options.lemma_bias:
        lemma_weight = {w: float(n) ** options.lemma_bias for w, n in syn.n_senses.items()}

    documents, queries = [], []
    name_iter = iter(all_names)
    for i in range(n_docs):
        doc_id = f"d{i + 1:0{width}d}"
        k = min(options.topic_synsets, len(topical_pool))
        topic = rng.choice(topical_pool, size=k, replace=False)
        tw = 1.0 / np.arange(1, k + 1) ** options.topic_zipf
        tw /= tw.sum()
        names = [next(name_iter) for _ in range(options.names_per_doc)]
        state = _DocState(syn.members, need_alt, lemma_weight)
        tokens: list[Token] = []
        tagged_synset: list[int | None] = []
        attempts = 0
        while len(tokens) < doc_len:
            attempts += 1
            if attempts > 100 * doc_len:
                raise InfeasibleParameters("cannot fill a document under the synonym constraint; add synsets")
            u = rng.random()
            if u < options.stop_share:
                w = stop_vocab[int(rng.integers(len(stop_vocab)))]
                tokens.append(Token(w, w, "o"))
                tagged_synset.append(None)
                continue
            u -= options.stop_share
            if u < options.name_share:
                w = names[int(rng.integers(len(names)))]
                tokens.append(Token(w, w, "o"))
                tagged_synset.append(None)
                continue
            u -= options.name_share
            if u < options.background_share:
                s = int(background[rng.choice(n_bg, p=bg_weights)])
            else:
                s = int(topic[rng.choice(k, p=tw)])
            lemma = state.choose(s, rng)
            if lemma is None:
                continue
            pos = syn.synset_pos[s]
            tokens.append(Token(lemma, lemma, pos, syn.sense_of[(lemma, s)], syn.synset_ids[s]))
            tagged_synset.append(s)
        documents.append(Document(doc_id, tuple(tokens)))

        qlen = min(options.query_len, doc_len)
        start = int(rng.integers(0, doc_len - qlen + 1))
        qtoks = list(tokens[start:start + qlen])
        qsyn = tagged_synset[start:start + qlen]
        content = [j for j, s in enumerate(qsyn) if s is not None]
        n_swap = int(np.floor(synonymy.query_synonym_swap_rate * len(content) + 0.5))
        if n_swap:
            for j in sorted(rng.choice(content, size=n_swap, replace=False).tolist()):
                s = qsyn[j]
                alts = [w for w in syn.members[s] if w not in state.used_lemmas]
                aw = np.array([syn.n_senses[w] ** options.swap_bias for w in alts], dtype=float)
                new = alts[int(rng.choice(len(alts), p=aw / aw.sum()))]
                pos = syn.synset_pos[s]
                qtoks[j] = Token(new, new, pos, syn.sense_of[(new, s)], syn.synset_ids[s])
        queries.append(Query(f"q{i + 1:0{width}d}", tuple(qtoks), doc_id))
    return Collection(tuple(documents), tuple(queries)), syn.lexicon
