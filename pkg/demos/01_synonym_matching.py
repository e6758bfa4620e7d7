"""
Word, sense and synset matching on three sentences
==================================================

A query about an *argument* and an *outflow* of water. The relevant
document talks about a *debate* and a *spring*. Word indexing sees no
overlap; synset indexing does.
"""

from synsetir import (
    Collection, Document, IndexSpace, Lexicon, Query, SenseCandidate, Token,
    WeightingScheme, build_index, score_query, term_vector, translate_stoplist,
)


def tagged(word, pos, key, synset):
    return Token(word, word, pos, key, synset)


lexicon = Lexicon({
    ("debate", "n"): (SenseCandidate("debate%1:10:01::", "n04616654"),),
    ("argument", "n"): (
        SenseCandidate("argument%1:10:02::", "n04616654"),
        SenseCandidate("argument%1:10:00::", "n04606646"),
    ),
    ("spring", "n"): (
        SenseCandidate("spring%1:28:00::", "n15210486"),
        SenseCandidate("spring%1:17:00::", "n09464935"),
    ),
    ("outflow", "n"): (SenseCandidate("outflow%1:17:00::", "n09464935"),),
    ("court", "n"): (SenseCandidate("court%1:14:00::", "n08329453"),),
})

d1 = Document("d1", (
    tagged("debate", "n", "debate%1:10:01::", "n04616654"),
    Token("about", "about", "o"),
    tagged("spring", "n", "spring%1:17:00::", "n09464935"),
))
d2 = Document("d2", (
    tagged("court", "n", "court%1:14:00::", "n08329453"),
    tagged("argument", "n", "argument%1:10:02::", "n04616654"),
))
q1 = Query("q1", (
    tagged("argument", "n", "argument%1:10:02::", "n04616654"),
    tagged("outflow", "n", "outflow%1:17:00::", "n09464935"),
), "d1")
collection = Collection((d1, d2), (q1,))
stops = translate_stoplist({"about"}, lexicon)

###############################################################################
# Rank both documents in each space. Scores are raw term-frequency dot
# products.

for space in IndexSpace:
    index = build_index(collection.documents, space, stops)
    ranked = score_query(term_vector(q1.tokens, space, stops), index, WeightingScheme.NNN)
    print(f"{space.value:7s}", ranked.items, "-> relevant at rank", ranked.rank_of("d1"))

###############################################################################
# Senses alone do not help here: ``argument%1:10:02::`` and
# ``debate%1:10:01::`` are different keys. Only the synset merges them.
