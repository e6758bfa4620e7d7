"""
The same pipeline from the command line
=======================================

Every step below is one ``synsetir`` invocation; ``main`` takes the argument
list directly, so this script runs them in-process. Outputs land in a
temporary directory.
"""

import tempfile
from pathlib import Path

from synsetir.cli import main

tmp = Path(tempfile.mkdtemp(prefix="synsetir-demo-"))
data = tmp / "data"


def sh(*args):
    print("$ synsetir", " ".join(map(str, args)))
    code = main([str(a) for a in args])
    print(f"  exit {code}")


###############################################################################
# A small synthetic collection, then a consistency check.

sh("generate", "--n-docs", 30, "--doc-len", 200, "--out", data)
sh("validate", data / "corpus.tsv", data / "lexicon.tsv")

###############################################################################
# Index in synset space and search.

sh("index", data / "corpus.tsv", data / "lexicon.tsv", "--stopwords", data / "stopwords.txt",
   "--space", "synset", "--out", tmp / "synset.index")
sh("search", tmp / "synset.index", data / "corpus.tsv", "--stopwords", data / "stopwords.txt",
   "--top-k", 3, "--out", tmp / "synset.run")
print((tmp / "synset.run").read_text().splitlines()[:6])

###############################################################################
# Simulated disambiguation errors: 20% of ambiguous document tokens.

sh("inject", data / "corpus.tsv", data / "lexicon.tsv", "--rate", 0.2, "--seed", 7, "--out", tmp / "noisy.tsv")
print((tmp / "noisy.tsv.noise").read_text())

###############################################################################
# The full table as a sweep file.

sweep = Path(__file__).with_name("table1.sweep")
(data / "table1.sweep").write_text(sweep.read_text())
sh("experiment", data / "table1.sweep", "--out-dir", tmp / "results")
print((tmp / "results" / "summary.csv").read_text())
