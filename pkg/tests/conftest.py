"""Shared fixtures: stop words, the worked-example index, random corpora."""

from __future__ import annotations

import random
from importlib import resources

import pytest

from rack.corpus import CorpusDocument
from rack.index import AssociationIndex, ContextIndex
from rack.textprep import StopWordList, stem

# Title-token pool for random corpora: every token must be a stemming
# fixpoint and not a stop word, so a document's keyword set equals its
# unique token set and the oracle can count from raw descriptors.
TOKEN_POOL = [
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "theta", "iota",
    "kappa", "sigma", "omega", "pixel", "socket", "buffer", "tensor",
    "vector", "matrix", "kernel", "cursor", "widget", "layout", "syntax",
    "scheme", "quorum", "shard", "tupl", "handl", "stack", "queue", "graph",
]

# API pool: valid class-name shapes with no substring containment between
# any two names, so related-name dedup never fires in oracle comparisons.
API_POOL = [
    "Alpha", "Bravo", "Charlie", "Delta", "Echo", "Foxtrot", "Golf",
    "Hotel", "India", "Juliet", "Kilo", "Lima", "Mike", "November",
    "Oscar", "Papa", "Quebec", "Romeo", "Sierra", "Tango",
]

_FILLER = ["the", "quick", "brown", "fox", "jumps", "over", "lazy", "dog"]


@pytest.fixture(scope="session")
def stops() -> StopWordList:
    return StopWordList.default()


def assert_pools_safe(stops: StopWordList) -> None:
    """Pool sanity: tokens are stem fixpoints off the stop list, API names
    are containment-free so dedup stays out of oracle comparisons."""
    for token in TOKEN_POOL:
        assert stem(token) == token, token
        assert token not in stops, token
    for a in API_POOL:
        for b in API_POOL:
            assert a == b or (a not in b and b not in a), (a, b)


@pytest.fixture(scope="session")
def table2_assoc() -> AssociationIndex:
    """Association counts whose delta=5 candidate lists match the worked example."""
    return AssociationIndex.from_counts(
        {
            "java": {"List": 50, "ArrayList": 40, "File": 30, "Map": 20, "Runnable": 10},
            "parser": {"Document": 50, "List": 40, "Element": 30, "File": 20, "Node": 10},
            "html": {"Document": 50, "Jsoup": 40, "Element": 30, "Elements": 20, "File": 10},
        },
        doc_count=100,
    )


@pytest.fixture(scope="session")
def table2_ctx() -> ContextIndex:
    """Context vectors engineered for pair coherences 0.20, 0.42, 0.28.

    Each of java/parser/html has squared norm 100, and each pair shares
    exactly one context word, giving dot products 20, 42, and 28.
    """
    return ContextIndex.from_pair_counts(
        {
            ("java", "web"): 4, ("parser", "web"): 5,
            ("pars", "parser"): 7, ("html", "pars"): 6,
            ("code", "java"): 4, ("code", "html"): 7,
            ("java", "thread"): 8, ("java", "string"): 2,
            ("parser", "xml"): 5, ("json", "parser"): 1,
            ("html", "tag"): 3, ("css", "html"): 2,
            ("html", "page"): 1, ("dom", "html"): 1,
        }
    )


def make_random_corpus(rng: random.Random, max_docs: int = 50):
    """A random corpus plus its raw (keywords, apis) descriptors.

    Titles draw up to 10 tokens from TOKEN_POOL (with repetition), answers
    up to 8 classes from API_POOL; some answers carry no code at all.
    """
    raw = []
    documents = []
    for i in range(rng.randint(1, max_docs)):
        tokens = rng.choices(TOKEN_POOL, k=rng.randint(1, 10))
        apis = rng.sample(API_POOL, k=rng.randint(0, 8))
        filler = " ".join(rng.choices(_FILLER, k=rng.randint(0, 5)))
        if apis:
            split = rng.randint(0, len(apis))
            html = (
                f"<p>{filler}</p>"
                f"<pre><code>{' '.join(apis[:split])}</code></pre>"
                f"<code>{' '.join(apis[split:])}</code>"
            )
        else:
            html = f"<p>{filler}</p>"
        raw.append((set(tokens), set(apis)))
        documents.append(
            CorpusDocument(
                id=f"d{i}",
                title=" ".join(tokens),
                accepted_answer_html=html,
                tags=("java",),
            )
        )
    return raw, documents


@pytest.fixture(scope="session")
def mini_corpus_path() -> str:
    return str(resources.files("rack.data").joinpath("mini_corpus.jsonl"))


@pytest.fixture(scope="session")
def mini_gold_path() -> str:
    return str(resources.files("rack.data").joinpath("mini_gold.tsv"))
