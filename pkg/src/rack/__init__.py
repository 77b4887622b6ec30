"""Translate natural-language code-search queries into ranked API classes.

The pipeline: normalize titles and queries into stemmed keywords, island-
parse API class names out of answer code blocks, index keyword-API and
keyword-keyword co-occurrence, then rank candidates by likelihood and
coherence scores.
"""

from .codeextract import (
    CodeBlock,
    extract_answer_apis,
    extract_code_blocks,
    load_whitelist,
    parse_api_tokens,
)
from .corpus import CorpusDocument, read_jsonl, write_jsonl
from .errors import (
    EmptyQueryError,
    FormatError,
    GoldSetError,
    IndexChecksumError,
    IndexFormatError,
    RackError,
    RackIOError,
    TaggerUnavailableError,
)
from .evaluation import (
    GoldEntry,
    MetricsReport,
    load_gold,
    map_at_k,
    mean_recall_at_k,
    mrr_at_k,
    run_experiment,
    top_k_accuracy,
)
from .index import (
    AssociationIndex,
    BuildConfig,
    BuildResult,
    ContextIndex,
    build_index,
    load_index,
    save_index,
)
from .ranker import (
    RankerConfig,
    ScoredApi,
    context_cosine,
    coherent_candidates,
    dedup_related,
    kac_score,
    rank_apis,
)
from .textprep import (
    QueryTermMode,
    StopWordList,
    extract_query_keywords,
    normalize_and_split,
    preprocess_title,
    remove_stop_words,
    stem,
)

__version__ = "0.1.0"

__all__ = [
    "AssociationIndex",
    "BuildConfig",
    "BuildResult",
    "CodeBlock",
    "ContextIndex",
    "CorpusDocument",
    "EmptyQueryError",
    "FormatError",
    "GoldEntry",
    "GoldSetError",
    "IndexChecksumError",
    "IndexFormatError",
    "MetricsReport",
    "QueryTermMode",
    "RackError",
    "RackIOError",
    "RankerConfig",
    "ScoredApi",
    "StopWordList",
    "TaggerUnavailableError",
    "build_index",
    "coherent_candidates",
    "context_cosine",
    "dedup_related",
    "extract_answer_apis",
    "extract_code_blocks",
    "extract_query_keywords",
    "kac_score",
    "load_gold",
    "load_index",
    "load_whitelist",
    "map_at_k",
    "mean_recall_at_k",
    "mrr_at_k",
    "normalize_and_split",
    "parse_api_tokens",
    "preprocess_title",
    "rank_apis",
    "read_jsonl",
    "remove_stop_words",
    "run_experiment",
    "save_index",
    "stem",
    "top_k_accuracy",
    "write_jsonl",
]
