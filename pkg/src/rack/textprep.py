"""Text normalization: splitting, stop-word removal, stemming, query keywords.

Turns free text (question titles, search queries) into stemmed keyword
sets. All functions are pure; they can be called concurrently without
restriction.
"""

from __future__ import annotations

import enum
import logging
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from . import postag, snowball
from .errors import TaggerUnavailableError

log = logging.getLogger(__name__)

# Tokens are maximal runs of letters and digits; everything else
# (whitespace, punctuation, underscores) separates them.
_SPLIT_RE = re.compile(r"[\W_]+")


class QueryTermMode(enum.Enum):
    """Which part-of-speech classes survive query keyword extraction."""

    ALL_TERMS = "all-terms"
    NOUN_ONLY = "noun-only"
    VERB_ONLY = "verb-only"
    NOUN_AND_VERB = "noun-and-verb"

    @classmethod
    def from_string(cls, value: str) -> "QueryTermMode":
        for mode in cls:
            if mode.value == value:
                return mode
        options = ", ".join(m.value for m in cls)
        raise ValueError(f"unknown query term mode {value!r} (expected one of: {options})")


@dataclass(frozen=True)
class StopWordList:
    """Case-insensitive stop-word membership."""

    entries: frozenset[str]
    source: str = "built-in"

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("stop-word list must not be empty")

    def __contains__(self, token: str) -> bool:
        return token.lower() in self.entries

    @classmethod
    def default(cls) -> "StopWordList":
        text = resources.files("rack.data").joinpath("stopwords.txt").read_text("utf-8")
        return cls(entries=_parse_stopword_text(text), source="built-in")

    @classmethod
    def from_file(cls, path: str | Path) -> "StopWordList":
        text = Path(path).read_text("utf-8")
        return cls(entries=_parse_stopword_text(text), source=str(path))


def _parse_stopword_text(text: str) -> frozenset[str]:
    words = set()
    for line in text.splitlines():
        word = line.split("#", 1)[0].strip().lower()
        if word:
            words.add(word)
    return frozenset(words)


def normalize_and_split(text: str) -> list[str]:
    """Lowercase ``text`` and split it on whitespace and punctuation.

    Empty fragments are dropped; the original token order is preserved.
    """
    return [tok for tok in _SPLIT_RE.split(text.lower()) if tok]


def remove_stop_words(tokens: Iterable[str], stops: StopWordList) -> list[str]:
    """Keep exactly the tokens absent from ``stops``, order preserved."""
    return [tok for tok in tokens if tok not in stops]


def stem(token: str) -> str:
    """Snowball English stem of a lowercased token.

    A single application of the algorithm, as every standard Snowball
    implementation behaves. Stemming is idempotent on normal English
    vocabulary but not universally (e.g. "parse" -> "pars" -> "par");
    re-applying it would mangle common words, so outputs are taken as-is.
    """
    return snowball.stem(token)


@dataclass(frozen=True)
class TitleTokens:
    """Preprocessed title: unique keyword set plus the pre-dedup token order."""

    keywords: frozenset[str]
    ordered: tuple[str, ...]


def preprocess_title(title: str, stops: StopWordList) -> TitleTokens:
    """Split, stop-filter, and stem a question title.

    Stop words are filtered again after stemming so no emitted keyword is
    a stop word (e.g. "willing" stems to "will").
    """
    tokens = remove_stop_words(normalize_and_split(title), stops)
    stemmed = [s for s in (stem(tok) for tok in tokens) if s and s not in stops]
    return TitleTokens(keywords=frozenset(stemmed), ordered=tuple(stemmed))


def extract_query_keywords(
    query: str,
    mode: QueryTermMode,
    stops: StopWordList,
    tagger: postag.PosTagger | None = None,
) -> set[str]:
    """Turn a search query into its keyword set.

    Unless ``mode`` is all-terms, tokens are part-of-speech filtered before
    stop-word removal and stemming (taggers see the full token sequence).
    A failing tagger degrades to all-terms with a warning instead of
    aborting the query.
    """
    tokens = normalize_and_split(query)
    if mode is not QueryTermMode.ALL_TERMS:
        try:
            tokens = _pos_filter(tokens, mode, tagger)
        except Exception as exc:
            log.warning("POS tagger unavailable (%s); falling back to all-terms", exc)
    return set(preprocess_title(" ".join(tokens), stops).keywords)


def _pos_filter(
    tokens: Sequence[str], mode: QueryTermMode, tagger: postag.PosTagger | None
) -> list[str]:
    if tagger is None:
        tagger = postag.default_tagger()
    tags = tagger.tag(tokens)
    if len(tags) != len(tokens):
        raise TaggerUnavailableError(
            f"tagger returned {len(tags)} tags for {len(tokens)} tokens"
        )
    wanted = {
        QueryTermMode.NOUN_ONLY: {postag.NOUN},
        QueryTermMode.VERB_ONLY: {postag.VERB},
        QueryTermMode.NOUN_AND_VERB: {postag.NOUN, postag.VERB},
    }[mode]
    return [tok for tok, tag in zip(tokens, tags) if tag in wanted]
