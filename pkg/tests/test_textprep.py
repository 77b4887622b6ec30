"""Text preparation: splitting, stop words, titles, query keywords."""

import logging
import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rack.textprep import (
    QueryTermMode,
    StopWordList,
    extract_query_keywords,
    normalize_and_split,
    preprocess_title,
    remove_stop_words,
    stem,
)


class TestNormalizeAndSplit:
    def test_title_with_punctuation(self):
        assert normalize_and_split("Generating MD5 hash?") == ["generating", "md5", "hash"]

    def test_empty(self):
        assert normalize_and_split("") == []

    def test_mixed_separators(self):
        assert normalize_and_split("a-b_c") == ["a", "b", "c"]

    def test_every_ascii_punctuation_separates(self):
        for mark in string.punctuation:
            assert normalize_and_split(f"a{mark}b") == ["a", "b"], repr(mark)

    def test_order_preserved(self):
        assert normalize_and_split("Send an email, now!") == ["send", "an", "email", "now"]

    def test_digits_kept(self):
        assert normalize_and_split("md5 sha256") == ["md5", "sha256"]


class TestStopWords:
    def test_paper_example(self, stops):
        assert remove_stop_words(["how", "to", "send", "email"], stops) == ["send", "email"]

    def test_empty(self, stops):
        assert remove_stop_words([], stops) == []

    def test_all_stop_words(self, stops):
        assert remove_stop_words(["the", "and", "some"], stops) == []

    def test_membership_case_insensitive(self, stops):
        assert "THE" in stops
        assert "the" in stops

    def test_from_file_with_comments(self, tmp_path):
        path = tmp_path / "stops.txt"
        path.write_text("# comment\nfoo\nBAR  # trailing\n\n", encoding="utf-8")
        custom = StopWordList.from_file(path)
        assert "foo" in custom
        assert "bar" in custom
        assert "baz" not in custom

    def test_empty_list_rejected(self):
        with pytest.raises(ValueError):
            StopWordList(entries=frozenset())


class TestStem:
    def test_paper_examples(self):
        assert stem("sending") == "send"
        assert stem("md5") == "md5"
        assert stem("generating") == "generat"


class TestPreprocessTitle:
    def test_paper_title(self, stops):
        result = preprocess_title("Generating MD5 hash of a Java string", stops)
        assert result.keywords == {"generat", "md5", "hash", "java", "string"}
        assert result.ordered == ("generat", "md5", "hash", "java", "string")

    def test_empty(self, stops):
        result = preprocess_title("", stops)
        assert result.keywords == frozenset()
        assert result.ordered == ()

    def test_all_stop_words(self, stops):
        assert preprocess_title("The the THE", stops).keywords == frozenset()

    def test_ordered_keeps_duplicates(self, stops):
        result = preprocess_title("parse html parse", stops)
        assert result.ordered == ("pars", "html", "pars")
        assert result.keywords == {"pars", "html"}

    def test_stem_colliding_with_stop_word_dropped(self, stops):
        # "willing" stems to "will", which is a stop word
        assert "will" in stops
        assert preprocess_title("willing helper", stops).keywords == {"helper"}


class TestQueryTermMode:
    def test_round_trip(self):
        for mode in QueryTermMode:
            assert QueryTermMode.from_string(mode.value) is mode

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            QueryTermMode.from_string("adjectives")


class _BrokenTagger:
    def tag(self, tokens):
        raise RuntimeError("model file missing")


class _ShortTagger:
    def tag(self, tokens):
        return []


class TestExtractQueryKeywords:
    def test_paper_query_nouns_and_verbs(self, stops):
        keywords = extract_query_keywords(
            "html parser in Java", QueryTermMode.NOUN_AND_VERB, stops
        )
        assert keywords == {"html", "parser", "java"}

    def test_all_terms_equals_title_pipeline(self, stops):
        query = "How do I convert a String to an int in Java?"
        assert extract_query_keywords(query, QueryTermMode.ALL_TERMS, stops) == set(
            preprocess_title(query, stops).keywords
        )

    def test_gzip_query(self, stops):
        keywords = extract_query_keywords(
            "How do I decompress a GZip file in Java?", QueryTermMode.NOUN_AND_VERB, stops
        )
        assert keywords == {"decompress", "gzip", "file", "java"}

    def test_verb_only(self, stops):
        keywords = extract_query_keywords(
            "send an email in Java", QueryTermMode.VERB_ONLY, stops
        )
        assert keywords == {"send"}

    def test_broken_tagger_falls_back_to_all_terms(self, stops, caplog):
        query = "parse html in Java"
        with caplog.at_level(logging.WARNING):
            got = extract_query_keywords(
                query, QueryTermMode.NOUN_AND_VERB, stops, tagger=_BrokenTagger()
            )
        assert got == extract_query_keywords(query, QueryTermMode.ALL_TERMS, stops)
        assert any("falling back" in record.message for record in caplog.records)

    def test_tagger_with_wrong_arity_falls_back(self, stops):
        query = "parse html in Java"
        got = extract_query_keywords(
            query, QueryTermMode.NOUN_AND_VERB, stops, tagger=_ShortTagger()
        )
        assert got == extract_query_keywords(query, QueryTermMode.ALL_TERMS, stops)


TITLES = st.text(
    alphabet=st.characters(whitelist_categories=("Ll", "Lu", "Nd", "Po", "Zs")),
    max_size=60,
)

# Realistic title vocabulary for the idempotence property. Snowball is not
# idempotent on every string (see test_snowball), so the property is
# asserted over words whose stems are stable, which covers normal usage.
_TITLE_WORDS = [
    word
    for word in (
        "How to send an email in Java the a and of generating MD5 hash "
        "convert string read file write list map sorted images resize "
        "threads download url pattern matching dates format connect "
        "database? query json parsing html extract links zip archive"
    ).split()
    if (lambda s: stem(s) == stem(stem(s)))(word.strip("?").lower())
]
REALISTIC_TITLES = st.lists(st.sampled_from(_TITLE_WORDS), max_size=8).map(" ".join)


class TestProperties:
    @given(REALISTIC_TITLES)
    def test_preprocess_idempotent(self, title):
        stops = StopWordList.default()
        first = preprocess_title(title, stops)
        second = preprocess_title(" ".join(first.ordered), stops)
        assert second.keywords == first.keywords
        assert second.ordered == first.ordered

    @given(TITLES)
    def test_mode_filtering_is_monotone(self, query):
        stops = StopWordList.default()
        everything = extract_query_keywords(query, QueryTermMode.ALL_TERMS, stops)
        for mode in QueryTermMode:
            assert extract_query_keywords(query, mode, stops) <= everything

    @given(TITLES)
    def test_keyword_shape_invariants(self, title):
        stops = StopWordList.default()
        for keyword in preprocess_title(title, stops).keywords:
            assert keyword
            assert keyword == keyword.lower()
            assert keyword not in stops
            assert not any(ch.isspace() or ch in string.punctuation for ch in keyword)
