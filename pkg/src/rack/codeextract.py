"""Island parsing of API class names out of answer HTML.

Code lives inside ``<code>`` elements; class-name candidates are the
camel-case tokens left after splitting on whitespace and punctuation.
Everything here is a pure function.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from html.parser import HTMLParser
from pathlib import Path
from typing import Iterable

# Class-name shape: initial uppercase, at least one lowercase letter,
# letters and digits only (admits File and List as well as HashSet).
_CLASS_NAME_RE = re.compile(r"[A-Z](?=[A-Za-z0-9]*[a-z])[A-Za-z0-9]*")

_TOKEN_SPLIT_RE = re.compile(r"[\W_]+")

# Java language keywords plus the true/false/null literals; these can
# never be class names.
JAVA_RESERVED = frozenset("""
abstract assert boolean break byte case catch char class const continue
default do double else enum extends final finally float for goto if
implements import instanceof int interface long native new package private
protected public return short static strictfp super switch synchronized
this throw throws transient try void volatile while
true false null
""".split())


@dataclass(frozen=True)
class CodeBlock:
    """Verbatim text content of one ``<code>`` element."""

    text: str
    answer_id: str | None = None


class _CodeTextCollector(HTMLParser):
    def __init__(self) -> None:
        super().__init__(convert_charrefs=True)
        self.blocks: list[str] = []
        self._depth = 0
        self._parts: list[str] = []

    def handle_starttag(self, tag: str, attrs) -> None:
        if tag == "code":
            if self._depth == 0:
                self._parts = []
            self._depth += 1

    def handle_endtag(self, tag: str) -> None:
        if tag == "code" and self._depth > 0:
            self._depth -= 1
            if self._depth == 0:
                self.blocks.append("".join(self._parts))

    def handle_data(self, data: str) -> None:
        if self._depth > 0:
            self._parts.append(data)

    def flush_unclosed(self) -> None:
        if self._depth > 0:
            self._depth = 0
            self.blocks.append("".join(self._parts))


def extract_code_blocks(html: str, answer_id: str | None = None) -> list[CodeBlock]:
    """Return the content of every ``<code>`` element, in document order.

    Markup nested inside ``<code>`` is flattened to its text. Input the
    parser cannot handle yields an empty list rather than an error, so a
    bad document never aborts corpus ingestion.
    """
    collector = _CodeTextCollector()
    try:
        collector.feed(html)
        collector.close()
        collector.flush_unclosed()
    except Exception:
        return []
    return [CodeBlock(text=text, answer_id=answer_id) for text in collector.blocks]


def parse_api_tokens(block: CodeBlock | str) -> set[str]:
    """Class-name candidates in one code block, deduplicated."""
    text = block.text if isinstance(block, CodeBlock) else block
    return set(_iter_candidates(text))


def count_api_tokens(block: CodeBlock | str) -> Counter[str]:
    """Class-name candidates with their occurrence counts."""
    text = block.text if isinstance(block, CodeBlock) else block
    return Counter(_iter_candidates(text))


def _iter_candidates(text: str) -> Iterable[str]:
    for token in _TOKEN_SPLIT_RE.split(text):
        if token and _CLASS_NAME_RE.fullmatch(token) and token not in JAVA_RESERVED:
            yield token


def extract_answer_apis(html: str, whitelist: Iterable[str] | None = None) -> set[str]:
    """Unique API class names referenced by an answer's code blocks.

    A whitelist (closed-set analysis mode) restricts the result to the
    given names; an empty whitelist therefore yields an empty set.
    """
    apis: set[str] = set()
    for block in extract_code_blocks(html):
        apis |= parse_api_tokens(block)
    if whitelist is not None:
        apis &= set(whitelist)
    return apis


def extract_answer_api_counts(
    html: str, whitelist: Iterable[str] | None = None
) -> Counter[str]:
    """Total occurrence counts of API class names across an answer's code."""
    counts: Counter[str] = Counter()
    for block in extract_code_blocks(html):
        counts += count_api_tokens(block)
    if whitelist is not None:
        allowed = set(whitelist)
        counts = Counter({api: n for api, n in counts.items() if api in allowed})
    return counts


def load_whitelist(path: str | Path) -> set[str]:
    """Read a one-name-per-line class whitelist (``#`` comments allowed)."""
    names = set()
    for line in Path(path).read_text("utf-8").splitlines():
        name = line.split("#", 1)[0].strip()
        if name:
            names.add(name)
    return names
