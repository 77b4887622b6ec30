"""Corpus documents and their JSON Lines serialization.

One document per line with fields ``id``, ``title``,
``accepted_answer_html``, ``tags``. Readers never raise on bad lines;
they yield :class:`MalformedDocument` markers so ingestion can count and
skip them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Union

from .errors import RackIOError


@dataclass(frozen=True)
class CorpusDocument:
    """A question title paired with its accepted answer's HTML."""

    id: str
    title: str
    accepted_answer_html: str
    tags: tuple[str, ...] = ()

    def to_json_obj(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "accepted_answer_html": self.accepted_answer_html,
            "tags": list(self.tags),
        }


@dataclass(frozen=True)
class MalformedDocument:
    """Placeholder for an input record that could not become a document."""

    reason: str


def document_from_obj(obj) -> Union[CorpusDocument, MalformedDocument]:
    """Validate one parsed JSONL record."""
    if not isinstance(obj, dict):
        return MalformedDocument("not-an-object")
    for field in ("id", "title", "accepted_answer_html"):
        if field not in obj:
            return MalformedDocument(f"missing-field:{field}")
    title = obj["title"]
    if not isinstance(title, str) or not title.strip():
        return MalformedDocument("empty-title")
    html = obj["accepted_answer_html"]
    if not isinstance(html, str):
        return MalformedDocument("bad-field:accepted_answer_html")
    raw_tags = obj.get("tags", [])
    if not isinstance(raw_tags, (list, tuple)):
        return MalformedDocument("bad-field:tags")
    return CorpusDocument(
        id=str(obj["id"]),
        title=title,
        accepted_answer_html=html,
        tags=tuple(str(t) for t in raw_tags),
    )


def read_jsonl(path: str | Path) -> Iterator[Union[CorpusDocument, MalformedDocument]]:
    """Stream documents from a JSONL corpus file."""
    try:
        handle = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise RackIOError(f"cannot open corpus {path}: {exc}") from exc
    with handle:
        for line in handle:
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                yield MalformedDocument("invalid-json")
                continue
            yield document_from_obj(obj)


def write_jsonl(documents: Iterable[CorpusDocument], path: str | Path) -> int:
    """Write documents as JSONL; returns the number written."""
    count = 0
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as handle:
            for doc in documents:
                json.dump(doc.to_json_obj(), handle, ensure_ascii=False, sort_keys=True)
                handle.write("\n")
                count += 1
    except OSError as exc:
        raise RackIOError(f"cannot write corpus {path}: {exc}") from exc
    return count
