"""Stack Exchange Posts XML to corpus JSONL conversion.

Posts dumps keep one ``<row .../>`` element per line, so rows are parsed
individually: a bad row is counted and skipped instead of aborting the
whole file. Questions must match the target tag, have enough answers,
and have an accepted answer whose body contains at least one ``<code>``
element.
"""

from __future__ import annotations

import re
import xml.etree.ElementTree as ET
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

from .codeextract import extract_code_blocks
from .corpus import CorpusDocument, write_jsonl
from .errors import RackIOError

_TAG_RE = re.compile(r"<([^<>]+)>")


@dataclass
class ConvertReport:
    questions_seen: int = 0
    kept: int = 0
    dropped: Counter = field(default_factory=Counter)
    malformed_rows: int = 0

    @property
    def total_dropped(self) -> int:
        return sum(self.dropped.values())


def parse_tags(raw: str) -> list[str]:
    """Decode a Tags attribute: ``<java><swing>`` or ``|java|swing|``."""
    raw = raw.strip()
    if not raw:
        return []
    if "<" in raw:
        return [t.strip().lower() for t in _TAG_RE.findall(raw) if t.strip()]
    return [t.strip().lower() for t in raw.split("|") if t.strip()]


def iter_post_rows(path: str | Path, report: ConvertReport) -> Iterator[dict[str, str]]:
    """Yield the attribute dict of each ``<row/>`` line, counting bad ones."""
    try:
        handle = open(path, "r", encoding="utf-8")
    except OSError as exc:
        raise RackIOError(f"cannot open posts file {path}: {exc}") from exc
    with handle:
        for line in handle:
            stripped = line.strip()
            if not stripped.startswith("<row"):
                continue
            try:
                element = ET.fromstring(stripped)
            except ET.ParseError:
                report.malformed_rows += 1
                continue
            yield dict(element.attrib)


def convert_posts_xml(
    in_path: str | Path,
    out_path: str | Path,
    tag: str = "java",
    min_answers: int = 3,
    require_code: bool = True,
) -> ConvertReport:
    """Filter a Posts dump down to (title, accepted answer) documents.

    Two passes: the first selects qualifying questions and remembers their
    accepted answer ids, the second collects those answers' bodies.
    """
    report = ConvertReport()
    tag = tag.lower()

    questions: list[dict[str, str]] = []
    wanted_answers: set[str] = set()
    for row in iter_post_rows(in_path, report):
        if row.get("PostTypeId") != "1":
            continue
        report.questions_seen += 1
        if tag and tag not in parse_tags(row.get("Tags", "")):
            report.dropped["wrong-tag"] += 1
            continue
        try:
            answers = int(row.get("AnswerCount", "0"))
        except ValueError:
            answers = 0
        if answers < min_answers:
            report.dropped["too-few-answers"] += 1
            continue
        accepted = row.get("AcceptedAnswerId", "").strip()
        if not accepted:
            report.dropped["no-accepted-answer"] += 1
            continue
        if not row.get("Title", "").strip():
            report.dropped["missing-title"] += 1
            continue
        questions.append(row)
        wanted_answers.add(accepted)

    bodies: dict[str, str] = {}
    throwaway = ConvertReport()  # malformed rows already counted in pass one
    for row in iter_post_rows(in_path, throwaway):
        if row.get("PostTypeId") == "2" and row.get("Id", "") in wanted_answers:
            bodies[row["Id"]] = row.get("Body", "")

    documents = []
    for row in questions:
        body = bodies.get(row["AcceptedAnswerId"].strip())
        if body is None:
            report.dropped["accepted-answer-missing"] += 1
            continue
        if require_code and not extract_code_blocks(body):
            report.dropped["no-code-in-answer"] += 1
            continue
        documents.append(
            CorpusDocument(
                id=row.get("Id", ""),
                title=row["Title"].strip(),
                accepted_answer_html=body,
                tags=tuple(parse_tags(row.get("Tags", ""))),
            )
        )

    report.kept = write_jsonl(documents, out_path)
    return report
