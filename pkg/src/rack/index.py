"""Token-API association index and keyword context index.

Built from (title, accepted-answer) pairs: a keyword and an API class
co-occur when the keyword appears in a document's title and the class in
its accepted answer; context counts pair up keywords from the same title.
Both counts are document-level (at most one increment per document).

Indices are immutable after construction and safe for any number of
concurrent readers. Merging is commutative count addition, so corpora may
be ingested in parallel chunks and merged.
"""

from __future__ import annotations

import hashlib
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Mapping, Union

from .codeextract import extract_answer_apis
from .corpus import CorpusDocument, MalformedDocument, document_from_obj
from .errors import IndexChecksumError, IndexFormatError, RackIOError
from .textprep import StopWordList, preprocess_title

FORMAT_VERSION = "1"

_META_FILE = "meta.tsv"
_ASSOC_FILE = "assoc.tsv"
_CONTEXT_FILE = "context.tsv"


@dataclass(frozen=True)
class BuildConfig:
    """Everything that influences index contents."""

    stops: StopWordList
    whitelist: frozenset[str] | None = None
    min_count: int = 1

    def fingerprint(self) -> str:
        """Stable hash of the effective build configuration."""
        digest = hashlib.sha256()
        digest.update("\n".join(sorted(self.stops.entries)).encode("utf-8"))
        digest.update(b"\x00")
        if self.whitelist is not None:
            digest.update("\n".join(sorted(self.whitelist)).encode("utf-8"))
        digest.update(b"\x00")
        digest.update(str(self.min_count).encode("ascii"))
        return digest.hexdigest()


def _sorted_assoc(counts: Mapping[str, Mapping[str, int]]) -> dict[str, tuple[tuple[str, int], ...]]:
    return {
        kw: tuple(sorted(apis.items(), key=lambda item: (-item[1], item[0])))
        for kw, apis in counts.items()
        if apis
    }


class AssociationIndex:
    """keyword -> API class co-occurrence counts, sorted for ranking.

    Per-keyword candidate lists are ordered by descending count, ties
    broken by ascending class name, so rank truncation is deterministic.
    """

    def __init__(self, assoc: dict[str, tuple[tuple[str, int], ...]], doc_count: int):
        self._assoc = assoc
        self.doc_count = doc_count

    @classmethod
    def from_counts(
        cls, counts: Mapping[str, Mapping[str, int]], doc_count: int
    ) -> "AssociationIndex":
        return cls(_sorted_assoc(counts), doc_count)

    def candidates(self, keyword: str) -> list[tuple[str, int]]:
        """Full sorted association list for a keyword (empty if unknown)."""
        return list(self._assoc.get(keyword, ()))

    def top_candidates(self, keyword: str, delta: int) -> list[tuple[str, int]]:
        """First ``delta`` entries of the keyword's association list."""
        if delta < 1:
            raise ValueError(f"delta must be >= 1, got {delta}")
        return list(self._assoc.get(keyword, ())[:delta])

    def keywords(self) -> list[str]:
        return sorted(self._assoc)

    @property
    def vocabulary_size(self) -> int:
        return len(self._assoc)

    @property
    def association_count(self) -> int:
        return sum(len(apis) for apis in self._assoc.values())

    def items(self):
        return self._assoc.items()

    def merge(self, other: "AssociationIndex") -> "AssociationIndex":
        counts: dict[str, Counter] = defaultdict(Counter)
        for index in (self, other):
            for kw, apis in index.items():
                counts[kw].update(dict(apis))
        return AssociationIndex.from_counts(counts, self.doc_count + other.doc_count)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AssociationIndex):
            return NotImplemented
        return self.doc_count == other.doc_count and self._assoc == other._assoc

    def __repr__(self) -> str:
        return (
            f"AssociationIndex(keywords={self.vocabulary_size}, "
            f"associations={self.association_count}, docs={self.doc_count})"
        )


class ContextIndex:
    """Symmetric keyword co-occurrence counts from question titles."""

    def __init__(self, ctx: dict[str, dict[str, int]]):
        self._ctx = ctx

    @classmethod
    def from_pair_counts(cls, pairs: Mapping[tuple[str, str], int]) -> "ContextIndex":
        ctx: dict[str, dict[str, int]] = defaultdict(dict)
        for (a, b), count in pairs.items():
            if a == b:
                raise ValueError(f"self-pair {a!r} not allowed in context index")
            ctx[a][b] = ctx[a].get(b, 0) + count
            ctx[b][a] = ctx[b].get(a, 0) + count
        return cls(dict(ctx))

    def vector(self, keyword: str) -> Mapping[str, int]:
        """Co-occurrence count vector of a keyword (empty if unknown)."""
        return self._ctx.get(keyword, {})

    def keywords(self) -> list[str]:
        return sorted(self._ctx)

    def pairs(self) -> list[tuple[str, str, int]]:
        """Each unordered pair once, smaller keyword first, sorted."""
        out = []
        for a, neighbors in self._ctx.items():
            for b, count in neighbors.items():
                if a < b:
                    out.append((a, b, count))
        out.sort()
        return out

    def merge(self, other: "ContextIndex") -> "ContextIndex":
        pairs: Counter = Counter()
        for index in (self, other):
            for a, b, count in index.pairs():
                pairs[(a, b)] += count
        return ContextIndex.from_pair_counts(pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ContextIndex):
            return NotImplemented
        return self._ctx == other._ctx

    def __repr__(self) -> str:
        return f"ContextIndex(keywords={len(self._ctx)})"


@dataclass
class IngestReport:
    """What happened while consuming a corpus stream."""

    ingested: int = 0
    skipped: Counter = field(default_factory=Counter)

    @property
    def total_skipped(self) -> int:
        return sum(self.skipped.values())


@dataclass
class BuildResult:
    assoc: AssociationIndex
    ctx: ContextIndex
    report: IngestReport


def build_index(
    documents: Iterable[Union[CorpusDocument, MalformedDocument, dict]],
    config: BuildConfig,
) -> BuildResult:
    """Build both indices from a corpus stream.

    Bad records are skipped and counted, never fatal. Documents whose
    answer yields no API classes still contribute title co-occurrences to
    the context index.
    """
    assoc_counts: dict[str, Counter] = defaultdict(Counter)
    pair_counts: Counter = Counter()
    report = IngestReport()
    seen_ids: set[str] = set()
    doc_count = 0

    for item in documents:
        if isinstance(item, MalformedDocument):
            report.skipped[item.reason] += 1
            continue
        if isinstance(item, dict):
            item = document_from_obj(item)
            if isinstance(item, MalformedDocument):
                report.skipped[item.reason] += 1
                continue
        if item.id in seen_ids:
            report.skipped["duplicate-id"] += 1
            continue
        seen_ids.add(item.id)

        keywords = preprocess_title(item.title, config.stops).keywords
        apis = extract_answer_apis(item.accepted_answer_html, config.whitelist)
        for kw in keywords:
            counter = assoc_counts[kw]
            for api in apis:
                counter[api] += 1
        for a, b in combinations(sorted(keywords), 2):
            pair_counts[(a, b)] += 1

        doc_count += 1
        report.ingested += 1

    if config.min_count > 1:
        assoc_counts = {
            kw: Counter({api: n for api, n in apis.items() if n >= config.min_count})
            for kw, apis in assoc_counts.items()
        }

    assoc = AssociationIndex.from_counts(assoc_counts, doc_count)
    ctx = ContextIndex.from_pair_counts(pair_counts)
    return BuildResult(assoc=assoc, ctx=ctx, report=report)


def _sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def save_index(
    assoc: AssociationIndex,
    ctx: ContextIndex,
    path: str | Path,
    config_hash: str = "",
) -> None:
    """Write both indices to a directory as sorted, byte-stable TSV."""
    directory = Path(path)
    try:
        directory.mkdir(parents=True, exist_ok=True)

        assoc_rows = []
        for kw in sorted(dict(assoc.items())):
            for api, count in assoc.candidates(kw):
                assoc_rows.append((kw, api, count))
        assoc_rows.sort(key=lambda row: (row[0], row[1]))
        assoc_text = "".join(f"{kw}\t{api}\t{count}\n" for kw, api, count in assoc_rows)

        context_text = "".join(f"{a}\t{b}\t{count}\n" for a, b, count in ctx.pairs())

        assoc_bytes = assoc_text.encode("utf-8")
        context_bytes = context_text.encode("utf-8")
        meta = {
            "format_version": FORMAT_VERSION,
            "doc_count": str(assoc.doc_count),
            "config_hash": config_hash,
            "assoc_sha256": _sha256_hex(assoc_bytes),
            "context_sha256": _sha256_hex(context_bytes),
        }
        meta_text = "".join(f"{key}\t{meta[key]}\n" for key in sorted(meta))

        (directory / _ASSOC_FILE).write_bytes(assoc_bytes)
        (directory / _CONTEXT_FILE).write_bytes(context_bytes)
        (directory / _META_FILE).write_bytes(meta_text.encode("utf-8"))
    except OSError as exc:
        raise RackIOError(f"cannot write index to {directory}: {exc}") from exc


@dataclass
class LoadedIndex:
    assoc: AssociationIndex
    ctx: ContextIndex
    meta: dict[str, str]


def load_index(path: str | Path) -> LoadedIndex:
    """Load an index directory, verifying version and checksums."""
    directory = Path(path)

    def read_bytes(name: str) -> bytes:
        try:
            return (directory / name).read_bytes()
        except FileNotFoundError as exc:
            raise IndexFormatError(f"index at {directory} is missing {name}") from exc
        except OSError as exc:
            raise RackIOError(f"cannot read {directory / name}: {exc}") from exc

    meta: dict[str, str] = {}
    for lineno, line in enumerate(read_bytes(_META_FILE).decode("utf-8").splitlines(), 1):
        parts = line.split("\t")
        if len(parts) != 2:
            raise IndexFormatError(f"{_META_FILE}:{lineno}: expected 2 columns")
        meta[parts[0]] = parts[1]

    version = meta.get("format_version")
    if version != FORMAT_VERSION:
        raise IndexFormatError(
            f"unsupported index format version {version!r} (expected {FORMAT_VERSION})"
        )
    try:
        doc_count = int(meta["doc_count"])
    except (KeyError, ValueError) as exc:
        raise IndexFormatError(f"{_META_FILE}: bad or missing doc_count") from exc

    assoc_bytes = read_bytes(_ASSOC_FILE)
    context_bytes = read_bytes(_CONTEXT_FILE)
    for name, blob, key in (
        (_ASSOC_FILE, assoc_bytes, "assoc_sha256"),
        (_CONTEXT_FILE, context_bytes, "context_sha256"),
    ):
        expected = meta.get(key)
        if expected and _sha256_hex(blob) != expected:
            raise IndexChecksumError(f"{name} does not match its recorded checksum")

    assoc_counts: dict[str, dict[str, int]] = defaultdict(dict)
    for lineno, line in enumerate(assoc_bytes.decode("utf-8").splitlines(), 1):
        kw, api, count = _parse_count_row(_ASSOC_FILE, lineno, line)
        assoc_counts[kw][api] = count

    pair_counts: dict[tuple[str, str], int] = {}
    for lineno, line in enumerate(context_bytes.decode("utf-8").splitlines(), 1):
        a, b, count = _parse_count_row(_CONTEXT_FILE, lineno, line)
        if a >= b:
            raise IndexFormatError(
                f"{_CONTEXT_FILE}:{lineno}: pair not stored in canonical order"
            )
        pair_counts[(a, b)] = count

    return LoadedIndex(
        assoc=AssociationIndex.from_counts(assoc_counts, doc_count),
        ctx=ContextIndex.from_pair_counts(pair_counts),
        meta=meta,
    )


def _parse_count_row(filename: str, lineno: int, line: str) -> tuple[str, str, int]:
    parts = line.split("\t")
    if len(parts) != 3:
        raise IndexFormatError(f"{filename}:{lineno}: expected 3 columns")
    try:
        count = int(parts[2])
    except ValueError as exc:
        raise IndexFormatError(f"{filename}:{lineno}: count is not an integer") from exc
    if count < 1:
        raise IndexFormatError(f"{filename}:{lineno}: count must be positive")
    return parts[0], parts[1], count
