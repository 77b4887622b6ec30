"""Exploratory corpus analytics.

Raw frequency distributions of API usage per answer, package-level
coverage of a class catalog, and overlap between a search-query log and
the corpus title vocabulary. Emits histograms, means, and quantiles;
distribution fitting is left to external tools.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .codeextract import extract_answer_api_counts, extract_answer_apis
from .corpus import CorpusDocument
from .errors import RackIOError
from .textprep import StopWordList, normalize_and_split, preprocess_title

DEFAULT_QUANTILES = (0.10, 0.30, 0.80, 0.975)

# Queries containing any of these tokens are treated as code searches.
DEFAULT_QUERY_FILTER = frozenset({"java", "code", "example", "programmatically"})


@dataclass
class FrequencyDistribution:
    """Histogram over integer frequencies with its mean and quantiles."""

    histogram: dict[int, int] = field(default_factory=dict)
    mean: float = 0.0
    quantiles: dict[float, int] = field(default_factory=dict)

    @property
    def count(self) -> int:
        return sum(self.histogram.values())

    @classmethod
    def from_values(
        cls, values: Iterable[int], quantiles: Sequence[float] = DEFAULT_QUANTILES
    ) -> "FrequencyDistribution":
        histogram = Counter(values)
        n = sum(histogram.values())
        if n == 0:
            return cls()
        mean = sum(value * count for value, count in histogram.items()) / n
        quantile_map: dict[float, int] = {}
        ordered = sorted(histogram.items())
        for q in quantiles:
            cumulative = 0
            for value, count in ordered:
                cumulative += count
                if cumulative / n >= q:
                    quantile_map[q] = value
                    break
        return cls(histogram=dict(ordered), mean=mean, quantiles=quantile_map)


def api_frequency_stats(
    corpus: Iterable[CorpusDocument],
    whitelist: Iterable[str],
    distinct: bool = False,
) -> FrequencyDistribution:
    """Per-answer API usage frequencies over a closed class set.

    Counts total whitelisted token occurrences per answer, or the number
    of distinct whitelisted classes when ``distinct`` is set. Answers
    using no whitelisted class are excluded from the distribution.
    """
    allowed = set(whitelist)
    if not allowed:
        raise ValueError("whitelist must not be empty")
    values = []
    for doc in corpus:
        counts = extract_answer_api_counts(doc.accepted_answer_html, allowed)
        if not counts:
            continue
        values.append(len(counts) if distinct else sum(counts.values()))
    return FrequencyDistribution.from_values(values)


@dataclass
class PackageCoverage:
    package: str
    classes_total: int
    classes_seen: int
    class_coverage: float
    answer_fraction: float


@dataclass
class CoverageReport:
    rows: list[PackageCoverage]
    answer_count: int

    @property
    def mean_class_coverage(self) -> float:
        if not self.rows:
            return 0.0
        return sum(row.class_coverage for row in self.rows) / len(self.rows)


def package_coverage(
    corpus: Iterable[CorpusDocument], package_map: Mapping[str, Iterable[str]]
) -> CoverageReport:
    """How much of each package's class set the corpus answers use.

    Per package: the fraction of its classes seen in at least one answer,
    and the fraction of answers referencing at least one of its classes.
    """
    if not package_map:
        raise ValueError("package map must not be empty")
    catalogs = {pkg: set(classes) for pkg, classes in package_map.items()}
    seen: dict[str, set[str]] = {pkg: set() for pkg in catalogs}
    answers_using: Counter = Counter()
    answer_count = 0
    for doc in corpus:
        answer_count += 1
        apis = extract_answer_apis(doc.accepted_answer_html)
        for pkg, classes in catalogs.items():
            used = apis & classes
            if used:
                seen[pkg] |= used
                answers_using[pkg] += 1
    rows = []
    for pkg in sorted(catalogs):
        total = len(catalogs[pkg])
        found = len(seen[pkg])
        rows.append(
            PackageCoverage(
                package=pkg,
                classes_total=total,
                classes_seen=found,
                class_coverage=found / total if total else 0.0,
                answer_fraction=answers_using[pkg] / answer_count if answer_count else 0.0,
            )
        )
    return CoverageReport(rows=rows, answer_count=answer_count)


def load_package_map(path: str | Path) -> dict[str, set[str]]:
    """Read ``package<TAB>Class1,Class2`` lines (``#`` comments allowed)."""
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise RackIOError(f"cannot read package map {path}: {exc}") from exc
    mapping: dict[str, set[str]] = {}
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        parts = stripped.split("\t")
        if len(parts) != 2:
            continue
        classes = {name.strip() for name in parts[1].split(",") if name.strip()}
        if classes:
            mapping.setdefault(parts[0], set()).update(classes)
    return mapping


@dataclass(frozen=True)
class QueryLogEntry:
    query: str
    year: int | None = None


def load_query_log(path: str | Path) -> list[QueryLogEntry]:
    """One query per line, optional ``YYYY-MM-DD<TAB>`` prefix."""
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise RackIOError(f"cannot read query log {path}: {exc}") from exc
    entries = []
    for line in text.splitlines():
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        year = None
        if "\t" in stripped:
            prefix, rest = stripped.split("\t", 1)
            if len(prefix) == 10 and prefix[4] == "-" and prefix[:4].isdigit():
                year = int(prefix[:4])
                stripped = rest.strip()
        if stripped:
            entries.append(QueryLogEntry(query=stripped, year=year))
    return entries


@dataclass
class KeywordCoverageReport:
    """Overlap between query-log keywords and the corpus title vocabulary."""

    fraction: float
    matched_keywords: int
    query_keywords: int
    filtered_query_count: int
    per_year: dict[int, float]
    title_keyword_counts: FrequencyDistribution


def keyword_coverage(
    titles: Iterable[str],
    query_log: Sequence[QueryLogEntry],
    stops: StopWordList,
    filter_terms: Iterable[str] = DEFAULT_QUERY_FILTER,
) -> KeywordCoverageReport:
    """Fraction of code-search query keywords present among title tokens.

    Queries are kept when they contain any filter term; both sides then go
    through the title preprocessing pipeline. Also reports, per title, how
    many of its keywords occur in the query vocabulary.
    """
    if not query_log:
        raise ValueError("query log must not be empty")
    terms = {t.lower() for t in filter_terms}
    kept = [
        entry
        for entry in query_log
        if terms & set(normalize_and_split(entry.query))
    ]
    if not kept:
        raise ValueError(
            "no queries matched the filter terms: " + ", ".join(sorted(terms))
        )

    query_keywords: set[str] = set()
    per_year_keywords: dict[int, set[str]] = {}
    for entry in kept:
        keywords = preprocess_title(entry.query, stops).keywords
        query_keywords |= keywords
        if entry.year is not None:
            per_year_keywords.setdefault(entry.year, set()).update(keywords)

    title_vocabulary: set[str] = set()
    title_counts = []
    title_keyword_sets = []
    for title in titles:
        keywords = preprocess_title(title, stops).keywords
        title_vocabulary |= keywords
        title_keyword_sets.append(keywords)
    for keywords in title_keyword_sets:
        title_counts.append(len(keywords & query_keywords))

    matched = len(query_keywords & title_vocabulary)
    total = len(query_keywords)
    per_year = {
        year: (len(keywords & title_vocabulary) / len(keywords) if keywords else 0.0)
        for year, keywords in sorted(per_year_keywords.items())
    }
    return KeywordCoverageReport(
        fraction=matched / total if total else 0.0,
        matched_keywords=matched,
        query_keywords=total,
        filtered_query_count=len(kept),
        per_year=per_year,
        title_keyword_counts=FrequencyDistribution.from_values(title_counts),
    )
