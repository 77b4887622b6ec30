"""Evaluation harness: gold sets, ranking metrics, experiment sweeps.

Metrics take per-query ranked API lists aligned with gold entries.
Accuracy, MAP, and recall are percentages in [0, 100]; MRR is in [0, 1].
Gold matching is an exact, case-sensitive class-name comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import EmptyQueryError, GoldSetError, RackIOError
from .index import AssociationIndex, ContextIndex
from .postag import PosTagger
from .ranker import RankerConfig, rank_apis
from .textprep import QueryTermMode, StopWordList, extract_query_keywords


@dataclass(frozen=True)
class GoldEntry:
    """A query with the API classes considered relevant for it."""

    query: str
    relevant: frozenset[str]

    def __post_init__(self) -> None:
        if not self.query.strip():
            raise ValueError("gold entry query must be non-empty")
        if not self.relevant:
            raise ValueError("gold entry must list at least one relevant API")


def load_gold(path: str | Path) -> list[GoldEntry]:
    """Read a TSV gold set: ``query<TAB>Api1,Api2`` with ``#`` comments."""
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise RackIOError(f"cannot read gold set {path}: {exc}") from exc
    entries = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split("\t")
        if len(parts) != 2:
            raise GoldSetError(f"{path}:{lineno}: expected 'query<TAB>apis'")
        names = frozenset(name.strip() for name in parts[1].split(",") if name.strip())
        if not names:
            raise GoldSetError(f"{path}:{lineno}: no relevant APIs listed")
        entries.append(GoldEntry(query=parts[0], relevant=names))
    if not entries:
        raise GoldSetError(f"{path}: gold set is empty")
    return entries


def _check_aligned(results: Sequence[Sequence[str]], gold: Sequence[GoldEntry]) -> None:
    if not gold:
        raise ValueError("gold set must not be empty")
    if len(results) != len(gold):
        raise ValueError(f"{len(results)} result lists for {len(gold)} gold entries")


def top_k_accuracy(
    results: Sequence[Sequence[str]], gold: Sequence[GoldEntry], k: int
) -> float:
    """Percentage of queries with >= 1 relevant API in the top K."""
    _check_aligned(results, gold)
    hits = sum(
        1 for ranked, entry in zip(results, gold) if set(ranked[:k]) & entry.relevant
    )
    return 100.0 * hits / len(gold)


def mrr_at_k(results: Sequence[Sequence[str]], gold: Sequence[GoldEntry], k: int) -> float:
    """Mean inverse rank (1-based) of the first relevant API in the top K."""
    _check_aligned(results, gold)
    total = 0.0
    for ranked, entry in zip(results, gold):
        for position, api in enumerate(ranked[:k], 1):
            if api in entry.relevant:
                total += 1.0 / position
                break
    return total / len(gold)


def map_at_k(results: Sequence[Sequence[str]], gold: Sequence[GoldEntry], k: int) -> float:
    """Mean average precision over the top K, as a percentage.

    Per query, precision is sampled at each relevant item's rank and
    averaged over the relevant items found; a query with no relevant item
    in the top K scores zero.
    """
    _check_aligned(results, gold)
    total = 0.0
    for ranked, entry in zip(results, gold):
        found = 0
        precision_sum = 0.0
        for position, api in enumerate(ranked[:k], 1):
            if api in entry.relevant:
                found += 1
                precision_sum += found / position
        if found:
            total += precision_sum / found
    return 100.0 * total / len(gold)


def mean_recall_at_k(
    results: Sequence[Sequence[str]], gold: Sequence[GoldEntry], k: int
) -> float:
    """Mean fraction of each query's gold APIs found in the top K, as a percentage."""
    _check_aligned(results, gold)
    total = 0.0
    for ranked, entry in zip(results, gold):
        total += len(set(ranked[:k]) & entry.relevant) / len(entry.relevant)
    return 100.0 * total / len(gold)


@dataclass
class MetricsRow:
    accuracy: float
    mrr: float
    map: float
    recall: float


@dataclass
class MetricsReport:
    """All four metrics for one query-term mode across the requested Ks."""

    mode: str
    rows: dict[int, MetricsRow]
    query_count: int
    failures: list[str] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "mode": self.mode,
            "query_count": self.query_count,
            "failures": list(self.failures),
            "metrics": {
                str(k): {
                    "top_k_accuracy": row.accuracy,
                    "mrr": row.mrr,
                    "map": row.map,
                    "mean_recall": row.recall,
                }
                for k, row in self.rows.items()
            },
        }


def compute_rows(
    results: Sequence[Sequence[str]], gold: Sequence[GoldEntry], ks: Iterable[int]
) -> dict[int, MetricsRow]:
    return {
        k: MetricsRow(
            accuracy=top_k_accuracy(results, gold, k),
            mrr=mrr_at_k(results, gold, k),
            map=map_at_k(results, gold, k),
            recall=mean_recall_at_k(results, gold, k),
        )
        for k in ks
    }


def run_experiment(
    assoc: AssociationIndex,
    ctx: ContextIndex,
    gold: Sequence[GoldEntry],
    cfg: RankerConfig,
    modes: Sequence[QueryTermMode],
    ks: Sequence[int],
    stops: StopWordList,
    tagger: PosTagger | None = None,
) -> list[MetricsReport]:
    """Rank every gold query under each mode and score all metrics.

    A query that fails to rank (e.g. all stop words) is recorded in the
    report and counts as producing no recommendations.
    """
    if not gold:
        raise ValueError("gold set must not be empty")
    if not ks:
        raise ValueError("at least one K is required")
    depth = max(max(ks), cfg.top_k)
    run_cfg = RankerConfig(delta=cfg.delta, gamma=cfg.gamma, top_k=depth)

    reports = []
    for mode in modes:
        results: list[list[str]] = []
        failures: list[str] = []
        for entry in gold:
            keywords = extract_query_keywords(entry.query, mode, stops, tagger)
            try:
                ranked = rank_apis(assoc, ctx, keywords, run_cfg)
            except EmptyQueryError:
                failures.append(entry.query)
                results.append([])
                continue
            results.append([scored.api for scored in ranked])
        reports.append(
            MetricsReport(
                mode=mode.value,
                rows=compute_rows(results, gold, ks),
                query_count=len(gold),
                failures=failures,
            )
        )
    return reports


def format_report_table(report: MetricsReport) -> str:
    """Human-readable metric table, metrics as rows and Ks as columns."""
    ks = sorted(report.rows)
    lines = [
        f"# mode: {report.mode} (queries: {report.query_count}"
        + (f", failed: {len(report.failures)}" if report.failures else "")
        + ")"
    ]
    header = ["Metric"] + [f"Top-{k}" for k in ks]
    lines.append("\t".join(header))
    lines.append(
        "\t".join(["Top-K Accuracy (%)"] + [f"{report.rows[k].accuracy:.2f}" for k in ks])
    )
    lines.append("\t".join(["MRR@K"] + [f"{report.rows[k].mrr:.4f}" for k in ks]))
    lines.append("\t".join(["MAP@K (%)"] + [f"{report.rows[k].map:.2f}" for k in ks]))
    lines.append(
        "\t".join(["Mean Recall@K (%)"] + [f"{report.rows[k].recall:.2f}" for k in ks])
    )
    return "\n".join(lines)


def reports_to_json(reports: Sequence[MetricsReport]) -> str:
    return json.dumps([report.to_json_obj() for report in reports], indent=2)
