"""Candidate collection, scoring, and top-K recommendation.

Two heuristics feed one accumulator: each query keyword's rank-based
likelihood score for the APIs it co-occurs with, and each coherent
keyword pair's context similarity for the APIs shared by both keywords'
candidate lists. Scores add up per API; near-duplicate names are dropped;
the best ``top_k`` survive.

Ranking is a pure function over immutable indices, so any number of
queries may run concurrently against one loaded index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

from .errors import EmptyQueryError
from .index import AssociationIndex, ContextIndex


@dataclass(frozen=True)
class RankerConfig:
    """Knobs of the ranking algorithm.

    ``delta`` truncates per-keyword candidate lists, ``gamma`` is the
    strict coherence threshold a keyword pair must exceed, ``top_k`` caps
    the recommendation length.
    """

    delta: int = 5
    gamma: float = 0.0
    top_k: int = 10

    def __post_init__(self) -> None:
        if self.delta < 1:
            raise ValueError(f"delta must be >= 1, got {self.delta}")
        if not -1.0 <= self.gamma <= 1.0:
            raise ValueError(f"gamma must be in [-1, 1], got {self.gamma}")
        if self.top_k < 1:
            raise ValueError(f"top_k must be >= 1, got {self.top_k}")


@dataclass
class ScoredApi:
    """One recommendation with its score breakdown.

    ``total`` always equals the sum of the per-keyword and per-pair
    parts; each part lies in (0, 1].
    """

    api: str
    total: float
    kac_parts: list[tuple[str, float]] = field(default_factory=list)
    kkc_parts: list[tuple[tuple[str, str], float]] = field(default_factory=list)


def kac_score(rank: int, list_len: int) -> float:
    """Likelihood score of the candidate at zero-based ``rank``.

    The top candidate scores exactly 1.0; scores fall linearly to
    1/list_len for the last one.
    """
    if list_len < 1:
        raise ValueError(f"list_len must be >= 1, got {list_len}")
    if not 0 <= rank < list_len:
        raise ValueError(f"rank {rank} out of range for list of {list_len}")
    # (len - rank) / len == 1 - rank/len, but divides exact integers so the
    # 5-entry ladder comes out as the exact decimals 1.0, 0.8, 0.6, 0.4, 0.2.
    return (list_len - rank) / list_len


def context_cosine(c_i: Mapping[str, int], c_j: Mapping[str, int]) -> float:
    """Cosine similarity of two sparse count vectors (0.0 if either is zero).

    Counts are integers, so the dot product and norms are exact and the
    result does not depend on key iteration order.
    """
    if not c_i or not c_j:
        return 0.0
    if len(c_j) < len(c_i):
        c_i, c_j = c_j, c_i
    dot = sum(value * c_j[key] for key, value in c_i.items() if key in c_j)
    if dot == 0:
        return 0.0
    norm_i = math.sqrt(sum(value * value for value in c_i.values()))
    norm_j = math.sqrt(sum(value * value for value in c_j.values()))
    return dot / (norm_i * norm_j)


def coherent_candidates(
    assoc: AssociationIndex,
    ctx: ContextIndex,
    k_i: str,
    k_j: str,
    cfg: RankerConfig,
) -> tuple[set[str], float]:
    """Shared candidates of a keyword pair, gated on context coherence.

    Returns the pair's coherence alongside the intersection of both
    keywords' truncated candidate lists; the intersection is empty unless
    coherence strictly exceeds ``gamma``.
    """
    if k_i == k_j:
        raise ValueError("coherence requires two distinct keywords")
    coherence = context_cosine(ctx.vector(k_i), ctx.vector(k_j))
    if coherence <= cfg.gamma:
        return set(), coherence
    apis_i = {api for api, _ in assoc.top_candidates(k_i, cfg.delta)}
    apis_j = {api for api, _ in assoc.top_candidates(k_j, cfg.delta)}
    return apis_i & apis_j, coherence


def rank_apis(
    assoc: AssociationIndex,
    ctx: ContextIndex,
    keywords: Iterable[str],
    cfg: RankerConfig | None = None,
) -> list[ScoredApi]:
    """Recommend APIs for a preprocessed keyword set.

    Keywords unknown to the index contribute nothing. Accumulation order
    is canonical (sorted keywords, then sorted pairs) so results are
    independent of input ordering and reproducible bit for bit.
    """
    cfg = cfg or RankerConfig()
    unique = sorted(set(keywords))
    if not unique:
        raise EmptyQueryError("query produced no keywords")

    accumulator: dict[str, ScoredApi] = {}

    def entry(api: str) -> ScoredApi:
        if api not in accumulator:
            accumulator[api] = ScoredApi(api=api, total=0.0)
        return accumulator[api]

    for kw in unique:
        candidates = assoc.top_candidates(kw, cfg.delta)
        for rank, (api, _count) in enumerate(candidates):
            score = kac_score(rank, len(candidates))
            scored = entry(api)
            scored.kac_parts.append((kw, score))
            scored.total += score

    for k_i, k_j in combinations(unique, 2):
        apis, coherence = coherent_candidates(assoc, ctx, k_i, k_j, cfg)
        for api in sorted(apis):
            scored = entry(api)
            scored.kkc_parts.append(((k_i, k_j), coherence))
            scored.total += coherence

    ranked = sorted(accumulator.values(), key=lambda s: (-s.total, s.api))
    return dedup_related(ranked)[: cfg.top_k]


def dedup_related(scored: list[ScoredApi]) -> list[ScoredApi]:
    """Drop likely superclass/subclass duplicates of better-ranked names.

    Scanning from the highest score down, an API is dropped when its name
    strictly contains, or is strictly contained in, an already-kept name
    (ArrayList falls to List, Elements to Element).
    """
    kept: list[ScoredApi] = []
    for candidate in scored:
        related = any(
            candidate.api != keeper.api
            and (candidate.api in keeper.api or keeper.api in candidate.api)
            for keeper in kept
        )
        if not related:
            kept.append(candidate)
    return kept
