"""Independent brute-force oracle for index counts, cosines, and scores.

Works directly on raw (keyword set, api set) document descriptors, never
touching the index machinery under test. Score accumulation follows the
same canonical order as the ranker (sorted keywords, then sorted pairs)
so float totals are comparable bit for bit.
"""

from __future__ import annotations

import math
from itertools import combinations


def assoc_counts(docs):
    """keyword -> api -> number of documents containing both."""
    counts: dict[str, dict[str, int]] = {}
    for keywords, apis in docs:
        for kw in set(keywords):
            for api in set(apis):
                by_api = counts.setdefault(kw, {})
                by_api[api] = by_api.get(api, 0) + 1
    return counts


def pair_counts(docs):
    """(a, b) with a < b -> number of documents whose title has both."""
    counts: dict[tuple[str, str], int] = {}
    for keywords, _ in docs:
        for a, b in combinations(sorted(set(keywords)), 2):
            counts[(a, b)] = counts.get((a, b), 0) + 1
    return counts


def candidate_list(counts, keyword, delta):
    entries = sorted(counts.get(keyword, {}).items(), key=lambda kv: (-kv[1], kv[0]))
    return entries[:delta]


def context_vector(pairs, keyword):
    vector = {}
    for (a, b), count in pairs.items():
        if a == keyword:
            vector[b] = count
        elif b == keyword:
            vector[a] = count
    return vector


def cosine(u, v):
    if not u or not v:
        return 0.0
    dot = sum(u[key] * v[key] for key in set(u) & set(v))
    if dot == 0:
        return 0.0
    norm_u = math.sqrt(sum(x * x for x in u.values()))
    norm_v = math.sqrt(sum(x * x for x in v.values()))
    return dot / (norm_u * norm_v)


def scores(docs, keywords, delta, gamma):
    """Pre-dedup accumulated totals per API for a keyword set."""
    a_counts = assoc_counts(docs)
    p_counts = pair_counts(docs)
    totals: dict[str, float] = {}
    unique = sorted(set(keywords))
    for kw in unique:
        candidates = candidate_list(a_counts, kw, delta)
        for rank, (api, _count) in enumerate(candidates):
            totals[api] = totals.get(api, 0.0) + (len(candidates) - rank) / len(candidates)
    for k_i, k_j in combinations(unique, 2):
        coherence = cosine(context_vector(p_counts, k_i), context_vector(p_counts, k_j))
        if coherence > gamma:
            shared = {api for api, _ in candidate_list(a_counts, k_i, delta)} & {
                api for api, _ in candidate_list(a_counts, k_j, delta)
            }
            for api in sorted(shared):
                totals[api] = totals.get(api, 0.0) + coherence
    return totals
