"""Independent reference implementations used as test oracles.

Everything here is written straight from the definitions (brute-force
enumeration, naive counting) and deliberately shares no code with the
package kernels it checks.
"""

from __future__ import annotations

import math
from collections import Counter
from typing import Sequence


def jaro_reference(a: str, b: str) -> float:
    """Direct-definition Jaro: flag matches in a window, count transpositions."""
    if not a and not b:
        return 1.0
    if not a or not b:
        return 0.0
    window = max(len(a), len(b)) // 2 - 1
    if window < 0:
        window = 0
    taken = [False] * len(b)
    a_matched: list[str] = []
    b_positions: list[int] = []
    for i, ch in enumerate(a):
        lo = max(0, i - window)
        hi = min(len(b) - 1, i + window)
        for j in range(lo, hi + 1):
            if not taken[j] and b[j] == ch:
                taken[j] = True
                a_matched.append(ch)
                b_positions.append(j)
                break
    m = len(a_matched)
    if m == 0:
        return 0.0
    b_matched = [b[j] for j in sorted(b_positions)]
    out_of_order = sum(1 for x, y in zip(a_matched, b_matched) if x != y)
    t = out_of_order // 2
    return (m / len(a) + m / len(b) + (m - t) / m) / 3.0


def jaro_winkler_reference(a: str, b: str) -> float:
    j = jaro_reference(a, b)
    prefix = 0
    for x, y in zip(a[:4], b[:4]):
        if x != y:
            break
        prefix += 1
    return j + prefix * 0.1 * (1.0 - j)


def lcs_length_brute(a: Sequence[str], b: Sequence[str]) -> int:
    """O(n^2 m) enumeration: every substring of a, scanned for in b."""
    best = 0
    n, m = len(a), len(b)
    for i in range(n):
        for j in range(i + 1, n + 1):
            sub = list(a[i:j])
            length = j - i
            found = any(list(b[k : k + length]) == sub for k in range(m - length + 1))
            if found and length > best:
                best = length
    return best


def lcs_norm_brute(a: Sequence[str], b: Sequence[str], denominator: str = "min") -> float:
    if not a or not b:
        return 0.0
    length = lcs_length_brute(a, b)
    if denominator == "min":
        return length / float(min(len(a), len(b)))
    if denominator == "max":
        return length / float(max(len(a), len(b)))
    return length / ((len(a) + len(b)) / 2.0)


def ngrams_naive(tokens: Sequence[str], n: int) -> Counter:
    grams: Counter = Counter()
    for i in range(len(tokens)):
        gram = tuple(tokens[i : i + n])
        if len(gram) == n:
            grams[gram] += 1
    return grams


def rouge_n_naive(candidate: Sequence[str], references: Sequence[Sequence[str]], n: int) -> float:
    cand = ngrams_naive(candidate, n)
    matched = 0
    total = 0
    for ref in references:
        ref_grams = ngrams_naive(ref, n)
        total += sum(ref_grams.values())
        for gram, count in ref_grams.items():
            matched += min(count, cand.get(gram, 0))
    return matched / total


def skip_bigrams_naive(tokens: Sequence[str], max_skip: int) -> Counter:
    grams: Counter = Counter()
    for i in range(len(tokens)):
        for j in range(i + 1, len(tokens)):
            if j - i - 1 <= max_skip:
                grams[(tokens[i], tokens[j])] += 1
    return grams


def rouge_su4_naive(candidate: Sequence[str], references: Sequence[Sequence[str]]) -> float:
    def su(tokens: Sequence[str]) -> Counter:
        grams = skip_bigrams_naive(tokens, 4)
        grams.update(ngrams_naive(tokens, 1))
        return grams

    cand = su(candidate)
    matched = 0
    total = 0
    for ref in references:
        ref_grams = su(ref)
        total += sum(ref_grams.values())
        for gram, count in ref_grams.items():
            matched += min(count, cand.get(gram, 0))
    return matched / total


def cosine_reference(a: Sequence[str], b: Sequence[str]) -> float:
    ca, cb = Counter(a), Counter(b)
    dot = sum(ca[t] * cb[t] for t in ca)
    na = math.sqrt(sum(v * v for v in ca.values()))
    nb = math.sqrt(sum(v * v for v in cb.values()))
    if na == 0.0 or nb == 0.0:
        return 0.0
    return dot / (na * nb)


def jw_extended_reference(sentence_tokens: Sequence[str], query_tokens: Sequence[str]) -> float:
    """Greedy without-replacement matching over distinct sentence terms."""
    if not query_tokens:
        return 0.0
    pool: list[str] = []
    for t in sentence_tokens:
        if t not in pool:
            pool.append(t)
    if not pool:
        return 0.0
    total = 0.0
    for q in query_tokens:
        if not pool:
            break
        scores = [jaro_winkler_reference(q, term) for term in pool]
        best = max(scores)
        total += best
        pool.pop(scores.index(best))
    return total / len(query_tokens)


def smmr_reference(
    sentence_tokens: Sequence[str],
    query_tokens: Sequence[str],
    history: Sequence[Sequence[str]],
    alpha: float,
    nf: float,
) -> float:
    relevance = alpha * cosine_reference(sentence_tokens, query_tokens) + (
        1.0 - alpha
    ) * jw_extended_reference(sentence_tokens, query_tokens)
    worst = max((lcs_norm_brute(sentence_tokens, h) for h in history), default=0.0)
    penalty = 1.0 if nf == 0.0 else (1.0 - worst) ** nf
    return relevance * penalty
