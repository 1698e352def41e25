"""Pure-Python similarity kernels.

This module is the reference implementation; the compiled extension
(`upsum._kernels`) mirrors it operation for operation, including the order
of floating-point operations, so both backends return identical values.
"""

from __future__ import annotations

from typing import Sequence

_DENOMS = ("min", "max", "mean")


def jaro(a: str, b: str) -> float:
    """Jaro similarity between two strings.

    Matching characters must agree within a window of
    floor(max(|a|,|b|)/2) - 1 positions; transpositions count half the
    matched characters that appear in a different order (floored).
    Two empty strings are identical (1.0); exactly one empty gives 0.0.
    """
    la, lb = len(a), len(b)
    if la == 0 and lb == 0:
        return 1.0
    if la == 0 or lb == 0:
        return 0.0
    window = max(la, lb) // 2 - 1
    if window < 0:
        window = 0

    a_flags = [False] * la
    b_flags = [False] * lb
    matches = 0
    for i in range(la):
        ca = a[i]
        lo = i - window if i > window else 0
        hi = i + window if i + window < lb else lb - 1
        for j in range(lo, hi + 1):
            if not b_flags[j] and b[j] == ca:
                a_flags[i] = b_flags[j] = True
                matches += 1
                break
    if matches == 0:
        return 0.0

    half = 0
    k = 0
    for i in range(la):
        if a_flags[i]:
            while not b_flags[k]:
                k += 1
            if a[i] != b[k]:
                half += 1
            k += 1
    t = half // 2
    return (matches / la + matches / lb + (matches - t) / matches) / 3.0


def jaro_winkler(a: str, b: str) -> float:
    """Jaro with the Winkler prefix bonus: j + l*0.1*(1-j), prefix l <= 4."""
    j = jaro(a, b)
    if j == 1.0:
        return 1.0
    limit = min(len(a), len(b), 4)
    prefix = 0
    while prefix < limit and a[prefix] == b[prefix]:
        prefix += 1
    return j + prefix * 0.1 * (1.0 - j)


def jw_extended(sentence_tokens: Sequence[str], query_tokens: Sequence[str]) -> float:
    """Average best Jaro-Winkler match of each query term in the sentence.

    Matching is greedy and without replacement, in query order: every query
    term consumes its best-scoring sentence term (distinct terms, first
    occurrence wins ties) and removes it from the pool; once the pool is
    exhausted, remaining query terms contribute 0. The result is the sum of
    consumed scores divided by the number of query tokens.
    """
    nq = len(query_tokens)
    if nq == 0:
        return 0.0
    pool = list(dict.fromkeys(sentence_tokens))
    if not pool:
        return 0.0
    used = [False] * len(pool)
    remaining = len(pool)
    total = 0.0
    for q in query_tokens:
        if remaining == 0:
            break
        best = -1.0
        best_i = -1
        for i, term in enumerate(pool):
            if used[i]:
                continue
            score = jaro_winkler(q, term)
            if score > best:
                best = score
                best_i = i
        used[best_i] = True
        remaining -= 1
        total += best
    return total / nq


def _denominator(n: int, m: int, denominator: str) -> float:
    if denominator == "min":
        return float(min(n, m))
    if denominator == "max":
        return float(max(n, m))
    if denominator == "mean":
        return (n + m) / 2.0
    raise ValueError(f"denominator must be one of {_DENOMS}, got {denominator!r}")


def lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    """Length of the longest contiguous run of tokens common to a and b."""
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        return 0
    # Classic suffix-table DP, single rolling row.
    row = [0] * m
    best = 0
    for i in range(n):
        ai = a[i]
        diag = 0
        for j in range(m):
            tmp = row[j]
            if ai == b[j]:
                row[j] = diag + 1
                if row[j] > best:
                    best = row[j]
            else:
                row[j] = 0
            diag = tmp
    return best


def lcs_norm(a: Sequence[str], b: Sequence[str], denominator: str = "min") -> float:
    """Longest common token run divided by the chosen length denominator."""
    n, m = len(a), len(b)
    if n == 0 or m == 0:
        if denominator not in _DENOMS:
            raise ValueError(f"denominator must be one of {_DENOMS}, got {denominator!r}")
        return 0.0
    return lcs_length(a, b) / _denominator(n, m, denominator)


def max_lcs_norm(
    tokens: Sequence[str],
    others: Sequence[Sequence[str]],
    denominator: str = "min",
) -> float:
    """Maximum lcs_norm(tokens, o) over a collection; 0.0 when it is empty."""
    best = 0.0
    for other in others:
        value = lcs_norm(tokens, other, denominator)
        if value > best:
            best = value
            if best == 1.0:
                break
    return best
