"""Gestalt (Ratcliff-Obershelp) string similarity.

The ratio is 2*M / (len(a) + len(b)) where M counts the characters covered by
the recursive longest-matching-block decomposition: take the longest common
substring (ties resolved toward the earliest start in ``a``, then in ``b``),
then recurse on the fragments to its left and to its right.

No junk or auto-junk heuristics are applied: anchor texts and annotations are
short, and the result must be deterministic. Comparison is case- and
whitespace-sensitive; callers normalize if they want to.
"""
from __future__ import annotations


def _longest_match(
    a: str, b: str, alo: int, ahi: int, blo: int, bhi: int
) -> tuple[int, int, int]:
    """Longest block a[i:i+k] == b[j:j+k] inside the given windows.

    Of all maximal blocks, returns the one starting earliest in ``a`` and,
    among those, earliest in ``b``.
    """
    b_index: dict[str, list[int]] = {}
    for j in range(blo, bhi):
        b_index.setdefault(b[j], []).append(j)

    besti, bestj, bestsize = alo, blo, 0
    # j2len[j] = length of the longest block ending at a[i-1], b[j]
    j2len: dict[int, int] = {}
    for i in range(alo, ahi):
        newj2len: dict[int, int] = {}
        for j in b_index.get(a[i], ()):
            k = newj2len[j] = j2len.get(j - 1, 0) + 1
            if k > bestsize:
                besti, bestj, bestsize = i - k + 1, j - k + 1, k
        j2len = newj2len
    return besti, bestj, bestsize


def _matched_chars(a: str, b: str, alo: int, ahi: int, blo: int, bhi: int) -> int:
    if alo >= ahi or blo >= bhi:
        return 0
    i, j, k = _longest_match(a, b, alo, ahi, blo, bhi)
    if k == 0:
        return 0
    return (
        k
        + _matched_chars(a, b, alo, i, blo, j)
        + _matched_chars(a, b, i + k, ahi, j + k, bhi)
    )


def similarity(a: str, b: str) -> float:
    """Similarity ratio in [0, 1]; two empty strings compare as 1."""
    total = len(a) + len(b)
    if total == 0:
        return 1.0
    return 2.0 * _matched_chars(a, b, 0, len(a), 0, len(b)) / total


def check_similarity(a: str, b: str, threshold: float) -> bool:
    """True when similarity(a, b) meets the threshold."""
    return similarity(a, b) >= threshold
