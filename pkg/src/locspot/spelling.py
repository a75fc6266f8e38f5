"""Symmetric-delete spelling correction.

Every vocabulary word is indexed under all strings reachable by
deleting up to max_edit_distance characters. Looking up a token means
generating its own deletes and intersecting, which turns the expensive
insert/substitute/transpose candidate generation into dictionary hits.
Candidates are ranked by edit distance, then frequency.
"""

from __future__ import annotations


def _deletes(word: str, depth: int) -> set[str]:
    results = set()
    frontier = {word}
    for _ in range(depth):
        next_frontier = set()
        for w in frontier:
            if len(w) <= 1:
                continue
            for i in range(len(w)):
                shorter = w[:i] + w[i + 1:]
                if shorter not in results:
                    results.add(shorter)
                    next_frontier.add(shorter)
        frontier = next_frontier
    return results


def edit_distance(a: str, b: str) -> int:
    """Damerau-Levenshtein distance (optimal string alignment)."""
    if a == b:
        return 0
    prev2: list[int] = []
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, start=1):
        row = [i] + [0] * len(b)
        for j, cb in enumerate(b, start=1):
            cost = 0 if ca == cb else 1
            row[j] = min(prev[j] + 1, row[j - 1] + 1, prev[j - 1] + cost)
            if i > 1 and j > 1 and ca == b[j - 2] and a[i - 2] == cb:
                row[j] = min(row[j], prev2[j - 2] + 1)
        prev2, prev = prev, row
    return prev[len(b)]


class SymmetricDeleteCorrector:
    """Spelling corrector over a fixed vocabulary.

    vocabulary may be a plain set (all words weight 1) or a mapping
    word -> frequency used to rank candidates.
    """

    def __init__(self, vocabulary, max_edit_distance: int = 2):
        if max_edit_distance < 1:
            raise ValueError("max_edit_distance must be >= 1")
        self.max_edit_distance = max_edit_distance
        if hasattr(vocabulary, "items"):
            self._frequencies = {w.lower(): c for w, c in vocabulary.items()}
        else:
            self._frequencies = {w.lower(): 1 for w in vocabulary}
        self._index: dict[str, set[str]] = {}
        for word in self._frequencies:
            for shadow in _deletes(word, max_edit_distance):
                self._index.setdefault(shadow, set()).add(word)

    def __contains__(self, token: str) -> bool:
        return token.lower() in self._frequencies

    def candidates(self, token: str) -> set[str]:
        """All vocabulary words within max_edit_distance of the token."""
        token = token.lower()
        pool = set()
        if token in self._frequencies:
            pool.add(token)
        pool.update(self._index.get(token, ()))
        for shadow in _deletes(token, self.max_edit_distance):
            if shadow in self._frequencies:
                pool.add(shadow)
            pool.update(self._index.get(shadow, ()))
        return {
            w for w in pool
            if edit_distance(token, w) <= self.max_edit_distance
        }

    def correct(self, token: str) -> str:
        """Best correction for an out-of-vocabulary token.

        In-vocabulary and non-alphabetic tokens come back unchanged, as
        does anything without a candidate within max_edit_distance.
        """
        lowered = token.lower()
        if lowered in self._frequencies or not lowered.isalpha():
            return token
        pool = self.candidates(lowered)
        if not pool:
            return token
        return min(
            pool,
            key=lambda w: (edit_distance(lowered, w), -self._frequencies[w], w),
        )


def correct_spelling(token, vocabulary, max_edit_distance: int = 2) -> str:
    """One-shot correction; builds a throwaway index.

    Pipelines should hold a SymmetricDeleteCorrector instead so the
    delete index is built once.
    """
    return SymmetricDeleteCorrector(vocabulary, max_edit_distance).correct(token)
