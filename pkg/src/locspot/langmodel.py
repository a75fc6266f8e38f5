"""N-gram language model compiled from gazetteer name collocations.

Each distinct variant surface is tokenized once; unigram, bigram, and
trigram occurrences feed conditional frequency distributions. A token
sequence's probability is the order-two Markov chain

    P(w_1) * P(w_2 | w_1) * prod_{i>=3} P(w_i | w_{i-2} w_{i-1})

with every conditional estimated as the ratio of collocation counts.
There is no smoothing: a sequence containing any unseen transition has
probability exactly zero, which is the validity signal.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import DataError

_ZERO = float("-inf")  # log-space sentinel for exactly-zero probability


@dataclass
class NGramCounts:
    """Raw collocation counts recorded from the gazetteer surfaces."""

    unigram_counts: dict[str, int] = field(default_factory=dict)
    bigram_cfd: dict[str, dict[str, int]] = field(default_factory=dict)
    trigram_cfd: dict[tuple[str, str], dict[str, int]] = field(default_factory=dict)
    total_unigrams: int = 0


class CompiledModel:
    """Immutable n-gram counts, MLE probability tables, and vocabulary.

    Shareable across any number of concurrent readers once built.
    """

    def __init__(self, counts: NGramCounts):
        self.counts = counts
        self.vocabulary = frozenset(counts.unigram_counts)
        total = counts.total_unigrams
        self.unigram_p = {w: c / total for w, c in counts.unigram_counts.items()}
        # row-normalized MLE tables (each row sums to 1)
        self.cpd = {
            "bigram": {
                w1: {w2: c / sum(row.values()) for w2, c in row.items()}
                for w1, row in counts.bigram_cfd.items()
            },
            "trigram": {
                ctx: {w3: c / sum(row.values()) for w3, c in row.items()}
                for ctx, row in counts.trigram_cfd.items()
            },
        }

    def unigram_count(self, w: str) -> int:
        return self.counts.unigram_counts.get(w, 0)

    def bigram_count(self, w1: str, w2: str) -> int:
        return self.counts.bigram_cfd.get(w1, {}).get(w2, 0)

    def trigram_count(self, w1: str, w2: str, w3: str) -> int:
        return self.counts.trigram_cfd.get((w1, w2), {}).get(w3, 0)

    def log_probability(self, tokens) -> float:
        """Log of the chain probability; -inf means exactly zero."""
        tokens = list(tokens)
        if not tokens:
            raise ValueError("cannot score an empty token sequence")
        c1 = self.unigram_count(tokens[0])
        if c1 == 0:
            return _ZERO
        logp = math.log(c1) - math.log(self.counts.total_unigrams)
        if len(tokens) == 1:
            return logp
        c2 = self.bigram_count(tokens[0], tokens[1])
        if c2 == 0:
            return _ZERO
        logp += math.log(c2) - math.log(c1)
        for i in range(2, len(tokens)):
            ctx_bigram = self.bigram_count(tokens[i - 2], tokens[i - 1])
            c3 = self.trigram_count(tokens[i - 2], tokens[i - 1], tokens[i])
            if c3 == 0 or ctx_bigram == 0:
                return _ZERO
            logp += math.log(c3) - math.log(ctx_bigram)
        return logp

    def probability(self, tokens) -> float:
        logp = self.log_probability(tokens)
        return 0.0 if logp == _ZERO else math.exp(logp)


def compute_model(gazetteer) -> CompiledModel:
    """Compile the gazetteer's variant surfaces into a CompiledModel."""
    if not gazetteer.variants:
        raise DataError("cannot compute a language model from an empty gazetteer")
    counts = NGramCounts()
    for surface in gazetteer.variants:
        tokens = surface.split()
        for w in tokens:
            counts.unigram_counts[w] = counts.unigram_counts.get(w, 0) + 1
            counts.total_unigrams += 1
        for w1, w2 in zip(tokens, tokens[1:]):
            row = counts.bigram_cfd.setdefault(w1, {})
            row[w2] = row.get(w2, 0) + 1
        for w1, w2, w3 in zip(tokens, tokens[1:], tokens[2:]):
            row = counts.trigram_cfd.setdefault((w1, w2), {})
            row[w3] = row.get(w3, 0) + 1
    return CompiledModel(counts)


def sequence_probability(model: CompiledModel, tokens) -> float:
    """Chain probability of a token sequence; 0 for anything unseen."""
    return model.probability(tokens)


def valid_ngram(model: CompiledModel, s: str) -> bool:
    """True iff the string's token sequence has nonzero probability.

    Matching is case-insensitive; empty or whitespace-only strings are
    treated as carrying no n-gram at all.
    """
    tokens = s.lower().split()
    if not tokens:
        return False
    return model.log_probability(tokens) != _ZERO
