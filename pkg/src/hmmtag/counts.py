"""Event counting and relative-frequency estimates.

One counting loop serves both orders: every sentence is padded with (order-1)
start symbols and, for each position, the tag n-gram ending there and its
context are counted. The order-2 estimates are therefore the order-3 machinery
at context arity 1, not a separate code path.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .errors import ArityMismatch, EmptyCorpus
from .tagset import END, START


@dataclass
class CountsTable:
    """Raw integer event counts from a tagged corpus.

    ngram-level invariant: context_totals[c] equals the sum of ngram counts
    whose context is c, because both are incremented once per token position.
    tag_bigrams equals the n-grams themselves at order 2 and the first-tag
    marginal of the trigrams at order 3.
    """

    order: int
    tag_unigrams: Counter = field(default_factory=Counter)
    tag_bigrams: Counter = field(default_factory=Counter)
    tag_trigrams: Counter | None = None
    context_totals: Counter = field(default_factory=Counter)
    emissions: Counter = field(default_factory=Counter)  # (tag, surface) -> count
    emission_totals: Counter = field(default_factory=Counter)
    vocabulary: set = field(default_factory=set)

    @property
    def ngrams(self) -> Counter:
        """The tag n-grams of the model order."""
        return self.tag_trigrams if self.order == 3 else self.tag_bigrams

    @property
    def start_context(self) -> tuple:
        return (START,) * (self.order - 1)

    @property
    def sentence_count(self) -> int:
        # every sentence contributes exactly one position with the all-start
        # context, and START is never a real tag
        return self.context_totals.get(self.start_context, 0)

    @property
    def token_count(self) -> int:
        return sum(self.tag_unigrams.values())

    def tags_by_index(self, ts) -> list:
        """Counted tags in tag-set index order."""
        return sorted(self.tag_unigrams, key=ts.index)


def count_events(sentences, order: int, model_eos: bool = False) -> CountsTable:
    """Count tag n-grams and emissions over tagged sentences.

    With model_eos an explicit end symbol is appended to each sentence and
    counted in the n-grams (but never in unigrams or emissions).
    """
    if order not in (2, 3):
        raise ValueError(f"order must be 2 or 3, got {order!r}")
    sentences = list(sentences)
    if not sentences or all(len(s) == 0 for s in sentences):
        raise EmptyCorpus("cannot count events over an empty corpus")

    t = CountsTable(order=order)
    if order == 3:
        t.tag_trigrams = Counter()
    for sentence in sentences:
        tags = [tok.tag for tok in sentence]
        padded = [START] * (order - 1) + tags
        if model_eos:
            padded.append(END)
        for i in range(order - 1, len(padded)):
            ngram = tuple(padded[i - order + 1 : i + 1])
            t.context_totals[ngram[:-1]] += 1
            if order == 3:
                t.tag_trigrams[ngram] += 1
            t.tag_bigrams[(padded[i - 1], padded[i])] += 1
        for surface, tag in sentence:
            t.tag_unigrams[tag] += 1
            t.emissions[(tag, surface)] += 1
            t.emission_totals[tag] += 1
            t.vocabulary.add(surface)
    return t


def transition_prob(counts: CountsTable, context: tuple, tag: str) -> float:
    """Relative frequency of `tag` after `context`; 0 for unseen events and
    unseen contexts."""
    if len(context) != counts.order - 1:
        raise ArityMismatch(
            f"context arity {len(context)} does not match order {counts.order}"
        )
    total = counts.context_totals.get(tuple(context), 0)
    if total == 0:
        return 0.0
    return counts.ngrams.get(tuple(context) + (tag,), 0) / total


def emission_prob(counts: CountsTable, surface: str, tag: str) -> float:
    """Relative frequency of `surface` under `tag`; 0 for unseen pairs."""
    total = counts.emission_totals.get(tag, 0)
    if total == 0:
        return 0.0
    return counts.emissions.get((tag, surface), 0) / total
