"""Supervised training: count events over a corpus and wrap them in a model.

The probability estimates themselves live in `counts`; this module re-exports
them so training-side callers have one import surface.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .corpus import Corpus
from .counts import CountsTable, count_events, emission_prob, transition_prob
from .errors import EmptyCorpus
from .model import HmmModel, SmoothingConfig
from .tagset import TagSet

__all__ = [
    "CountsTable",
    "TrainConfig",
    "count_events",
    "emission_prob",
    "train",
    "transition_prob",
]


@dataclass(frozen=True)
class TrainConfig:
    order: int = 3
    smoothing: SmoothingConfig = field(default_factory=SmoothingConfig)
    unknown: str = "fail"
    model_eos: bool = False
    tagset: TagSet | None = None  # overrides the corpus's own tag set

    def __post_init__(self):
        if self.order not in (2, 3):
            raise ValueError(f"order must be 2 or 3, got {self.order!r}")


def train(corpus, config: TrainConfig | None = None) -> HmmModel:
    """Train a model from a tagged corpus (a Corpus or a list of sentences).

    The model snapshots the tag set that parsed the corpus; pass one in the
    config when training from bare sentence lists.
    """
    config = config or TrainConfig()
    sentences = list(corpus)
    if not sentences:
        raise EmptyCorpus("cannot train on an empty corpus")

    ts = config.tagset
    if ts is None and isinstance(corpus, Corpus):
        ts = corpus.tagset
    if ts is None:
        # register tags in first-appearance order so indices are reproducible
        ts = TagSet(mode="open")
        for sentence in sentences:
            for tok in sentence:
                ts.resolve(tok.tag)

    counts = count_events(sentences, config.order, model_eos=config.model_eos)
    return HmmModel(
        counts=counts,
        tagset=ts,
        smoothing=config.smoothing,
        unknown=config.unknown,
        model_eos=config.model_eos,
    )
