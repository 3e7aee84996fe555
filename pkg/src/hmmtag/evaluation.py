"""Evaluation harness: accuracy, confusion matrices, reports, k-fold
cross-validation.

Accuracy is 100 * correct / total over (actual, predicted) tag pairs. By
default pairs whose ACTUAL tag is a punctuation pseudo-tag are excluded from
reports, which is the convention the bundled reference computation follows.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import NamedTuple

from . import rng
from .corpus import Corpus
from .decoder import decode
from .errors import (
    EmptyCorpus,
    EmptyPairSet,
    NoPath,
    TooFewSentences,
    UnknownWord,
)
from .model import HmmModel
from .tagset import TagSet
from .training import TrainConfig, train


class Pair(NamedTuple):
    actual: str
    predicted: str
    surface: str = ""
    known: bool = True


def accuracy(pairs) -> float:
    """Percent of pairs whose predicted tag equals the actual tag."""
    pairs = list(pairs)
    if not pairs:
        raise EmptyPairSet("accuracy over zero pairs")
    correct = sum(1 for p in pairs if p[0] == p[1])
    return 100.0 * correct / len(pairs)


class ConfusionMatrix:
    """Actual-by-predicted counts. Labels appear in first-appearance order,
    scanning each pair's actual tag before its predicted tag."""

    def __init__(self, pairs):
        pairs = list(pairs)
        if not pairs:
            raise EmptyPairSet("confusion matrix over zero pairs")
        self.labels: list[str] = []
        seen = set()
        for p in pairs:
            for symbol in (p[0], p[1]):
                if symbol not in seen:
                    seen.add(symbol)
                    self.labels.append(symbol)
        self.cells: dict[tuple, int] = {}
        for p in pairs:
            key = (p[0], p[1])
            self.cells[key] = self.cells.get(key, 0) + 1

    def cell(self, actual: str, predicted: str) -> int:
        return self.cells.get((actual, predicted), 0)

    @property
    def total(self) -> int:
        return sum(self.cells.values())

    @property
    def trace(self) -> int:
        return sum(self.cell(sym, sym) for sym in self.labels)

    def row_sum(self, actual: str) -> int:
        return sum(self.cell(actual, p) for p in self.labels)

    def col_sum(self, predicted: str) -> int:
        return sum(self.cell(a, predicted) for a in self.labels)

    def to_rows(self) -> list:
        """Counts as a dense list of rows, actual by predicted, label order."""
        return [[self.cell(a, p) for p in self.labels] for a in self.labels]


def confusion_matrix(pairs) -> ConfusionMatrix:
    return ConfusionMatrix(pairs)


@dataclass
class EvalOptions:
    exclude_punct: bool = True
    on_decode_error: str = "skip"  # skip | abort
    open_emissions: bool = False

    def __post_init__(self):
        if self.on_decode_error not in ("skip", "abort"):
            raise ValueError("on_decode_error must be 'skip' or 'abort'")


@dataclass
class EvalReport:
    correct: int
    total: int
    matrix: ConfusionMatrix | None
    per_tag: dict  # actual tag -> (correct, total), first-appearance order
    pairs: list
    known_correct: int = 0
    known_total: int = 0
    unknown_correct: int = 0
    unknown_total: int = 0
    skipped_sentences: int = 0

    @staticmethod
    def _pct(correct: int, total: int):
        return 100.0 * correct / total if total else None

    @property
    def accuracy_pct(self):
        return self._pct(self.correct, self.total)

    @property
    def known_word_count(self) -> int:
        return self.known_total

    @property
    def known_word_accuracy_pct(self):
        return self._pct(self.known_correct, self.known_total)

    @property
    def unknown_word_count(self) -> int:
        return self.unknown_total

    @property
    def unknown_word_accuracy_pct(self):
        return self._pct(self.unknown_correct, self.unknown_total)


def build_report(pairs, skipped_sentences: int = 0) -> EvalReport:
    """Assemble an EvalReport from scored pairs (no decoding)."""
    pairs = list(pairs)
    per_tag: dict[str, tuple] = {}
    correct = 0
    kc = kt = uc = ut = 0
    for p in pairs:
        hit = p.actual == p.predicted
        correct += hit
        c, t = per_tag.get(p.actual, (0, 0))
        per_tag[p.actual] = (c + hit, t + 1)
        if p.known:
            kt += 1
            kc += hit
        else:
            ut += 1
            uc += hit
    return EvalReport(
        correct=correct,
        total=len(pairs),
        matrix=ConfusionMatrix(pairs) if pairs else None,
        per_tag=per_tag,
        pairs=pairs,
        known_correct=kc,
        known_total=kt,
        unknown_correct=uc,
        unknown_total=ut,
        skipped_sentences=skipped_sentences,
    )


def evaluate(m: HmmModel, test, options: EvalOptions | None = None) -> EvalReport:
    """Decode each test sentence and compare predicted tags to the gold ones.

    Sentences the decoder cannot handle (unknown word under the fail policy,
    or no surviving path) are skipped and counted, unless on_decode_error is
    'abort'.
    """
    options = options or EvalOptions()
    sentences = list(test)
    if not sentences:
        raise EmptyCorpus("cannot evaluate on an empty corpus")
    pairs: list[Pair] = []
    skipped = 0
    vocab = m.vocabulary
    for sentence in sentences:
        words = [tok.surface for tok in sentence]
        try:
            path = decode(m, words, open_emissions=options.open_emissions)
        except (UnknownWord, NoPath):
            if options.on_decode_error == "abort":
                raise
            skipped += 1
            continue
        for tok, predicted in zip(sentence, path.tags):
            if options.exclude_punct and m.tagset.is_pseudo(tok.tag):
                continue
            pairs.append(
                Pair(tok.tag, predicted, tok.surface, known=tok.surface in vocab)
            )
    return build_report(pairs, skipped_sentences=skipped)


@dataclass
class CvResult:
    k: int
    seed: int
    folds: list  # EvalReport per fold
    fold_indices: list  # per fold, the original sentence indices it tested
    micro: EvalReport
    macro_accuracy_pct: float | None


def cross_validate(
    corpus,
    k: int = 10,
    seed: int = 42,
    config: TrainConfig | None = None,
    options: EvalOptions | None = None,
) -> CvResult:
    """Shuffle sentences with a seeded deterministic PRNG, split into k
    near-equal folds, train on each complement, evaluate on each fold, and
    micro-average the pooled pairs."""
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    config = config or TrainConfig()
    sentences = list(corpus)
    if len(sentences) < k:
        raise TooFewSentences(f"{len(sentences)} sentences for k={k}")

    ts = config.tagset
    if ts is None and isinstance(corpus, Corpus):
        ts = corpus.tagset
    if ts is None:
        ts = TagSet(mode="open")
        for sentence in sentences:
            for tok in sentence:
                ts.resolve(tok.tag)
    config = TrainConfig(
        order=config.order,
        smoothing=config.smoothing,
        unknown=config.unknown,
        model_eos=config.model_eos,
        tagset=ts,
    )

    order_of = rng.shuffled(range(len(sentences)), seed)
    base, extra = divmod(len(sentences), k)
    fold_indices = []
    at = 0
    for i in range(k):
        size = base + (1 if i < extra else 0)
        fold_indices.append(order_of[at : at + size])
        at += size

    folds = []
    for test_idx in fold_indices:
        test_set = set(test_idx)
        train_sents = [s for i, s in enumerate(sentences) if i not in test_set]
        test_sents = [sentences[i] for i in test_idx]
        model = train(Corpus(train_sents, tagset=ts), config)
        folds.append(evaluate(model, test_sents, options))

    pooled = [p for r in folds for p in r.pairs]
    micro = EvalReport(
        correct=sum(r.correct for r in folds),
        total=len(pooled),
        matrix=ConfusionMatrix(pooled) if pooled else None,
        per_tag=_merge_per_tag(folds),
        pairs=pooled,
        known_correct=sum(r.known_correct for r in folds),
        known_total=sum(r.known_total for r in folds),
        unknown_correct=sum(r.unknown_correct for r in folds),
        unknown_total=sum(r.unknown_total for r in folds),
        skipped_sentences=sum(r.skipped_sentences for r in folds),
    )
    with_pairs = [r.accuracy_pct for r in folds if r.total]
    macro = sum(with_pairs) / len(with_pairs) if with_pairs else None
    return CvResult(
        k=k,
        seed=seed,
        folds=folds,
        fold_indices=fold_indices,
        micro=micro,
        macro_accuracy_pct=macro,
    )


def _merge_per_tag(folds) -> dict:
    merged: dict[str, tuple] = {}
    for r in folds:
        for tag, (c, t) in r.per_tag.items():
            mc, mt = merged.get(tag, (0, 0))
            merged[tag] = (mc + c, mt + t)
    return merged


# --- machine-readable forms ---

def matrix_to_dict(matrix: ConfusionMatrix | None) -> dict:
    if matrix is None:
        return {"labels": [], "rows": []}
    return {"labels": list(matrix.labels), "rows": matrix.to_rows()}


def report_to_dict(r: EvalReport) -> dict:
    return {
        "accuracy_pct": r.accuracy_pct,
        "correct": r.correct,
        "total": r.total,
        "matrix": matrix_to_dict(r.matrix),
        "per_tag": {
            tag: {
                "correct": c,
                "total": t,
                "accuracy_pct": EvalReport._pct(c, t),
            }
            for tag, (c, t) in r.per_tag.items()
        },
        "known_word_count": r.known_word_count,
        "known_word_accuracy_pct": r.known_word_accuracy_pct,
        "unknown_word_count": r.unknown_word_count,
        "unknown_word_accuracy_pct": r.unknown_word_accuracy_pct,
        "skipped_sentences": r.skipped_sentences,
    }


def cv_to_dict(cv: CvResult) -> dict:
    out = report_to_dict(cv.micro)
    out["k"] = cv.k
    out["seed"] = cv.seed
    out["macro_accuracy_pct"] = cv.macro_accuracy_pct
    out["folds"] = [report_to_dict(r) for r in cv.folds]
    return out


def write_confusion_csv(matrix: ConfusionMatrix | None, path) -> None:
    """Matrix as CSV: header `actual` + predicted labels, one row per actual."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        if matrix is None:
            writer.writerow(["actual"])
            return
        writer.writerow(["actual", *matrix.labels])
        for label, row in zip(matrix.labels, matrix.to_rows()):
            writer.writerow([label, *row])


def write_per_tag_csv(r: EvalReport, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["tag", "correct", "total", "accuracy_pct"])
        for tag, (c, t) in r.per_tag.items():
            pct = EvalReport._pct(c, t)
            writer.writerow([tag, c, t, "" if pct is None else f"{pct:.4f}"])


def write_folds_csv(cv: CvResult, path) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["fold", "correct", "total", "accuracy_pct", "skipped_sentences"])
        for i, r in enumerate(cv.folds):
            pct = r.accuracy_pct
            writer.writerow(
                [i, r.correct, r.total, "" if pct is None else f"{pct:.4f}", r.skipped_sentences]
            )
