"""The queryable tagging model: smoothed lookups, unknown-word policies, and
the versioned model file format.

The file stores raw counts, not probabilities, so smoothing and the unknown
policy can be chosen again at load time without retraining.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass, field, replace

from .counts import CountsTable, emission_prob, transition_prob
from .errors import (
    ArityMismatch,
    CorruptModel,
    MalformedTag,
    UnknownWord,
    UnsupportedVersion,
)
from .tagset import END, START, TagSet

FORMAT_VERSION = 1
_MAGIC = "HMMTAG"

SMOOTHING_KINDS = ("none", "add_k")
UNKNOWN_POLICIES = ("fail", "uniform", "open_class")


@dataclass(frozen=True)
class SmoothingConfig:
    """Add-k smoothing switches. `transitions` and `emissions` select which
    side gets smoothed when kind is add_k; both by default."""

    kind: str = "none"
    k: float = 1.0
    transitions: bool = True
    emissions: bool = True

    def __post_init__(self):
        if self.kind not in SMOOTHING_KINDS:
            raise ValueError(f"smoothing kind must be one of {SMOOTHING_KINDS}")
        if self.kind == "add_k" and not self.k > 0:
            raise ValueError(f"smoothing k must be positive, got {self.k!r}")

    @classmethod
    def none(cls) -> "SmoothingConfig":
        return cls()

    @classmethod
    def add_k(cls, k: float = 1.0, transitions: bool = True, emissions: bool = True):
        return cls("add_k", k, transitions, emissions)


def _check_unknown_policy(kind: str) -> str:
    if kind not in UNKNOWN_POLICIES:
        raise ValueError(f"unknown-word policy must be one of {UNKNOWN_POLICIES}")
    return kind


@dataclass(frozen=True)
class HmmModel:
    """Immutable trained model; all lookups are pure functions of it."""

    counts: CountsTable
    tagset: TagSet
    smoothing: SmoothingConfig = field(default_factory=SmoothingConfig)
    unknown: str = "fail"
    model_eos: bool = False
    format_version: int = FORMAT_VERSION

    def __post_init__(self):
        _check_unknown_policy(self.unknown)

    @property
    def order(self) -> int:
        return self.counts.order

    @property
    def vocabulary(self) -> set:
        return self.counts.vocabulary

    @property
    def transition_tag_count(self) -> int:
        """|T| for add-k transitions: distinct counted tags, plus the end
        symbol when it is admissible in the next-tag position."""
        return len(self.counts.tag_unigrams) + (1 if self.model_eos else 0)

    def with_config(
        self, smoothing: SmoothingConfig | None = None, unknown: str | None = None
    ) -> "HmmModel":
        out = self
        if smoothing is not None:
            out = replace(out, smoothing=smoothing)
        if unknown is not None:
            out = replace(out, unknown=_check_unknown_policy(unknown))
        return out

    # --- probability lookups ---

    def transition_lookup(self, context: tuple, tag: str) -> float:
        if len(context) != self.order - 1:
            raise ArityMismatch(
                f"context arity {len(context)} does not match order {self.order}"
            )
        if self.smoothing.kind == "add_k" and self.smoothing.transitions:
            context = tuple(context)
            c = self.counts.ngrams.get(context + (tag,), 0)
            total = self.counts.context_totals.get(context, 0)
            k = self.smoothing.k
            return (c + k) / (total + k * self.transition_tag_count)
        return transition_prob(self.counts, context, tag)

    def emission_lookup(self, surface: str, tag: str) -> float:
        v = len(self.counts.vocabulary)
        if surface in self.counts.vocabulary:
            if self.smoothing.kind == "add_k" and self.smoothing.emissions:
                c = self.counts.emissions.get((tag, surface), 0)
                total = self.counts.emission_totals.get(tag, 0)
                k = self.smoothing.k
                return (c + k) / (total + k * v)
            return emission_prob(self.counts, surface, tag)
        # out-of-vocabulary word
        if self.unknown == "fail":
            raise UnknownWord(surface)
        if v == 0 or self.counts.emission_totals.get(tag, 0) == 0:
            return 0.0
        if self.unknown == "uniform":
            return 1.0 / v
        # open_class: uniform mass over open-class tags only
        t = self.tagset.get(tag)
        if t is not None and t.open_class:
            return 1.0 / v
        return 0.0

    def candidate_tags(self, surface: str, open_emissions: bool = False) -> list:
        """Tags worth trying for a word, in tag-set index order.

        Known word: tags seen with it, or every counted tag when
        open_emissions is set (useful under emission smoothing). Unknown word:
        the tags its policy gives nonzero mass.
        """
        counted = self.counts.tags_by_index(self.tagset)
        if surface in self.counts.vocabulary:
            if open_emissions:
                return counted
            return [
                t for t in counted if self.counts.emissions.get((t, surface), 0) > 0
            ]
        if self.unknown == "fail":
            raise UnknownWord(surface)
        if self.unknown == "uniform":
            return counted
        return [t for t in counted if self.tagset.get(t).open_class]


def transition_lookup(m: HmmModel, context: tuple, tag: str) -> float:
    return m.transition_lookup(context, tag)


def emission_lookup(m: HmmModel, surface: str, tag: str) -> float:
    return m.emission_lookup(surface, tag)


# --- serialization ---
#
# Layout (UTF-8, LF):
#   HMMTAG 1
#   order <2|3>
#   ## TAGSET
#   <symbol> <open|closed>          in index order
#   ## TAG_NGRAMS
#   t1 t2 [t3] <count>              sorted by tag-index tuples
#   ## EMISSIONS
#   <tag>\t<surface>\t<count>       sorted by tag index, then surface
#   ## END
#   checksum <16 hex digits>
#
# The checksum is 64-bit FNV-1a over every byte up to and including the
# "## END\n" line. Boundary symbols order n-gram records before (start) and
# after (end) all real tags.

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def fnv1a_64(data: bytes) -> int:
    h = _FNV_OFFSET
    for b in data:
        h ^= b
        h = (h * _FNV_PRIME) & 0xFFFFFFFFFFFFFFFF
    return h


# surfaces sit in whitespace-delimited records, so whitespace (and the escape
# character itself) must be escaped; corpus-parsed surfaces never contain
# whitespace, but programmatically built models may
_SURFACE_ESCAPES = [("\\", "\\\\"), (" ", "\\s"), ("\t", "\\t"),
                    ("\n", "\\n"), ("\r", "\\r")]
_SURFACE_UNESCAPES = {"\\": "\\", "s": " ", "t": "\t", "n": "\n", "r": "\r"}


def _escape_surface(surface: str) -> str:
    for raw, escaped in _SURFACE_ESCAPES:
        surface = surface.replace(raw, escaped)
    return surface


def _unescape_surface(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\" and i + 1 < len(text):
            replacement = _SURFACE_UNESCAPES.get(text[i + 1])
            if replacement is not None:
                out.append(replacement)
                i += 2
                continue
        out.append(ch)
        i += 1
    return "".join(out)


def _ngram_sort_key(ts: TagSet, n_tags: int):
    def key(ngram: tuple) -> tuple:
        return tuple(
            -1 if t == START else n_tags if t == END else ts.index(t) for t in ngram
        )

    return key


def dump_model_bytes(m: HmmModel) -> bytes:
    lines = [f"{_MAGIC} {m.format_version}", f"order {m.order}"]
    lines.append("## TAGSET")
    for tag in m.tagset:
        lines.append(f"{tag.symbol} {'open' if tag.open_class else 'closed'}")
    lines.append("## TAG_NGRAMS")
    key = _ngram_sort_key(m.tagset, len(m.tagset))
    for ngram in sorted(m.counts.ngrams, key=key):
        count = m.counts.ngrams[ngram]
        lines.append(" ".join(ngram) + f" {count}")
    lines.append("## EMISSIONS")
    for tag, surface in sorted(
        m.counts.emissions, key=lambda e: (m.tagset.index(e[0]), e[1])
    ):
        count = m.counts.emissions[(tag, surface)]
        lines.append(f"{tag}\t{_escape_surface(surface)}\t{count}")
    lines.append("## END")
    body = ("\n".join(lines) + "\n").encode("utf-8")
    return body + f"checksum {fnv1a_64(body):016x}\n".encode("ascii")


def save_model(m: HmmModel, sink) -> None:
    """Write the model file to a path or a binary stream. Byte-deterministic:
    the same model always serializes identically."""
    data = dump_model_bytes(m)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "wb") as fh:
            fh.write(data)
    else:
        sink.write(data)


def _parse_count(value: str, what: str, lineno: int) -> int:
    try:
        n = int(value)
    except ValueError:
        n = -1
    if n < 1:
        raise CorruptModel(f"line {lineno}: bad {what} count {value!r}")
    return n


def load_model_bytes(
    data: bytes,
    smoothing: SmoothingConfig | None = None,
    unknown: str | None = None,
) -> HmmModel:
    """Parse a model file. Smoothing and unknown policy are not stored in the
    file; pass them here or get the defaults (none / fail)."""
    if isinstance(data, str):
        data = data.encode("utf-8")

    # the version gate comes before any integrity check, because a future
    # version may checksum differently
    first_line = data.split(b"\n", 1)[0].decode("utf-8", errors="replace")
    if not first_line.startswith(_MAGIC + " "):
        raise CorruptModel("missing HMMTAG magic line")
    version_text = first_line[len(_MAGIC) + 1 :].strip()
    if version_text != str(FORMAT_VERSION):
        raise UnsupportedVersion(f"format version {version_text!r} is not supported")

    marker = b"## END\n"
    end = data.find(marker)
    if end < 0:
        raise CorruptModel("missing END section")
    body = data[: end + len(marker)]
    trailer = data[end + len(marker) :].decode("utf-8", errors="replace").strip()
    if not trailer.startswith("checksum ") or len(trailer.split()) < 2:
        raise CorruptModel("missing checksum line")
    expected = trailer.split()[1]
    actual = f"{fnv1a_64(body):016x}"
    if expected != actual:
        raise CorruptModel(f"checksum mismatch: file says {expected}, data is {actual}")

    try:
        text = body.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorruptModel(f"model file is not valid UTF-8: {exc}") from exc
    lines = text.split("\n")[:-1]  # body ends with LF

    if len(lines) < 2 or not lines[1].startswith("order "):
        raise CorruptModel("missing order line")
    order_text = lines[1][len("order ") :].strip()
    if order_text not in ("2", "3"):
        raise CorruptModel(f"order must be 2 or 3, got {order_text!r}")
    order = int(order_text)

    # split the remainder into sections
    sections: dict[str, list] = {}
    current: list | None = None
    for lineno, line in enumerate(lines[2:], start=3):
        if line.startswith("## "):
            name = line[3:].strip()
            if name in sections:
                raise CorruptModel(f"duplicate section {name!r}")
            current = sections[name] = []
            continue
        if current is None:
            raise CorruptModel(f"line {lineno}: content before first section")
        current.append((lineno, line))
    for required in ("TAGSET", "TAG_NGRAMS", "EMISSIONS", "END"):
        if required not in sections:
            raise CorruptModel(f"missing section {required!r}")
    if sections["END"]:
        raise CorruptModel("unexpected content after END section header")

    ts = TagSet(mode="strict")
    for lineno, line in sections["TAGSET"]:
        parts = line.split(" ")
        if len(parts) != 2 or parts[1] not in ("open", "closed"):
            raise CorruptModel(f"line {lineno}: bad tagset record {line!r}")
        if parts[0] in (START, END):
            raise CorruptModel(f"line {lineno}: boundary symbol in tag set")
        try:
            ts.add(parts[0], open_class=(parts[1] == "open"))
        except MalformedTag as exc:
            raise CorruptModel(f"line {lineno}: {exc}") from exc

    counts = CountsTable(order=order)
    if order == 3:
        counts.tag_trigrams = Counter()
    model_eos = False
    admissible = set(ts.symbols()) | {START, END}
    for lineno, line in sections["TAG_NGRAMS"]:
        parts = line.split(" ")
        if len(parts) != order + 1:
            raise CorruptModel(f"line {lineno}: expected {order} tags and a count")
        ngram = tuple(parts[:-1])
        for sym in ngram:
            if sym not in admissible:
                raise CorruptModel(f"line {lineno}: unknown tag {sym!r} in n-gram")
        if END in ngram:
            model_eos = True
        count = _parse_count(parts[-1], "n-gram", lineno)
        if counts.ngrams.get(ngram) is not None:
            raise CorruptModel(f"line {lineno}: duplicate n-gram record")
        counts.ngrams[ngram] = count
        counts.context_totals[ngram[:-1]] += count
        if order == 3:
            counts.tag_bigrams[ngram[1:]] += count

    for lineno, line in sections["EMISSIONS"]:
        parts = line.split("\t")
        if len(parts) != 3:
            raise CorruptModel(f"line {lineno}: expected tag, surface, count")
        tag, surface_raw, count_text = parts
        if tag not in ts:
            raise CorruptModel(f"line {lineno}: unknown tag {tag!r} in emissions")
        surface = _unescape_surface(surface_raw)
        if not surface:
            raise CorruptModel(f"line {lineno}: empty surface")
        count = _parse_count(count_text, "emission", lineno)
        pair = (tag, surface)
        if counts.emissions.get(pair) is not None:
            raise CorruptModel(f"line {lineno}: duplicate emission record")
        counts.emissions[pair] = count
        counts.emission_totals[tag] += count
        counts.tag_unigrams[tag] += count
        counts.vocabulary.add(surface)

    return HmmModel(
        counts=counts,
        tagset=ts,
        smoothing=smoothing if smoothing is not None else SmoothingConfig(),
        unknown=unknown if unknown is not None else "fail",
        model_eos=model_eos,
    )


def load_model(
    source,
    smoothing: SmoothingConfig | None = None,
    unknown: str | None = None,
) -> HmmModel:
    """Load a model from a path or a binary stream."""
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            data = fh.read()
    else:
        data = source.read()
    return load_model_bytes(data, smoothing=smoothing, unknown=unknown)
