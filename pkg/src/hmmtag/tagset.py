"""Tag inventories: symbols, registration order, open/closed word classes.

A TagSet assigns each tag symbol a dense integer index in registration order.
That index order is load-bearing: the decoder breaks score ties by it, and the
model file sorts its records by it, so two runs over the same data always see
the same inventory in the same order.
"""

from __future__ import annotations

import io
from dataclasses import dataclass

from .errors import MalformedTag, UnknownTag

# Boundary symbols used by the counting and decoding machinery. They are never
# members of a TagSet and never appear in corpora.
START = "<s>"
END = "</s>"

DEFAULT_PSEUDO_TAGS = (".", ",", "!", "?")


@dataclass(frozen=True)
class Tag:
    symbol: str
    index: int
    open_class: bool
    description: str = ""


def _check_symbol(symbol: str) -> None:
    if not symbol:
        raise MalformedTag("empty tag symbol")
    if any(ch.isspace() for ch in symbol):
        raise MalformedTag(f"tag symbol contains whitespace: {symbol!r}")
    if "_" in symbol:
        raise MalformedTag(f"tag symbol contains an underscore: {symbol!r}")
    if symbol in (START, END):
        raise MalformedTag(f"reserved boundary symbol: {symbol!r}")


class TagSet:
    """Ordered registry of tag symbols.

    mode "open": unknown symbols are registered on first resolve.
    mode "strict": membership is fixed, except that punctuation pseudo-tags
    (".", ",", "!", "?" by default) are admitted on demand in either mode.
    """

    def __init__(self, mode: str = "open", pseudo_tags=DEFAULT_PSEUDO_TAGS):
        if mode not in ("open", "strict"):
            raise ValueError(f"mode must be 'open' or 'strict', got {mode!r}")
        self.mode = mode
        self.pseudo_tags = frozenset(pseudo_tags)
        self._tags: list[Tag] = []
        self._by_symbol: dict[str, Tag] = {}

    # --- registration ---

    def add(self, symbol: str, open_class: bool = True, description: str = "") -> Tag:
        _check_symbol(symbol)
        if symbol in self._by_symbol:
            raise MalformedTag(f"duplicate tag symbol: {symbol!r}")
        tag = Tag(symbol, len(self._tags), open_class, description)
        self._tags.append(tag)
        self._by_symbol[symbol] = tag
        return tag

    def resolve(self, symbol: str) -> Tag:
        """Look a symbol up, registering it when the mode allows.

        Pseudo-tags register on demand (closed class) even in strict mode; any
        other unknown symbol registers in open mode and raises in strict mode.
        """
        tag = self._by_symbol.get(symbol)
        if tag is not None:
            return tag
        _check_symbol(symbol)
        if symbol in self.pseudo_tags:
            return self.add(symbol, open_class=False, description="punctuation")
        if self.mode == "open":
            return self.add(symbol, open_class=True)
        raise UnknownTag(f"tag {symbol!r} not in strict tag set")

    # --- queries ---

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._by_symbol

    def __len__(self) -> int:
        return len(self._tags)

    def __iter__(self):
        return iter(self._tags)

    def index(self, symbol: str) -> int:
        tag = self._by_symbol.get(symbol)
        if tag is None:
            raise UnknownTag(f"tag {symbol!r} not registered")
        return tag.index

    def get(self, symbol: str) -> Tag | None:
        return self._by_symbol.get(symbol)

    def by_index(self, index: int) -> Tag:
        return self._tags[index]

    def symbols(self) -> list[str]:
        return [t.symbol for t in self._tags]

    def is_pseudo(self, symbol: str) -> bool:
        return symbol in self.pseudo_tags

    def copy(self, mode: str | None = None) -> "TagSet":
        """Same tags and indices, optionally with a different mode."""
        out = TagSet(mode or self.mode, self.pseudo_tags)
        for t in self._tags:
            out.add(t.symbol, t.open_class, t.description)
        return out


def resolve_tag(ts: TagSet, symbol: str) -> Tag:
    return ts.resolve(symbol)


def is_open_class(ts: TagSet, symbol: str) -> bool:
    tag = ts.get(symbol)
    if tag is None:
        raise UnknownTag(f"tag {symbol!r} not registered")
    return tag.open_class


# The 26-tag Sinhala inventory, in its published order. The open/closed split
# follows the word-class discussion: noun, verb, adjective, adverb and other
# content categories admit new members; pronouns, determiners, particles,
# postpositions and conjunctions do not.
_SINHALA_TAGS = (
    ("NNR", "Common Noun Root", True),
    ("NNM", "Common Noun Masculine", True),
    ("NNF", "Common Noun Feminine", True),
    ("NNN", "Common Noun Neuter", True),
    ("NNPA", "Proper Noun Animate", True),
    ("NNPI", "Proper Noun Inanimate", True),
    ("PRPM", "Pronoun Masculine", False),
    ("PRPF", "Pronoun Feminine", False),
    ("PRPN", "Pronoun Neuter", False),
    ("PRPC", "Pronoun Common", False),
    ("QFNUM", "Number Quantifier", True),
    ("DET", "Determiner", False),
    ("JJ", "Adjective", True),
    ("RB", "Adverb", True),
    ("RP", "Particle", False),
    ("VFM", "Verb Finite Main", True),
    ("VNF", "Verb Non Finite", True),
    ("VP", "Verb Participle", True),
    ("VNN", "Verbal Non Finite Noun", True),
    ("POST", "Postposition", False),
    ("CC", "Conjunction", False),
    ("NVB", "Noun in Kriya Mula", True),
    ("JVB", "Adjective in Kriya Mula", True),
    ("UH", "Interjection", True),
    ("FRW", "Foreign Word", True),
    ("SYM", "Not Classified", True),
)


def default_sinhala_tagset() -> TagSet:
    """The 26-tag Sinhala set plus punctuation pseudo-tags, in open mode."""
    ts = TagSet(mode="open")
    for symbol, description, open_class in _SINHALA_TAGS:
        ts.add(symbol, open_class, description)
    for p in DEFAULT_PSEUDO_TAGS:
        ts.add(p, open_class=False, description="punctuation")
    return ts


def read_tagset_file(source, mode: str = "strict") -> TagSet:
    """Read a tag definition file: one `SYMBOL<TAB>open|closed<TAB>description`
    per line, `#` lines and blank lines ignored."""
    if isinstance(source, (str, bytes)):
        stream = io.StringIO(
            source.decode("utf-8") if isinstance(source, bytes) else source
        )
    else:
        stream = source
    ts = TagSet(mode=mode)
    for lineno, line in enumerate(stream, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) < 2 or parts[1] not in ("open", "closed"):
            raise MalformedTag(
                f"tag file line {lineno}: expected SYMBOL<TAB>open|closed[<TAB>description], got {line!r}"
            )
        description = parts[2] if len(parts) > 2 else ""
        ts.add(parts[0], open_class=(parts[1] == "open"), description=description)
    return ts
