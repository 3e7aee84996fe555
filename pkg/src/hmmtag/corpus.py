"""Corpus reading and writing.

Tagged corpus format: UTF-8 text, one sentence per non-blank line, tokens
separated by runs of whitespace, each token `surface_TAG` split on its LAST
underscore (so surfaces may contain underscores, tags may not). Lines whose
first non-blank character is `#` are comments. LF and CRLF both accepted.

Raw text: free UTF-8. Tokens are whitespace-separated; a token that is exactly
".", "!", "?" or "؟" ends a sentence and stays as its final token.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import HmmtagError, MalformedCorpus, MalformedToken, NoSeparator
from .tagset import TagSet

# Tokens that close a raw-text sentence. ؟ is the Arabic-script question
# mark that also appears in Sinhala-adjacent text.
SENTENCE_TERMINATORS = frozenset((".", "!", "?", "؟"))

ERROR_CAP = 100


class TaggedToken(NamedTuple):
    surface: str
    tag: str


TaggedSentence = list  # list[TaggedToken]
Sentence = list  # list[str]


@dataclass
class Corpus:
    sentences: list = field(default_factory=list)
    tagset: TagSet | None = None

    @property
    def sentence_count(self) -> int:
        return len(self.sentences)

    @property
    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)

    @property
    def vocabulary(self) -> set:
        return {tok.surface for s in self.sentences for tok in s}

    @property
    def vocabulary_size(self) -> int:
        return len(self.vocabulary)

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)


def parse_tagged_token(raw: str, ts: TagSet) -> TaggedToken:
    """Split `surface_TAG` on the last underscore and resolve the tag."""
    if "_" not in raw:
        raise NoSeparator(f"token {raw!r} has no underscore separator")
    surface, _, symbol = raw.rpartition("_")
    if not surface:
        raise MalformedToken(f"token {raw!r} has an empty surface")
    if not symbol:
        raise MalformedToken(f"token {raw!r} has an empty tag")
    tag = ts.resolve(symbol)
    return TaggedToken(surface, tag.symbol)


def _as_lines(text) -> Iterable[str]:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    if isinstance(text, str):
        return text.splitlines()
    return text  # stream or iterable of lines


def parse_tagged_corpus(text, ts: TagSet, fail_fast: bool = False) -> Corpus:
    """Parse a whole tagged corpus.

    Token errors carry 1-based (line, token) positions. With fail_fast the
    first error aborts; otherwise errors are collected (up to ERROR_CAP) and
    reported together. Any error means no Corpus is returned.
    """
    sentences = []
    problems = []
    for lineno, line in enumerate(_as_lines(text), start=1):
        line = line.rstrip("\r\n")
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        sentence = []
        for tokno, raw in enumerate(stripped.split(), start=1):
            try:
                sentence.append(parse_tagged_token(raw, ts))
            except HmmtagError as exc:
                problems.append((lineno, tokno, str(exc)))
                if fail_fast or len(problems) >= ERROR_CAP:
                    raise MalformedCorpus(problems) from exc
        if sentence:
            sentences.append(sentence)
    if problems:
        raise MalformedCorpus(problems)
    return Corpus(sentences, tagset=ts)


def tokenize_raw(text: str) -> list:
    """Split raw text into sentences of whitespace tokens.

    Terminator tokens close a sentence and are kept; trailing tokens without a
    terminator form a final sentence. Never yields an empty sentence.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    sentences = []
    current = []
    for token in text.split():
        current.append(token)
        if token in SENTENCE_TERMINATORS:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


def render_tagged(sentence) -> str:
    """Format one tagged sentence back to a `surface_TAG ...` line."""
    return " ".join(f"{tok.surface}_{tok.tag}" for tok in sentence)


def render_corpus(corpus_or_sentences) -> str:
    return "\n".join(render_tagged(s) for s in corpus_or_sentences) + "\n"
