"""Exception hierarchy for the hmmtag package.

Everything raised on purpose by this package derives from HmmtagError, so
callers can catch one base class. OS-level failures (missing files, permission
errors) are left as OSError.
"""

from __future__ import annotations


class HmmtagError(Exception):
    """Base class for all hmmtag errors."""


# --- tag set ---

class MalformedTag(HmmtagError):
    """Tag symbol is empty, contains whitespace or an underscore, or is a
    reserved boundary symbol."""


class UnknownTag(HmmtagError):
    """Tag symbol not present in a strict-mode tag set."""


# --- corpus parsing ---

class NoSeparator(HmmtagError):
    """Raw token contains no underscore separator."""


class MalformedToken(HmmtagError):
    """Raw token has an empty surface or an empty tag part."""


class MalformedCorpus(HmmtagError):
    """One or more corpus lines failed to parse.

    Attributes:
        problems: list of (line, token, message) tuples, both positions 1-based.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        head = "; ".join(
            f"line {ln} token {tok}: {msg}" for ln, tok, msg in self.problems[:3]
        )
        extra = len(self.problems) - 3
        if extra > 0:
            head += f" (and {extra} more)"
        super().__init__(f"{len(self.problems)} corpus error(s): {head}")


# --- counting and lookup ---

class EmptyCorpus(HmmtagError):
    """Corpus has no sentences (or no tokens) where at least one is required."""


class ArityMismatch(HmmtagError):
    """Context tuple length does not equal model order minus one."""


# --- decoding ---

class UnknownWord(HmmtagError):
    """Word absent from the training vocabulary under the fail policy."""

    def __init__(self, surface: str, position: int | None = None):
        self.surface = surface
        self.position = position
        where = f" at token {position + 1}" if position is not None else ""
        super().__init__(f"unknown word {surface!r}{where}")


class NoPath(HmmtagError):
    """Every candidate path has probability zero."""

    def __init__(self, position: int, surface: str | None = None):
        self.position = position
        self.surface = surface
        what = f" ({surface!r})" if surface is not None else ""
        super().__init__(
            f"no path with nonzero probability through token {position + 1}{what}"
        )


class LengthMismatch(HmmtagError):
    """Tag sequence length does not equal sentence length."""


class SearchSpaceTooLarge(HmmtagError):
    """Brute-force enumeration would exceed the search guard."""


# --- model files ---

class UnsupportedVersion(HmmtagError):
    """Model file declares a format version this code does not read."""


class CorruptModel(HmmtagError):
    """Model file failed checksum or structural validation."""


# --- evaluation ---

class EmptyPairSet(HmmtagError):
    """Accuracy or confusion matrix requested over zero pairs."""


class TooFewSentences(HmmtagError):
    """Cross-validation needs at least k sentences."""
