"""Tag-set-agnostic hidden Markov model part-of-speech tagging toolkit.

Train order-2 or order-3 taggers from `word_TAG` corpora by relative
frequency estimation, decode with a log-space Viterbi search, and score
the result against held-out annotations.
"""

__version__ = "0.1.0"

from .corpus import (
    Corpus,
    TaggedToken,
    parse_tagged_corpus,
    parse_tagged_token,
    render_corpus,
    render_tagged,
    tokenize_raw,
)
from .counts import CountsTable, count_events, emission_prob, transition_prob
from .decoder import (
    TagPath,
    brute_force_decode,
    build_lattice,
    decode,
    sequence_log_prob,
)
from .errors import (
    ArityMismatch,
    CorruptModel,
    EmptyCorpus,
    EmptyPairSet,
    HmmtagError,
    LengthMismatch,
    MalformedCorpus,
    MalformedTag,
    MalformedToken,
    NoPath,
    NoSeparator,
    SearchSpaceTooLarge,
    TooFewSentences,
    UnknownTag,
    UnknownWord,
    UnsupportedVersion,
)
from .evaluation import (
    ConfusionMatrix,
    CvResult,
    EvalOptions,
    EvalReport,
    Pair,
    accuracy,
    confusion_matrix,
    cross_validate,
    evaluate,
)
from .fixtures import (
    deterministic_corpus,
    random_model,
    random_sentence,
    table2_corpora,
    table2_pairs,
    toy_corpus,
)
from .model import (
    HmmModel,
    SmoothingConfig,
    emission_lookup,
    load_model,
    save_model,
    transition_lookup,
)
from .tagset import (
    Tag,
    TagSet,
    default_sinhala_tagset,
    is_open_class,
    read_tagset_file,
    resolve_tag,
)
from .training import TrainConfig, train

__all__ = [
    "__version__",
    "ArityMismatch",
    "ConfusionMatrix",
    "Corpus",
    "CorruptModel",
    "CountsTable",
    "CvResult",
    "EmptyCorpus",
    "EmptyPairSet",
    "EvalOptions",
    "EvalReport",
    "HmmModel",
    "HmmtagError",
    "LengthMismatch",
    "MalformedCorpus",
    "MalformedTag",
    "MalformedToken",
    "NoPath",
    "NoSeparator",
    "Pair",
    "SearchSpaceTooLarge",
    "SmoothingConfig",
    "Tag",
    "TagPath",
    "TagSet",
    "TaggedToken",
    "TooFewSentences",
    "TrainConfig",
    "UnknownTag",
    "UnknownWord",
    "UnsupportedVersion",
    "accuracy",
    "brute_force_decode",
    "build_lattice",
    "confusion_matrix",
    "count_events",
    "cross_validate",
    "decode",
    "default_sinhala_tagset",
    "deterministic_corpus",
    "emission_lookup",
    "emission_prob",
    "evaluate",
    "is_open_class",
    "load_model",
    "parse_tagged_corpus",
    "parse_tagged_token",
    "random_model",
    "random_sentence",
    "read_tagset_file",
    "render_corpus",
    "render_tagged",
    "resolve_tag",
    "save_model",
    "sequence_log_prob",
    "table2_corpora",
    "table2_pairs",
    "tokenize_raw",
    "toy_corpus",
    "train",
    "transition_lookup",
    "transition_prob",
]
