"""Log-space Viterbi decoding with backtrace, path scoring, and an exhaustive
oracle for testing.

States are (order-1)-tuples of tag symbols; column 0 holds the all-start state
at log-probability 0. Zero-probability events never enter the lattice, so a
column that comes up empty means no path exists.

Tie-breaking: when two predecessors (or two final states) score within 1e-12
of each other, the one whose tag tuple is smaller in tag-index order wins.
Scores accumulate left to right, predecessor first, so the reported log_prob
is bit-identical to sequence_log_prob over the returned path.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import LengthMismatch, NoPath, SearchSpaceTooLarge
from .model import HmmModel
from .tagset import END, START

TIE_TOLERANCE = 1e-12
SEARCH_GUARD = 10**6


class Cell(NamedTuple):
    log_prob: float
    backpointer: tuple | None


@dataclass(frozen=True)
class TagPath:
    tags: tuple
    log_prob: float


@dataclass
class Lattice:
    columns: list  # one dict per column: state tuple -> Cell


def _state_key(m: HmmModel):
    """Map a state tuple to a tuple of tag indices for deterministic ordering.
    Start sorts before every real tag, end after."""
    indices = {t.symbol: t.index for t in m.tagset}
    indices[START] = -1
    indices[END] = len(m.tagset)

    def key(state: tuple) -> tuple:
        return tuple(indices[t] for t in state)

    return key


def build_lattice(m: HmmModel, words, open_emissions: bool = False) -> Lattice:
    """Run the forward Viterbi pass and return the filled lattice."""
    words = list(words)
    if not words:
        raise ValueError("cannot decode an empty sentence")
    key = _state_key(m)
    start = (START,) * (m.order - 1)
    columns = [{start: Cell(0.0, None)}]
    for i, word in enumerate(words):
        candidates = m.candidate_tags(word, open_emissions=open_emissions)
        log_emit = {}
        for tag in candidates:
            p = m.emission_lookup(word, tag)
            if p > 0.0:
                log_emit[tag] = math.log(p)
        column: dict[tuple, Cell] = {}
        for prev_state, cell in sorted(columns[-1].items(), key=lambda kv: key(kv[0])):
            for tag, le in log_emit.items():
                pt = m.transition_lookup(prev_state, tag)
                if pt <= 0.0:
                    continue
                score = cell.log_prob + math.log(pt) + le
                state = prev_state[1:] + (tag,)
                best = column.get(state)
                if best is None or score > best.log_prob + TIE_TOLERANCE:
                    column[state] = Cell(score, prev_state)
        if not column:
            raise NoPath(i, word)
        columns.append(column)
    return Lattice(columns)


def decode(m: HmmModel, words, open_emissions: bool = False) -> TagPath:
    """Best tag path for a sentence under the model's configuration."""
    words = list(words)
    lattice = build_lattice(m, words, open_emissions=open_emissions)
    key = _state_key(m)
    last = lattice.columns[-1]

    best_state = None
    best_score = -math.inf
    for state, cell in sorted(last.items(), key=lambda kv: key(kv[0])):
        score = cell.log_prob
        if m.model_eos:
            pt = m.transition_lookup(state, END)
            if pt <= 0.0:
                continue
            score = score + math.log(pt)
        if best_state is None or score > best_score + TIE_TOLERANCE:
            best_state = state
            best_score = score
    if best_state is None:
        raise NoPath(len(words) - 1, None)

    # follow backpointers; the last element of each state is that column's tag
    tags = []
    state = best_state
    for col in range(len(lattice.columns) - 1, 0, -1):
        tags.append(state[-1])
        state = lattice.columns[col][state].backpointer
    tags.reverse()
    return TagPath(tuple(tags), best_score)


def sequence_log_prob(m: HmmModel, words, tags) -> float:
    """Score one explicit tag sequence; -inf when any factor is zero."""
    words = list(words)
    tags = list(tags)
    if len(words) != len(tags):
        raise LengthMismatch(
            f"{len(tags)} tags for {len(words)} words"
        )
    context = (START,) * (m.order - 1)
    total = 0.0
    dead = False
    for word, tag in zip(words, tags):
        pt = m.transition_lookup(context, tag)
        pe = m.emission_lookup(word, tag)  # raises UnknownWord under fail
        if pt <= 0.0 or pe <= 0.0:
            dead = True
        else:
            total = total + math.log(pt)
            total = total + math.log(pe)
        context = context[1:] + (tag,)
    if m.model_eos and not dead:
        pt = m.transition_lookup(context, END)
        if pt <= 0.0:
            dead = True
        else:
            total = total + math.log(pt)
    return -math.inf if dead else total


def _reversed_state_key(m: HmmModel, tags) -> tuple:
    """Tie-break key matching the lattice's choices: the per-column state
    tuples, compared from the last column backwards."""
    key = _state_key(m)
    context = (START,) * (m.order - 1)
    states = []
    for tag in tags:
        context = context[1:] + (tag,)
        states.append(key(context))
    return tuple(reversed(states))


def brute_force_decode(m: HmmModel, words, tag_pool=None) -> TagPath:
    """Score every tag sequence over the pool and pick the best, with the
    same tie-break as decode. Testing oracle; guarded against blowup."""
    words = list(words)
    if not words:
        raise ValueError("cannot decode an empty sentence")
    if tag_pool is None:
        tag_pool = m.counts.tags_by_index(m.tagset)
    pool = list(tag_pool)
    if len(pool) ** len(words) > SEARCH_GUARD:
        raise SearchSpaceTooLarge(
            f"{len(pool)} tags ** {len(words)} words exceeds {SEARCH_GUARD}"
        )
    best_tags = None
    best_score = -math.inf
    best_key = None
    for tags in itertools.product(pool, repeat=len(words)):
        score = sequence_log_prob(m, words, tags)
        if score == -math.inf:
            continue
        if best_tags is None or score > best_score + TIE_TOLERANCE:
            best_tags, best_score, best_key = tags, score, None
        elif score >= best_score - TIE_TOLERANCE:
            if best_key is None:
                best_key = _reversed_state_key(m, best_tags)
            cand_key = _reversed_state_key(m, tags)
            if cand_key < best_key:
                best_tags, best_score, best_key = tags, score, cand_key
    if best_tags is None:
        raise NoPath(len(words) - 1, None)
    return TagPath(tuple(best_tags), best_score)
