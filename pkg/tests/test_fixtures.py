import pytest

from hmmtag.decoder import decode
from hmmtag.fixtures import (
    OMITTED_FROM_REFERENCE,
    deterministic_corpus,
    random_model,
    random_sentence,
    table2_corpora,
    table2_pairs,
    toy_corpus,
)
from hmmtag.model import dump_model_bytes
from hmmtag.rng import splitmix64_stream
from hmmtag.tagset import END, START


class TestReferenceCorpora:
    def test_five_aligned_sentence_pairs(self):
        actual, predicted = table2_corpora()
        assert actual.sentence_count == 5
        assert predicted.sentence_count == 5
        for gold, pred in zip(actual, predicted):
            assert [t.surface for t in gold] == [t.surface for t in pred]

    def test_tag_difference_is_exactly_two_tokens(self):
        actual, predicted = table2_corpora()
        diffs = [
            (g.surface, g.tag, p.tag)
            for gold, pred in zip(actual, predicted)
            for g, p in zip(gold, pred)
            if g.tag != p.tag
        ]
        assert len(diffs) == 2
        assert all(g == "NNN" and p == "NVB" for _, g, p in diffs)

    def test_pair_set_is_the_published_tally(self):
        pairs = table2_pairs()
        assert len(pairs) == 22
        assert sum(1 for p in pairs if p.actual == p.predicted) == 20
        # no punctuation and none of the out-of-tally tokens
        assert all(p.actual not in (".", ",", "!", "?") for p in pairs)
        surfaces = {(p.surface, p.actual) for p in pairs}
        assert not (surfaces & OMITTED_FROM_REFERENCE)

    def test_pairs_carry_surfaces_in_sentence_order(self):
        pairs = table2_pairs()
        actual, _ = table2_corpora()
        ts = actual.tagset
        expected = [
            t.surface
            for s in actual
            for t in s
            if not ts.is_pseudo(t.tag) and (t.surface, t.tag) not in OMITTED_FROM_REFERENCE
        ]
        assert [p.surface for p in pairs] == expected


class TestHandCorpora:
    def test_toy_corpus_shape(self):
        c = toy_corpus()
        assert c.sentence_count == 2
        assert c.token_count == 4
        assert c.vocabulary == {"a", "b", "c"}

    def test_deterministic_corpus_forces_one_tag_per_word(self):
        c = deterministic_corpus()
        seen = {}
        for s in c:
            for tok in s:
                seen.setdefault(tok.surface, set()).add(tok.tag)
        assert all(len(tags) == 1 for tags in seen.values())


class TestRandomModel:
    def test_same_seed_same_model_bytes(self):
        a = random_model(seed=11, n_tags=3, n_words=5)
        b = random_model(seed=11, n_tags=3, n_words=5)
        assert dump_model_bytes(a) == dump_model_bytes(b)

    def test_different_seeds_differ(self):
        a = random_model(seed=1, n_tags=3, n_words=5)
        b = random_model(seed=2, n_tags=3, n_words=5)
        assert dump_model_bytes(a) != dump_model_bytes(b)

    @pytest.mark.parametrize(
        "kw",
        [
            dict(n_tags=1, n_words=4),
            dict(n_tags=6, n_words=4),
            dict(n_tags=3, n_words=1),
            dict(n_tags=3, n_words=9),
        ],
    )
    def test_range_validation(self, kw):
        with pytest.raises(ValueError):
            random_model(seed=0, **kw)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            random_model(seed=0, n_tags=3, n_words=3, order=4)

    def test_transition_rows_are_complete(self):
        for seed in range(6):
            m = random_model(seed=seed, n_tags=2 + seed % 4, n_words=3)
            tags = sorted(m.counts.tag_unigrams)
            for ctx in m.counts.context_totals:
                for t in tags:
                    assert m.counts.ngrams[ctx + (t,)] >= 1

    def test_every_word_emitted_and_every_tag_emits(self):
        for seed in range(10):
            m = random_model(seed=seed, n_tags=4, n_words=6)
            tags = [f"T{i}" for i in range(4)]
            for w in m.vocabulary:
                assert any((t, w) in m.counts.emissions for t in tags)
            for t in tags:
                assert m.counts.emission_totals[t] > 0

    def test_order2_contexts_have_arity_one(self):
        m = random_model(seed=3, n_tags=3, n_words=3, order=2)
        assert all(len(c) == 1 for c in m.counts.context_totals)
        assert (START,) in m.counts.context_totals

    def test_eos_adds_end_followers(self):
        m = random_model(seed=3, n_tags=3, n_words=3, model_eos=True)
        assert m.model_eos
        assert any(ng[-1] == END for ng in m.counts.ngrams)

    def test_vocabulary_sentences_always_decode(self):
        for seed in range(8):
            m = random_model(seed=seed, n_tags=3, n_words=4)
            stream = splitmix64_stream(seed + 500)
            words = random_sentence(m, stream, length=5)
            path = decode(m, words)
            assert len(path.tags) == 5


class TestRandomSentence:
    def test_deterministic_and_in_vocabulary(self):
        m = random_model(seed=4, n_tags=3, n_words=5)
        a = random_sentence(m, splitmix64_stream(9), length=6)
        b = random_sentence(m, splitmix64_stream(9), length=6)
        assert a == b
        assert len(a) == 6
        assert set(a) <= m.vocabulary
