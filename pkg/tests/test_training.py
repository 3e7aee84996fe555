import pytest

from hmmtag.corpus import TaggedToken, parse_tagged_corpus
from hmmtag.counts import count_events, emission_prob, transition_prob
from hmmtag.errors import ArityMismatch, EmptyCorpus
from hmmtag.fixtures import toy_corpus
from hmmtag.tagset import END, START, TagSet
from hmmtag.training import TrainConfig, train


# hand counts for the toy corpus "a_D b_N" / "a_D c_N":
#   bigrams (<s>,D)=2 (D,N)=2; context totals (<s>,)=2 (D,)=2
#   unigrams D=2 N=2; emissions (D,a)=2 (N,b)=1 (N,c)=1


class TestCountEventsOrder2:
    def test_toy_bigram_counts(self):
        c = count_events(toy_corpus().sentences, order=2)
        assert c.tag_bigrams == {(START, "D"): 2, ("D", "N"): 2}
        assert c.context_totals == {(START,): 2, ("D",): 2}
        assert c.tag_unigrams == {"D": 2, "N": 2}
        assert c.emissions == {("D", "a"): 2, ("N", "b"): 1, ("N", "c"): 1}
        assert c.emission_totals == {"D": 2, "N": 2}
        assert c.vocabulary == {"a", "b", "c"}
        assert c.sentence_count == 2
        assert c.token_count == 4
        assert c.tag_trigrams is None
        assert c.ngrams is c.tag_bigrams

    def test_eos_adds_end_transitions_only(self):
        c = count_events(toy_corpus().sentences, order=2, model_eos=True)
        assert c.tag_bigrams[("N", END)] == 2
        assert c.context_totals[("N",)] == 2
        # the end symbol is not a token: unigrams and emissions are unchanged
        assert c.tag_unigrams == {"D": 2, "N": 2}
        assert c.token_count == 4


class TestCountEventsOrder3:
    def test_toy_trigram_counts(self):
        c = count_events(toy_corpus().sentences, order=3)
        assert c.tag_trigrams == {(START, START, "D"): 2, (START, "D", "N"): 2}
        assert c.context_totals == {(START, START): 2, (START, "D"): 2}
        assert c.ngrams is c.tag_trigrams
        assert c.sentence_count == 2

    def test_bigram_marginal_matches_order2_ngrams(self):
        sentences = parse_tagged_corpus(
            "a_D b_N c_V\nb_N a_D\nc_V c_V b_N a_D\n", TagSet(mode="open")
        ).sentences
        c2 = count_events(sentences, order=2)
        c3 = count_events(sentences, order=3)
        assert c3.tag_bigrams == c2.tag_bigrams
        c2e = count_events(sentences, order=2, model_eos=True)
        c3e = count_events(sentences, order=3, model_eos=True)
        assert c3e.tag_bigrams == c2e.tag_bigrams

    def test_context_totals_equal_ngram_row_sums(self):
        sentences = parse_tagged_corpus(
            "a_D b_N c_V\nb_N a_D\n", TagSet(mode="open")
        ).sentences
        for order in (2, 3):
            for eos in (False, True):
                c = count_events(sentences, order=order, model_eos=eos)
                rows = {}
                for ngram, n in c.ngrams.items():
                    rows[ngram[:-1]] = rows.get(ngram[:-1], 0) + n
                assert rows == dict(c.context_totals)


class TestCountEventsValidation:
    @pytest.mark.parametrize("order", [0, 1, 4, "2"])
    def test_bad_order(self, order):
        with pytest.raises(ValueError):
            count_events([[TaggedToken("a", "D")]], order=order)

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpus):
            count_events([], order=2)
        with pytest.raises(EmptyCorpus):
            count_events([[], []], order=2)


class TestTransitionProb:
    def test_toy_values(self):
        c = count_events(toy_corpus().sentences, order=2)
        assert transition_prob(c, (START,), "D") == 1.0
        assert transition_prob(c, ("D",), "N") == 1.0
        assert transition_prob(c, ("D",), "D") == 0.0  # unseen event
        assert transition_prob(c, ("N",), "D") == 0.0  # unseen context
        assert transition_prob(c, ("X",), "D") == 0.0

    def test_arity_checked(self):
        c = count_events(toy_corpus().sentences, order=2)
        with pytest.raises(ArityMismatch):
            transition_prob(c, (START, START), "D")
        c3 = count_events(toy_corpus().sentences, order=3)
        with pytest.raises(ArityMismatch):
            transition_prob(c3, ("D",), "N")

    def test_accepts_list_context(self):
        c = count_events(toy_corpus().sentences, order=2)
        assert transition_prob(c, [START], "D") == 1.0


class TestEmissionProb:
    def test_toy_values(self):
        c = count_events(toy_corpus().sentences, order=2)
        assert emission_prob(c, "a", "D") == 1.0
        assert emission_prob(c, "b", "N") == 0.5
        assert emission_prob(c, "c", "N") == 0.5
        assert emission_prob(c, "a", "N") == 0.0
        assert emission_prob(c, "zzz", "D") == 0.0
        assert emission_prob(c, "a", "NOPE") == 0.0


class TestTrain:
    def test_train_on_parsed_corpus_uses_its_tagset(self):
        corpus = toy_corpus()
        model = train(corpus)
        assert model.order == 3
        assert model.tagset is corpus.tagset
        assert model.counts.sentence_count == 2

    def test_config_tagset_wins(self):
        ts = TagSet(mode="open")
        ts.resolve("N")
        ts.resolve("D")  # indices differ from first-appearance order
        model = train(toy_corpus(), TrainConfig(tagset=ts))
        assert model.tagset is ts

    def test_bare_sentence_lists_get_first_appearance_tagset(self):
        sentences = [[TaggedToken("a", "D"), TaggedToken("b", "N")]]
        model = train(sentences)
        assert model.tagset.symbols() == ["D", "N"]

    def test_order_and_eos_follow_config(self):
        model = train(toy_corpus(), TrainConfig(order=2, model_eos=True))
        assert model.order == 2
        assert model.model_eos is True
        assert model.counts.tag_bigrams[("N", END)] == 2

    def test_empty_corpus_rejected(self):
        with pytest.raises(EmptyCorpus):
            train([])

    def test_bad_order_rejected_at_config_time(self):
        with pytest.raises(ValueError):
            TrainConfig(order=5)
