import pytest

from hmmtag.errors import MalformedTag, UnknownTag
from hmmtag.tagset import (
    DEFAULT_PSEUDO_TAGS,
    END,
    START,
    TagSet,
    default_sinhala_tagset,
    is_open_class,
    read_tagset_file,
    resolve_tag,
)


class TestTagSetBasics:
    def test_add_assigns_dense_indices_in_order(self):
        ts = TagSet()
        a = ts.add("A")
        b = ts.add("B", open_class=False)
        assert (a.index, b.index) == (0, 1)
        assert ts.symbols() == ["A", "B"]
        assert ts.by_index(1).symbol == "B"
        assert len(ts) == 2
        assert [t.symbol for t in ts] == ["A", "B"]

    def test_duplicate_add_rejected(self):
        ts = TagSet()
        ts.add("A")
        with pytest.raises(MalformedTag):
            ts.add("A")

    @pytest.mark.parametrize("bad", ["", "N N", "N\tN", "N_N", START, END])
    def test_bad_symbols_rejected(self, bad):
        ts = TagSet()
        with pytest.raises(MalformedTag):
            ts.add(bad)

    def test_bad_mode_rejected(self):
        with pytest.raises(ValueError):
            TagSet(mode="loose")

    def test_index_and_get(self):
        ts = TagSet()
        ts.add("A")
        assert ts.index("A") == 0
        assert ts.get("A").symbol == "A"
        assert ts.get("missing") is None
        with pytest.raises(UnknownTag):
            ts.index("missing")
        assert "A" in ts
        assert "missing" not in ts


class TestResolve:
    def test_open_mode_registers_unknown_as_open_class(self):
        ts = TagSet(mode="open")
        tag = ts.resolve("NEW")
        assert tag.open_class is True
        assert tag.index == 0
        # second resolve returns the same registration
        assert ts.resolve("NEW") is tag

    def test_strict_mode_rejects_unknown(self):
        ts = TagSet(mode="strict")
        ts.add("N")
        assert ts.resolve("N").symbol == "N"
        with pytest.raises(UnknownTag):
            ts.resolve("V")

    @pytest.mark.parametrize("mode", ["open", "strict"])
    def test_pseudo_tags_register_on_demand_as_closed(self, mode):
        ts = TagSet(mode=mode)
        tag = ts.resolve(".")
        assert tag.open_class is False
        assert ts.is_pseudo(".")
        assert not ts.is_pseudo("N")

    def test_module_level_helpers(self):
        ts = TagSet(mode="open")
        assert resolve_tag(ts, "X").symbol == "X"
        assert is_open_class(ts, "X") is True
        ts.add("CL", open_class=False)
        assert is_open_class(ts, "CL") is False
        with pytest.raises(UnknownTag):
            is_open_class(ts, "nope")

    def test_copy_is_independent_and_can_switch_mode(self):
        ts = TagSet(mode="strict")
        ts.add("N", description="noun")
        clone = ts.copy(mode="open")
        assert clone.symbols() == ["N"]
        assert clone.get("N").description == "noun"
        clone.resolve("V")
        assert "V" in clone
        assert "V" not in ts
        # same-mode copy keeps strictness
        strict_clone = ts.copy()
        with pytest.raises(UnknownTag):
            strict_clone.resolve("V")


class TestSinhalaTagset:
    def test_inventory_has_26_tags_plus_pseudo(self):
        ts = default_sinhala_tagset()
        assert len(ts) == 26 + len(DEFAULT_PSEUDO_TAGS)
        assert ts.symbols()[:6] == ["NNR", "NNM", "NNF", "NNN", "NNPA", "NNPI"]
        assert ts.symbols()[25] == "SYM"
        assert ts.symbols()[26:] == [".", ",", "!", "?"]

    def test_open_closed_split(self):
        ts = default_sinhala_tagset()
        for sym in ("NNM", "NNN", "VFM", "VP", "NVB", "JJ", "RB", "QFNUM"):
            assert is_open_class(ts, sym), sym
        for sym in ("PRPM", "PRPF", "PRPN", "PRPC", "DET", "RP", "POST", "CC"):
            assert not is_open_class(ts, sym), sym
        for p in DEFAULT_PSEUDO_TAGS:
            assert not is_open_class(ts, p)

    def test_descriptions_present(self):
        ts = default_sinhala_tagset()
        assert ts.get("NNM").description == "Common Noun Masculine"
        assert ts.get("VP").description == "Verb Participle"
        assert all(t.description for t in ts)


class TestTagsetFile:
    GOOD = "# comment\nN\topen\tNoun\nDET\tclosed\tDeterminer\n\nV\topen\n"

    def test_parse_good_file(self):
        ts = read_tagset_file(self.GOOD)
        assert ts.symbols() == ["N", "DET", "V"]
        assert ts.get("DET").open_class is False
        assert ts.get("N").description == "Noun"
        assert ts.get("V").description == ""
        assert ts.mode == "strict"

    def test_open_mode_flag(self):
        ts = read_tagset_file(self.GOOD, mode="open")
        ts.resolve("EXTRA")
        assert "EXTRA" in ts

    def test_bad_line_reports_line_number(self):
        with pytest.raises(MalformedTag) as err:
            read_tagset_file("N\topen\nbroken line\n")
        assert "line 2" in str(err.value)

    def test_bad_class_word_rejected(self):
        with pytest.raises(MalformedTag):
            read_tagset_file("N\tsometimes\n")

    def test_accepts_stream_and_bytes(self):
        import io

        assert read_tagset_file(io.StringIO(self.GOOD)).symbols() == ["N", "DET", "V"]
        assert read_tagset_file(self.GOOD.encode("utf-8")).symbols() == ["N", "DET", "V"]
