from hmmtag.evaluation import build_report, cross_validate
from hmmtag.figures import confusion_heatmap, fold_bars, per_tag_bars
from hmmtag.fixtures import deterministic_corpus, table2_pairs
from hmmtag.training import TrainConfig

PNG_MAGIC = b"\x89PNG\r\n\x1a\n"


def assert_png(path):
    data = path.read_bytes()
    assert data.startswith(PNG_MAGIC)
    assert len(data) > 1000


class TestConfusionHeatmap:
    def test_renders_reference_matrix(self, tmp_path):
        report = build_report(table2_pairs())
        out = tmp_path / "confusion.png"
        assert confusion_heatmap(report.matrix, out) == out
        assert_png(out)

    def test_handles_missing_matrix(self, tmp_path):
        out = tmp_path / "empty.png"
        confusion_heatmap(None, out)
        assert_png(out)


class TestPerTagBars:
    def test_renders(self, tmp_path):
        report = build_report(table2_pairs())
        out = tmp_path / "per_tag.png"
        per_tag_bars(report, out)
        assert_png(out)

    def test_handles_empty_report(self, tmp_path):
        out = tmp_path / "empty.png"
        per_tag_bars(build_report([]), out)
        assert_png(out)


class TestFoldBars:
    def test_renders(self, tmp_path):
        corpus = deterministic_corpus()
        cv = cross_validate(
            corpus, k=2, seed=1, config=TrainConfig(unknown="uniform")
        )
        out = tmp_path / "folds.png"
        fold_bars(cv, out)
        assert_png(out)
