"""Report figures rendered to image files.

Uses the Agg backend so rendering works headless; nothing here opens a
window. Each function writes one file and returns its path.
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)

from .evaluation import ConfusionMatrix, CvResult, EvalReport  # noqa: E402


def confusion_heatmap(matrix: ConfusionMatrix | None, path, title: str = "Confusion matrix"):
    fig, ax = plt.subplots(figsize=(6.4, 5.6))
    if matrix is None or not matrix.labels:
        ax.text(0.5, 0.5, "no pairs", ha="center", va="center")
        ax.set_axis_off()
    else:
        rows = matrix.to_rows()
        im = ax.imshow(rows, cmap="Blues")
        n = len(matrix.labels)
        ax.set_xticks(range(n), matrix.labels, rotation=45, ha="right")
        ax.set_yticks(range(n), matrix.labels)
        ax.set_xlabel("predicted")
        ax.set_ylabel("actual")
        peak = max(max(r) for r in rows) or 1
        for i, row in enumerate(rows):
            for j, count in enumerate(row):
                if count:
                    color = "white" if count > peak / 2 else "black"
                    ax.text(j, i, str(count), ha="center", va="center", color=color)
        fig.colorbar(im, ax=ax, shrink=0.8)
    ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def per_tag_bars(report: EvalReport, path, title: str = "Per-tag accuracy"):
    fig, ax = plt.subplots(figsize=(6.4, 0.5 + 0.4 * max(len(report.per_tag), 1)))
    if not report.per_tag:
        ax.text(0.5, 0.5, "no pairs", ha="center", va="center")
        ax.set_axis_off()
    else:
        tags = list(report.per_tag)
        pcts = [100.0 * c / t if t else 0.0 for c, t in report.per_tag.values()]
        ypos = range(len(tags))
        ax.barh(ypos, pcts, color="#4878a8")
        ax.set_yticks(ypos, tags)
        ax.invert_yaxis()
        ax.set_xlim(0, 100)
        ax.set_xlabel("accuracy (%)")
        for y, (tag, pct) in enumerate(zip(tags, pcts)):
            c, t = report.per_tag[tag]
            ax.text(min(pct + 1, 99), y, f"{c}/{t}", va="center", fontsize=8)
    ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def fold_bars(cv: CvResult, path, title: str = "Cross-validation folds"):
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    pcts = [r.accuracy_pct or 0.0 for r in cv.folds]
    xpos = range(len(pcts))
    ax.bar(xpos, pcts, color="#4878a8")
    ax.set_xticks(xpos, [str(i) for i in xpos])
    ax.set_ylim(0, 100)
    ax.set_xlabel("fold")
    ax.set_ylabel("accuracy (%)")
    micro = cv.micro.accuracy_pct
    if micro is not None:
        ax.axhline(micro, color="#a84848", linestyle="--", linewidth=1.2)
        ax.text(
            len(pcts) - 0.5, micro + 1, f"micro {micro:.2f}%", color="#a84848",
            ha="right", fontsize=8,
        )
    ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
