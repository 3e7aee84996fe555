"""Command-line front end: train, tag, eval, cv, inspect.

Exit codes: 0 success, 1 usage error, 2 data error (malformed corpus, bad
model file, missing file), 3 decode failure (unknown word or dead lattice
when that aborts the command). `-` means stdin (or stdout for outputs).
Set HMMTAG_COLOR=1 to color the text reports.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .corpus import parse_tagged_corpus, tokenize_raw
from .decoder import decode
from .errors import HmmtagError, NoPath, UnknownWord
from .evaluation import (
    EvalOptions,
    cross_validate,
    cv_to_dict,
    evaluate,
    report_to_dict,
    write_confusion_csv,
    write_folds_csv,
    write_per_tag_csv,
)
from .model import (
    HmmModel,
    SmoothingConfig,
    dump_model_bytes,
    load_model,
    load_model_bytes,
    save_model,
)
from .tagset import TagSet, default_sinhala_tagset, read_tagset_file
from .training import TrainConfig, train


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse wants to sys.exit(2) on bad flags; we map usage problems to
    # exit code 1 instead, so error() must raise
    def error(self, message):
        raise UsageError(message)


def _color_enabled() -> bool:
    return os.environ.get("HMMTAG_COLOR") == "1"


def _paint(text: str, code: str, enabled: bool) -> str:
    return f"\x1b[{code}m{text}\x1b[0m" if enabled else text


# --- argument plumbing ---

def _add_smoothing_flags(p, fold_k: bool = False) -> None:
    p.add_argument("--smoothing", choices=["none", "add-k"], default="none",
                   help="probability smoothing (default: none)")
    if fold_k:
        # cv uses --k for the fold count, so the smoothing constant gets its
        # long name only
        p.add_argument("--smooth-k", dest="smooth_k", type=float, default=1.0,
                       help="add-k constant (default: 1.0)")
    else:
        p.add_argument("--k", "--smooth-k", dest="smooth_k", type=float, default=1.0,
                       help="add-k constant (default: 1.0)")
    p.add_argument("--smooth", choices=["both", "transitions", "emissions"],
                   default="both", help="which estimates add-k touches")
    p.add_argument("--unknown", choices=["fail", "uniform", "open-class"],
                   default="fail", help="out-of-vocabulary word policy")


def _add_tagset_flags(p) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--tagset", metavar="FILE",
                       help="tag definition file (SYMBOL<TAB>open|closed<TAB>description)")
    group.add_argument("--sinhala-tagset", action="store_true",
                       help="use the bundled 26-tag Sinhala inventory")
    p.add_argument("--open-tagset", action="store_true",
                   help="with --tagset: admit tags beyond the file")


def _add_eval_flags(p) -> None:
    p.add_argument("--include-punct", action="store_true",
                   help="score punctuation tokens too (excluded by default)")
    p.add_argument("--on-error", choices=["skip", "abort"], default="skip",
                   help="what to do when a test sentence cannot be decoded")
    p.add_argument("--open-emissions", action="store_true",
                   help="let every tag be a candidate for known words")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--report-dir", metavar="DIR",
                   help="write report.json, CSV tables and PNG figures here")


def build_parser() -> _Parser:
    parser = _Parser(prog="hmmtag", description="HMM part-of-speech tagger")
    parser.add_argument("--version", action="version", version=f"hmmtag {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("train", help="train a model from a tagged corpus")
    p.add_argument("--corpus", required=True, help="tagged corpus file, or - for stdin")
    p.add_argument("--model", required=True, help="model file to write, or - for stdout")
    p.add_argument("--order", type=int, choices=[2, 3], default=3)
    p.add_argument("--eos", action="store_true",
                   help="model an explicit end-of-sentence transition")
    _add_smoothing_flags(p)
    _add_tagset_flags(p)
    p.set_defaults(func=_cmd_train)

    p = sub.add_parser("tag", help="tag raw text")
    p.add_argument("--model", required=True, help="model file, or - for stdin")
    p.add_argument("--input", default="-", help="raw text file (default: stdin)")
    p.add_argument("--output", default="-", help="tagged output file (default: stdout)")
    p.add_argument("--pretokenized", action="store_true",
                   help="input is one sentence per line, tokens whitespace-separated")
    p.add_argument("--open-emissions", action="store_true",
                   help="let every tag be a candidate for known words")
    _add_smoothing_flags(p)
    p.set_defaults(func=_cmd_tag)

    p = sub.add_parser("eval", help="evaluate a model on a tagged corpus")
    p.add_argument("--model", required=True)
    p.add_argument("--test", required=True, help="tagged test corpus, or - for stdin")
    _add_smoothing_flags(p)
    _add_eval_flags(p)
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("cv", help="k-fold cross-validation over a tagged corpus")
    p.add_argument("--corpus", required=True)
    p.add_argument("--k", type=int, default=10, help="fold count (default: 10)")
    p.add_argument("--seed", type=int, default=42, help="shuffle seed (default: 42)")
    p.add_argument("--order", type=int, choices=[2, 3], default=3)
    p.add_argument("--eos", action="store_true")
    _add_smoothing_flags(p, fold_k=True)
    _add_tagset_flags(p)
    _add_eval_flags(p)
    p.set_defaults(func=_cmd_cv)

    p = sub.add_parser("inspect", help="describe a model file")
    p.add_argument("--model", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_inspect)

    return parser


# --- shared IO helpers ---

def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _smoothing_from(args) -> SmoothingConfig:
    if args.smoothing == "none":
        return SmoothingConfig()
    return SmoothingConfig.add_k(
        args.smooth_k,
        transitions=args.smooth in ("both", "transitions"),
        emissions=args.smooth in ("both", "emissions"),
    )


def _unknown_from(args) -> str:
    return args.unknown.replace("-", "_")


def _tagset_from(args) -> TagSet | None:
    if args.sinhala_tagset:
        return default_sinhala_tagset()
    if args.tagset:
        with open(args.tagset, "r", encoding="utf-8") as fh:
            return read_tagset_file(fh, mode="open" if args.open_tagset else "strict")
    return None


def _load_model_arg(args) -> HmmModel:
    smoothing = _smoothing_from(args) if hasattr(args, "smoothing") else None
    unknown = _unknown_from(args) if hasattr(args, "unknown") else None
    if args.model == "-":
        return load_model_bytes(sys.stdin.buffer.read(), smoothing=smoothing,
                                unknown=unknown)
    return load_model(args.model, smoothing=smoothing, unknown=unknown)


# --- subcommands ---

def _cmd_train(args) -> int:
    # validate configuration before touching any file
    config = TrainConfig(
        order=args.order,
        smoothing=_smoothing_from(args),
        unknown=_unknown_from(args),
        model_eos=args.eos,
    )
    ts = _tagset_from(args)
    corpus = parse_tagged_corpus(_read_text(args.corpus), ts or TagSet(mode="open"))
    model = train(corpus, config)
    if args.model == "-":
        sys.stdout.buffer.write(dump_model_bytes(model))
        sys.stdout.buffer.flush()
    else:
        save_model(model, args.model)
    print(
        f"trained order-{model.order} model: {corpus.sentence_count} sentences, "
        f"{corpus.token_count} tokens, {len(model.counts.tag_unigrams)} tags, "
        f"{corpus.vocabulary_size} distinct words",
        file=sys.stderr,
    )
    return 0


def _cmd_tag(args) -> int:
    model = _load_model_arg(args)
    text = _read_text(args.input)
    if args.pretokenized:
        sentences = [line.split() for line in text.splitlines() if line.strip()]
    else:
        sentences = tokenize_raw(text)
    out_lines = []
    for n, words in enumerate(sentences, start=1):
        try:
            path = decode(model, words, open_emissions=args.open_emissions)
        except (UnknownWord, NoPath) as exc:
            print(f"hmmtag: sentence {n}: {exc}", file=sys.stderr)
            if isinstance(exc, UnknownWord):
                print("hmmtag: hint: retry with --unknown uniform or --unknown open-class",
                      file=sys.stderr)
            else:
                print("hmmtag: hint: retry with --smoothing add-k", file=sys.stderr)
            return 3
        out_lines.append(" ".join(f"{w}_{t}" for w, t in zip(words, path.tags)))
    _write_text(args.output, "".join(line + "\n" for line in out_lines))
    return 0


def _render_matrix_text(matrix, color: bool) -> list:
    if matrix is None or not matrix.labels:
        return ["confusion matrix: (no pairs)"]
    labels = matrix.labels
    rows = matrix.to_rows()
    width = max(max(len(l) for l in labels), 5)
    head = " " * (width + 2) + " ".join(l.rjust(width) for l in labels)
    lines = ["confusion matrix (rows: actual, columns: predicted):", head]
    for label, row in zip(labels, rows):
        cells = []
        for i, count in enumerate(row):
            text = str(count).rjust(width)
            if count and labels.index(label) == i:
                text = _paint(text, "32", color)  # diagonal hits in green
            elif count:
                text = _paint(text, "31", color)
            cells.append(text)
        lines.append(label.rjust(width) + "  " + " ".join(cells))
    return lines


def _render_report_text(report, color: bool) -> str:
    lines = []
    if report.accuracy_pct is None:
        lines.append("accuracy: n/a (no scored pairs)")
    else:
        headline = f"accuracy: {report.accuracy_pct:.2f}% ({report.correct}/{report.total})"
        lines.append(_paint(headline, "1;32", color))
    if report.known_total or report.unknown_total:
        known = report.known_word_accuracy_pct
        lines.append(
            f"known words: {report.known_total}"
            + (f" ({known:.2f}% correct)" if known is not None else "")
        )
        unknown = report.unknown_word_accuracy_pct
        lines.append(
            f"unknown words: {report.unknown_total}"
            + (f" ({unknown:.2f}% correct)" if unknown is not None else "")
        )
    if report.skipped_sentences:
        lines.append(f"skipped sentences: {report.skipped_sentences}")
    if report.per_tag:
        lines.append("per-tag accuracy:")
        for tag, (c, t) in report.per_tag.items():
            pct = 100.0 * c / t if t else 0.0
            lines.append(f"  {tag:<8} {c}/{t} ({pct:.2f}%)")
    lines.extend(_render_matrix_text(report.matrix, color))
    return "\n".join(lines) + "\n"


def _write_report_files(report_dir: str, payload: dict, report, cv=None) -> None:
    os.makedirs(report_dir, exist_ok=True)
    with open(os.path.join(report_dir, "report.json"), "w", encoding="utf-8") as fh:
        json.dump(payload, fh, ensure_ascii=False, indent=2)
        fh.write("\n")
    write_confusion_csv(report.matrix, os.path.join(report_dir, "confusion.csv"))
    write_per_tag_csv(report, os.path.join(report_dir, "per_tag.csv"))
    # figures are the slow part, so matplotlib loads only on this path
    from . import figures

    figures.confusion_heatmap(report.matrix, os.path.join(report_dir, "confusion.png"))
    figures.per_tag_bars(report, os.path.join(report_dir, "per_tag.png"))
    if cv is not None:
        write_folds_csv(cv, os.path.join(report_dir, "folds.csv"))
        figures.fold_bars(cv, os.path.join(report_dir, "folds.png"))


def _cmd_eval(args) -> int:
    options = EvalOptions(
        exclude_punct=not args.include_punct,
        on_decode_error=args.on_error,
        open_emissions=args.open_emissions,
    )
    model = _load_model_arg(args)
    # reopen the model's tag set so gold tags outside its inventory still parse
    test = parse_tagged_corpus(_read_text(args.test), model.tagset.copy(mode="open"))
    report = evaluate(model, test, options)
    payload = report_to_dict(report)
    if args.report_dir:
        _write_report_files(args.report_dir, payload, report)
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        sys.stdout.write(_render_report_text(report, _color_enabled()))
    return 0


def _cmd_cv(args) -> int:
    options = EvalOptions(
        exclude_punct=not args.include_punct,
        on_decode_error=args.on_error,
        open_emissions=args.open_emissions,
    )
    config = TrainConfig(
        order=args.order,
        smoothing=_smoothing_from(args),
        unknown=_unknown_from(args),
        model_eos=args.eos,
        tagset=_tagset_from(args),
    )
    if args.k < 2:
        raise UsageError("--k must be at least 2")
    corpus = parse_tagged_corpus(
        _read_text(args.corpus), config.tagset or TagSet(mode="open")
    )
    cv = cross_validate(corpus, k=args.k, seed=args.seed, config=config,
                        options=options)
    payload = cv_to_dict(cv)
    if args.report_dir:
        _write_report_files(args.report_dir, payload, cv.micro, cv=cv)
    if args.json:
        print(json.dumps(payload, ensure_ascii=False, indent=2))
    else:
        color = _color_enabled()
        lines = [f"{cv.k}-fold cross-validation (seed {cv.seed})"]
        for i, fold in enumerate(cv.folds):
            pct = fold.accuracy_pct
            shown = f"{pct:.2f}%" if pct is not None else "n/a"
            lines.append(
                f"  fold {i}: {shown} ({fold.correct}/{fold.total}"
                + (f", {fold.skipped_sentences} skipped" if fold.skipped_sentences else "")
                + ")"
            )
        if cv.macro_accuracy_pct is not None:
            lines.append(f"macro average: {cv.macro_accuracy_pct:.2f}%")
        sys.stdout.write("\n".join(lines) + "\n")
        sys.stdout.write(_render_report_text(cv.micro, color))
    return 0


def _cmd_inspect(args) -> int:
    model = _load_model_arg(args)
    counts = model.counts
    info = {
        "format_version": model.format_version,
        "order": model.order,
        "model_eos": model.model_eos,
        "tag_count": len(model.tagset),
        "tags": [
            {"symbol": t.symbol, "open_class": t.open_class} for t in model.tagset
        ],
        "vocabulary_size": len(counts.vocabulary),
        "sentence_count": counts.sentence_count,
        "token_count": counts.token_count,
        "ngram_records": len(counts.ngrams),
        "emission_records": len(counts.emissions),
    }
    if args.json:
        print(json.dumps(info, ensure_ascii=False, indent=2))
        return 0
    color = _color_enabled()
    print(_paint(f"hmmtag model, format {info['format_version']}", "1", color))
    print(f"order: {info['order']}")
    print(f"end-of-sentence modeling: {'on' if info['model_eos'] else 'off'}")
    print(f"sentences: {info['sentence_count']}, tokens: {info['token_count']}")
    print(f"vocabulary: {info['vocabulary_size']} distinct words")
    print(f"n-gram records: {info['ngram_records']}, "
          f"emission records: {info['emission_records']}")
    print(f"tags ({info['tag_count']}):")
    for t in model.tagset:
        kind = "open" if t.open_class else "closed"
        print(f"  {t.index:>3} {t.symbol:<8} {kind}")
    return 0


# --- driver ---

def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"hmmtag: {exc}", file=sys.stderr)
        print("hmmtag: try --help for usage", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help and --version exit this way
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"hmmtag: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"hmmtag: {exc}", file=sys.stderr)
        return 1
    except (UnknownWord, NoPath) as exc:
        print(f"hmmtag: {exc}", file=sys.stderr)
        return 3
    except HmmtagError as exc:
        print(f"hmmtag: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"hmmtag: {exc}", file=sys.stderr)
        return 2


def main(argv=None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))
