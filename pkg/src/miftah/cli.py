"""Command-line entry point: ``miftah {train,extract,evaluate,anova}``.

Exit codes: 0 success, 1 input or I/O error, 2 statistical degeneracy.
Data goes to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .errors import (
    DegenerateTrainingError,
    LexiconFormatError,
    ModelFormatError,
    SingularCovarianceError,
    UnmatchableGoldWarning,
)
from .features import FEATURE_LABELS, FEATURE_NAMES
from .lexicon import Lexicon, load_lexicon, mini_lexicon_path
from .model import (
    DEFAULT_ANOVA_ORDER,
    DEFAULT_EPSILON,
    anova_report,
    load_model,
    parse_mask,
    save_model,
)
from .pipeline import (
    DEFAULT_N_LIST,
    doc_id_for,
    evaluate_corpus,
    extract_many,
    labelled_corpus_vectors,
    read_text,
    train_from_corpus,
)

LEXICON_ENV = "MIFTAH_LEXICON"

log = logging.getLogger("miftah")


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    lexicon_path: str
    model_path: Optional[str] = None
    doc_paths: list[Path] = field(default_factory=list)
    gold_paths: list[Path] = field(default_factory=list)
    n_list: list[int] = field(default_factory=lambda: [10])
    mask: Optional[str] = None
    epsilon: float = DEFAULT_EPSILON
    oov_as_noun: bool = False
    precise: bool = False
    jobs: int = 1


def _fmt(x: float, precise: bool) -> str:
    return f"{x:.17g}" if precise else f"{x:.3f}"


def _parse_n(spec: str) -> list[int]:
    try:
        values = [int(s) for s in spec.split(",") if s.strip()]
    except ValueError:
        raise InputError(f"--n expects comma-separated integers, got {spec!r}") from None
    if not values or min(values) < 1:
        raise InputError("--n values must be >= 1")
    return values


def _expand_docs(args: Sequence[str]) -> list[Path]:
    out = []
    for a in args:
        p = Path(a)
        if p.is_dir():
            out.extend(sorted(p.glob("*.txt")))
        elif p.is_file():
            out.append(p)
        else:
            raise InputError(f"no such document: {p}")
    return out


def _resolve_gold(docs: list[Path], doc_args: Sequence[str], gold_args: Optional[Sequence[str]]) -> list[Path]:
    if not gold_args:
        # corpus layout: docs/<id>.txt beside gold/<id>.keys
        dirs = [Path(a) for a in doc_args if Path(a).is_dir()]
        if len(dirs) != 1:
            raise InputError("--gold is required unless --docs is a single corpus directory")
        gold_args = [str(dirs[0].parent / "gold")]
    if len(gold_args) == 1 and Path(gold_args[0]).is_dir():
        golds = [Path(gold_args[0]) / f"{d.stem}.keys" for d in docs]
    else:
        golds = [Path(g) for g in gold_args]
        if len(golds) != len(docs):
            raise InputError(f"{len(docs)} documents but {len(golds)} gold files")
    for g in golds:
        if not g.is_file():
            raise InputError(f"missing gold file: {g}")
    return golds


def _resolve_lexicon(arg: Optional[str]) -> str:
    path = arg or os.environ.get(LEXICON_ENV) or mini_lexicon_path()
    if not Path(path).is_file():
        raise InputError(f"lexicon not found: {path}")
    return path


def build_config(ns: argparse.Namespace) -> RunConfig:
    """Validate every input path and option before any work starts."""
    cfg = RunConfig(
        command=ns.command,
        lexicon_path=_resolve_lexicon(ns.lexicon),
        model_path=ns.model,
        mask=ns.mask,
        epsilon=ns.epsilon,
        oov_as_noun=ns.oov_as_noun,
        precise=ns.precise,
        jobs=ns.jobs,
    )
    if cfg.epsilon <= 0:
        raise InputError("--epsilon must be > 0")
    if cfg.jobs < 1:
        raise InputError("--jobs must be >= 1")
    if cfg.mask is not None:
        try:
            parse_mask(cfg.mask)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    if not ns.docs:
        raise InputError("--docs is required")
    cfg.doc_paths = _expand_docs(ns.docs)
    if cfg.command in ("train", "evaluate", "anova"):
        cfg.gold_paths = _resolve_gold(cfg.doc_paths, ns.docs, ns.gold)
        if not cfg.doc_paths:
            raise InputError("no documents found")
    if cfg.command in ("train", "extract", "evaluate") and not cfg.model_path:
        raise InputError("--model is required")
    if cfg.command in ("extract", "evaluate") and not Path(cfg.model_path).is_file():
        raise InputError(f"model not found: {cfg.model_path}")
    if cfg.command == "extract":
        cfg.n_list = _parse_n(ns.n or "10")
        if len(cfg.n_list) != 1:
            raise InputError("extract takes a single --n value")
    elif cfg.command == "evaluate":
        cfg.n_list = _parse_n(ns.n or ",".join(map(str, DEFAULT_N_LIST)))
    return cfg


def cmd_train(cfg: RunConfig, lexicon: Lexicon, out) -> int:
    model, summary = train_from_corpus(
        cfg.doc_paths,
        cfg.gold_paths,
        lexicon,
        mask=cfg.mask,
        epsilon=cfg.epsilon,
        oov_as_noun=cfg.oov_as_noun,
    )
    save_model(model, cfg.model_path)
    print(f"documents\t{summary.documents}", file=out)
    print(f"candidates\t{summary.candidates}", file=out)
    print(f"positives\t{summary.positives}", file=out)
    print(f"negatives\t{summary.negatives}", file=out)
    return 0


def cmd_extract(cfg: RunConfig, lexicon: Lexicon, out) -> int:
    model = load_model(cfg.model_path)
    if len(model.mask) != len(FEATURE_NAMES):
        raise ModelFormatError(
            f"model mask has {len(model.mask)} entries; lexicon pipeline produces "
            f"{len(FEATURE_NAMES)} features"
        )
    texts = [(doc_id_for(p), read_text(p)) for p in cfg.doc_paths]
    results = extract_many(
        texts, lexicon, model, cfg.n_list[0], cfg.oov_as_noun, jobs=cfg.jobs
    )
    for (doc_id, _), phrases in zip(texts, results):
        print(f"# doc: {doc_id}", file=out)
        for kp in phrases:
            print(f"{kp.rank}\t{_fmt(kp.score, cfg.precise)}\t{kp.surface}", file=out)
    return 0


def cmd_evaluate(cfg: RunConfig, lexicon: Lexicon, out) -> int:
    model = load_model(cfg.model_path)
    table = evaluate_corpus(
        cfg.doc_paths, cfg.gold_paths, lexicon, model, cfg.n_list, cfg.oov_as_noun
    )
    print("# n\tmean_P\tmean_R\tdoc_count", file=out)
    for row in table.rows:
        print(
            f"{row.n}\t{_fmt(row.mean_precision, cfg.precise)}\t"
            f"{_fmt(row.mean_recall, cfg.precise)}\t{row.doc_count}",
            file=out,
        )
    return 0


def cmd_anova(cfg: RunConfig, lexicon: Lexicon, out) -> int:
    vectors, _ = labelled_corpus_vectors(
        cfg.doc_paths, cfg.gold_paths, lexicon, oov_as_noun=cfg.oov_as_noun
    )
    if cfg.mask:
        order = [s.strip().lower() for s in cfg.mask.split(",") if s.strip()]
    else:
        order = list(DEFAULT_ANOVA_ORDER)
    report = anova_report(vectors, order)
    print("# feature\tR2", file=out)
    for name, r2 in zip(FEATURE_NAMES, report.single_r2):
        print(f"{name} ({FEATURE_LABELS[name]})\t{_fmt(r2, cfg.precise)}", file=out)
    print("# model\taccumulated_R2", file=out)
    for subset, r2 in report.accumulated:
        print(f"{','.join(subset)}\t{_fmt(r2, cfg.precise)}", file=out)
    for subset in report.rank_deficient:
        log.warning("rank-deficient design for %s", ",".join(subset))
    return 0


COMMANDS = {
    "train": cmd_train,
    "extract": cmd_extract,
    "evaluate": cmd_evaluate,
    "anova": cmd_anova,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lexicon", help=f"lexicon TSV (default: ${LEXICON_ENV}, then the bundled mini-lexicon)")
    common.add_argument("--model", help="model file to write (train) or read")
    common.add_argument("--docs", nargs="+", help="document files or directories of *.txt")
    common.add_argument("--gold", nargs="+", help="gold .keys files, or one gold directory")
    common.add_argument("--n", help="keyphrases per document; comma list for evaluate")
    common.add_argument("--mask", help="comma-separated features, e.g. x5,x6,x2,x1,x4,x8")
    common.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    common.add_argument("--oov-as-noun", action="store_true")
    common.add_argument("--precise", action="store_true", help="print reals with 17 significant digits")
    common.add_argument("--jobs", type=int, default=1, help="worker threads for extraction")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="miftah", description="Supervised keyphrase extraction.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("train", parents=[common], help="train an LDA model on a labelled corpus")
    sub.add_parser("extract", parents=[common], help="extract ranked keyphrases")
    sub.add_parser("evaluate", parents=[common], help="mean precision/recall per N")
    sub.add_parser("anova", parents=[common], help="per-feature and accumulated R^2")
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    logging.basicConfig(
        level=logging.INFO if ns.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        cfg = build_config(ns)
        lexicon = load_lexicon(cfg.lexicon_path)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", UnmatchableGoldWarning)
            code = COMMANDS[cfg.command](cfg, lexicon, out)
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        return code
    except (DegenerateTrainingError, SingularCovarianceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InputError, LexiconFormatError, ModelFormatError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
