"""Corpus training, top-N keyphrase extraction and precision/recall scoring."""
from __future__ import annotations

import logging
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Collection, Iterable, Optional, Sequence, Union

import numpy as np

from .candidates import CandidateOccurrence, extract_candidates
from .errors import UnmatchableGoldWarning
from .features import FeatureVector, build_feature_vectors, feature_matrix
from .lexicon import Lexicon
from .model import DEFAULT_EPSILON, LdaModel, Mask, train_lda
from .segmentation import analyze_text, normalize_text

log = logging.getLogger(__name__)

PathLike = Union[str, os.PathLike]
DEFAULT_N_LIST = (5, 7, 10)


@dataclass(frozen=True)
class ExtractedKeyphrase:
    surface: str
    abstract: str
    score: float
    rank: int


@dataclass(frozen=True)
class EvalResult:
    a: int
    b: int
    c: int
    precision: float
    recall: float
    n_requested: int = 0


@dataclass
class TrainingSummary:
    documents: int = 0
    candidates: int = 0
    positives: int = 0
    negatives: int = 0
    unmatched_gold: list[tuple[str, str]] = field(default_factory=list)


@dataclass(frozen=True)
class EvalRow:
    n: int
    mean_precision: float
    mean_recall: float
    doc_count: int


@dataclass
class EvaluationTable:
    rows: list[EvalRow]
    per_document: dict[str, dict[int, EvalResult]]


def read_text(path: PathLike) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def read_gold(path: PathLike) -> list[str]:
    """Gold keyphrases, one per line; blank lines ignored."""
    phrases = [line.strip() for line in read_text(path).splitlines()]
    phrases = [p for p in phrases if p]
    if not phrases:
        raise ValueError(f"gold file is empty: {path}")
    return phrases


def phrase_abstract(phrase: str, lexicon: Lexicon) -> str:
    """Abstract form of a free-text phrase, word by word."""
    words = normalize_text(phrase).split()
    return " ".join(lexicon.analyze(w).abstract for w in words)


def gold_abstracts(phrases: Iterable[str], lexicon: Lexicon) -> set[str]:
    out = {phrase_abstract(p, lexicon) for p in phrases}
    out.discard("")
    return out


def doc_id_for(path: PathLike) -> str:
    return Path(path).stem


def document_vectors(
    text: str,
    lexicon: Lexicon,
    doc_id: str = "",
    gold: Optional[Collection[str]] = None,
    oov_as_noun: bool = False,
) -> list[FeatureVector]:
    doc = analyze_text(text, lexicon, doc_id)
    candidates = extract_candidates(doc, oov_as_noun=oov_as_noun)
    return build_feature_vectors(doc, candidates, gold)


def labelled_corpus_vectors(
    doc_paths: Sequence[PathLike],
    gold_paths: Sequence[PathLike],
    lexicon: Lexicon,
    oov_as_noun: bool = False,
) -> tuple[list[FeatureVector], TrainingSummary]:
    if len(doc_paths) != len(gold_paths):
        raise ValueError(
            f"{len(doc_paths)} documents but {len(gold_paths)} gold files"
        )
    summary = TrainingSummary()
    vectors: list[FeatureVector] = []
    for doc_path, gold_path in zip(doc_paths, gold_paths):
        doc_id = doc_id_for(doc_path)
        gold_phrases = read_gold(gold_path)
        gold = gold_abstracts(gold_phrases, lexicon)
        vecs = document_vectors(
            read_text(doc_path), lexicon, doc_id, gold, oov_as_noun=oov_as_noun
        )
        seen = {v.candidate.abstract for v in vecs}
        for phrase in gold_phrases:
            if phrase_abstract(phrase, lexicon) not in seen:
                summary.unmatched_gold.append((doc_id, phrase))
                warnings.warn(
                    f"unmatchable gold in {doc_id}: {phrase!r}",
                    UnmatchableGoldWarning,
                    stacklevel=2,
                )
        vectors.extend(vecs)
        summary.documents += 1
    summary.candidates = len(vectors)
    summary.positives = sum(1 for v in vectors if v.is_key)
    summary.negatives = summary.candidates - summary.positives
    return vectors, summary


def train_from_corpus(
    doc_paths: Sequence[PathLike],
    gold_paths: Sequence[PathLike],
    lexicon: Lexicon,
    mask: Union[Mask, str, None] = None,
    epsilon: float = DEFAULT_EPSILON,
    oov_as_noun: bool = False,
) -> tuple[LdaModel, TrainingSummary]:
    vectors, summary = labelled_corpus_vectors(
        doc_paths, gold_paths, lexicon, oov_as_noun=oov_as_noun
    )
    log.info(
        "training on %d candidates (%d positive, %d negative)",
        summary.candidates,
        summary.positives,
        summary.negatives,
    )
    return train_lda(vectors, mask=mask, epsilon=epsilon), summary


def rank_candidates(
    candidates: Sequence[CandidateOccurrence], scores: Sequence[float], n_requested: int
) -> list[ExtractedKeyphrase]:
    """Keep the best occurrence per abstract form and return the top groups.

    Ties are broken by earlier position, then shorter surface, then the
    abstract string itself.
    """
    if n_requested < 1:
        raise ValueError("n_requested must be >= 1")
    best: dict[str, tuple[float, CandidateOccurrence]] = {}
    for cand, s in zip(candidates, scores):
        s = float(s)
        held = best.get(cand.abstract)
        # candidates arrive in document order, so strict > keeps the earliest
        if held is None or s > held[0]:
            best[cand.abstract] = (s, cand)
    ordered = sorted(
        best.values(),
        key=lambda sc: (-sc[0], sc[1].position, len(sc[1].surface), sc[1].abstract),
    )
    return [
        ExtractedKeyphrase(c.surface, c.abstract, s, rank)
        for rank, (s, c) in enumerate(ordered[:n_requested], start=1)
    ]


def extract_keyphrases(
    doc_text: str,
    lexicon: Lexicon,
    model: LdaModel,
    n_requested: int = 10,
    doc_id: str = "",
    oov_as_noun: bool = False,
) -> list[ExtractedKeyphrase]:
    if n_requested < 1:
        raise ValueError("n_requested must be >= 1")
    vectors = document_vectors(doc_text, lexicon, doc_id, oov_as_noun=oov_as_noun)
    if not vectors:
        return []
    scores = model.scores(model.select(feature_matrix(vectors)))
    return rank_candidates([v.candidate for v in vectors], scores, n_requested)


def extract_many(
    texts: Sequence[tuple[str, str]],
    lexicon: Lexicon,
    model: LdaModel,
    n_requested: int = 10,
    oov_as_noun: bool = False,
    jobs: int = 1,
) -> list[list[ExtractedKeyphrase]]:
    """Extract from ``(doc_id, text)`` pairs, results in input order."""

    def run(item):
        doc_id, text = item
        return extract_keyphrases(text, lexicon, model, n_requested, doc_id, oov_as_noun)

    if jobs <= 1:
        return [run(item) for item in texts]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run, texts))


def precision_recall(
    predicted: Iterable[Union[ExtractedKeyphrase, str]],
    gold_abstracts: Collection[str],
) -> EvalResult:
    pred = [p.abstract if isinstance(p, ExtractedKeyphrase) else p for p in predicted]
    pred_set = set(pred)
    gold = set(gold_abstracts)
    a = len(pred_set & gold)
    b = len(pred_set - gold)
    c = len(gold - pred_set)
    return EvalResult(
        a=a,
        b=b,
        c=c,
        precision=a / (a + b) if a + b else 0.0,
        recall=a / (a + c) if a + c else 0.0,
        n_requested=len(pred),
    )


def evaluate_corpus(
    doc_paths: Sequence[PathLike],
    gold_paths: Sequence[PathLike],
    lexicon: Lexicon,
    model: LdaModel,
    n_list: Sequence[int] = DEFAULT_N_LIST,
    oov_as_noun: bool = False,
) -> EvaluationTable:
    """Unweighted per-document mean precision and recall for each N."""
    if len(doc_paths) != len(gold_paths):
        raise ValueError(
            f"{len(doc_paths)} documents but {len(gold_paths)} gold files"
        )
    n_list = list(n_list)
    if not n_list or min(n_list) < 1:
        raise ValueError("every N must be >= 1")
    per_doc: dict[str, dict[int, EvalResult]] = {}
    top = max(n_list)
    for doc_path, gold_path in zip(doc_paths, gold_paths):
        doc_id = doc_id_for(doc_path)
        gold = gold_abstracts(read_gold(gold_path), lexicon)
        ranked = extract_keyphrases(
            read_text(doc_path), lexicon, model, top, doc_id, oov_as_noun
        )
        results = {}
        for n in n_list:
            r = precision_recall(ranked[:n], gold)
            results[n] = EvalResult(r.a, r.b, r.c, r.precision, r.recall, n)
        per_doc[doc_id] = results
    rows = []
    for n in n_list:
        ps = [res[n].precision for res in per_doc.values()]
        rs = [res[n].recall for res in per_doc.values()]
        rows.append(
            EvalRow(
                n=n,
                mean_precision=float(np.mean(ps)) if ps else 0.0,
                mean_recall=float(np.mean(rs)) if rs else 0.0,
                doc_count=len(ps),
            )
        )
    return EvaluationTable(rows=rows, per_document=per_doc)


def corpus_pairs(root: PathLike) -> tuple[list[Path], list[Path]]:
    """Pair ``docs/<id>.txt`` with ``gold/<id>.keys`` under ``root``."""
    root = Path(root)
    docs = sorted((root / "docs").glob("*.txt"))
    golds = [root / "gold" / f"{d.stem}.keys" for d in docs]
    missing = [str(g) for g in golds if not g.is_file()]
    if missing:
        raise FileNotFoundError(f"missing gold file: {missing[0]}")
    return docs, golds
