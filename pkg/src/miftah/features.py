"""The eight per-candidate features and the training label.

Feature order is fixed::

    x1 NPW    1 / number of words in the phrase
    x2 NPLen  phrase length / sentence length
    x3 NPL    position of the phrase inside its sentence, U-shaped
    x4 NSL    position of the sentence inside the document, U-shaped
    x5 PRF    phrase frequency relative to the most frequent phrase
    x6 WRF    best relative frequency among the phrase's words
    x7 SCV    1 if the sentence has no verb
    x8 IIT    1 if the sentence is a question

Frequencies are counted on abstract forms, so inflected variants of the same
phrase pool their counts.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Collection, Iterable, Optional, Sequence

import numpy as np

from .candidates import CandidateOccurrence
from .segmentation import AnalyzedDocument, Sentence

FEATURE_NAMES = ("x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8")
FEATURE_LABELS = {
    "x1": "NPW",
    "x2": "NPLen",
    "x3": "NPL",
    "x4": "NSL",
    "x5": "PRF",
    "x6": "WRF",
    "x7": "SCV",
    "x8": "IIT",
}


@dataclass(frozen=True)
class FeatureVector:
    x1_npw: float
    x2_nplen: float
    x3_npl: float
    x4_nsl: float
    x5_prf: float
    x6_wrf: float
    x7_scv: float
    x8_iit: float
    is_key: Optional[bool] = None
    candidate: Optional[CandidateOccurrence] = field(default=None, compare=False)

    def values(self) -> tuple[float, ...]:
        return (
            self.x1_npw,
            self.x2_nplen,
            self.x3_npl,
            self.x4_nsl,
            self.x5_prf,
            self.x6_wrf,
            self.x7_scv,
            self.x8_iit,
        )

    def as_array(self) -> np.ndarray:
        return np.array(self.values(), dtype=float)


@dataclass
class DocumentFrequencyIndex:
    phrase_freq: dict[str, int] = field(default_factory=dict)
    max_phrase_freq: int = 0
    word_freq: dict[str, float] = field(default_factory=dict)


def build_frequency_index(candidates: Iterable[CandidateOccurrence]) -> DocumentFrequencyIndex:
    phrase_counts: Counter[str] = Counter()
    word_counts: Counter[str] = Counter()
    for c in candidates:
        phrase_counts[c.abstract] += 1
        word_counts.update(c.abstract_words)
    if not phrase_counts:
        return DocumentFrequencyIndex()
    max_word = max(word_counts.values())
    return DocumentFrequencyIndex(
        phrase_freq=dict(phrase_counts),
        max_phrase_freq=max(phrase_counts.values()),
        word_freq={w: n / max_word for w, n in word_counts.items()},
    )


def npw(length: int) -> float:
    return 1.0 / length


def prf(candidate: CandidateOccurrence, index: DocumentFrequencyIndex) -> float:
    return index.phrase_freq[candidate.abstract] / index.max_phrase_freq


def wrf(candidate: CandidateOccurrence, index: DocumentFrequencyIndex) -> float:
    return max(index.word_freq[w] for w in candidate.abstract_words)


def _u_shape(position: int, count: int) -> float:
    # (2t - 1)^2 with t = position / (count - 1), kept in integers until the
    # final division so mirrored positions give bit-identical values
    if count <= 1:
        return 1.0
    span = count - 1
    u = 2 * position - span
    return (u * u) / (span * span)


def nsl(sentence_index: int, sentence_count: int) -> float:
    return _u_shape(sentence_index, sentence_count)


def npl(start_word_index: int, word_count: int) -> float:
    return _u_shape(start_word_index, word_count)


def nplen(length: int, word_count: int) -> float:
    return length / word_count


def scv(sentence: Sentence) -> float:
    return 0.0 if sentence.contains_verb else 1.0


def iit(sentence: Sentence) -> float:
    return 1.0 if sentence.is_question else 0.0


def mark_is_key(candidate: CandidateOccurrence, gold_abstracts: Collection[str]) -> bool:
    return candidate.abstract in gold_abstracts


def build_feature_vectors(
    doc: AnalyzedDocument,
    candidates: Sequence[CandidateOccurrence],
    gold: Optional[Collection[str]] = None,
) -> list[FeatureVector]:
    """One vector per candidate occurrence, in candidate order.

    ``gold`` holds abstract forms of the reference keyphrases; when given,
    ``is_key`` is filled in for every vector.
    """
    if not candidates:
        return []
    index = build_frequency_index(candidates)
    m = doc.sentence_count
    out = []
    for c in candidates:
        sentence = doc.sentences[c.sentence_index]
        n = sentence.word_count
        out.append(
            FeatureVector(
                x1_npw=npw(c.length),
                x2_nplen=nplen(c.length, n),
                x3_npl=npl(c.start_word_index, n),
                x4_nsl=nsl(c.sentence_index, m),
                x5_prf=prf(c, index),
                x6_wrf=wrf(c, index),
                x7_scv=scv(sentence),
                x8_iit=iit(sentence),
                is_key=None if gold is None else mark_is_key(c, gold),
                candidate=c,
            )
        )
    return out


def feature_matrix(vectors: Sequence[FeatureVector]) -> np.ndarray:
    if not vectors:
        return np.empty((0, len(FEATURE_NAMES)))
    return np.array([v.values() for v in vectors], dtype=float)


def label_array(vectors: Sequence[FeatureVector]) -> np.ndarray:
    if any(v.is_key is None for v in vectors):
        raise ValueError("every vector needs an is_key label")
    return np.array([bool(v.is_key) for v in vectors], dtype=bool)
