"""Rule-filtered n-gram candidate phrases.

Every window of one to three consecutive words inside a sentence is a
potential candidate. A window survives only if its word classes follow the
allowed start / middle / end patterns below.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .lexicon import WordClass
from .segmentation import AnalyzedDocument, Sentence

MAX_NGRAM = 3

START_CLASSES = frozenset(
    {
        WordClass.GENERAL_NOUN,
        WordClass.PLACE_NOUN,
        WordClass.PROPER_NOUN,
        WordClass.DECLINED_NOUN,
    }
)
END_CLASSES = START_CLASSES | {
    WordClass.TIME_NOUN,
    WordClass.AUGMENTED_NOUN,
    WordClass.ADJECTIVE,
    WordClass.ADVERB,
}
MIDDLE_CLASSES = END_CLASSES | {
    WordClass.COUNT_NOUN,
    WordClass.CONJUNCTION,
    WordClass.PREPOSITION,
    WordClass.COMPARISON,
}


@dataclass(frozen=True)
class CandidateOccurrence:
    doc_id: str
    sentence_index: int
    start_word_index: int
    length: int
    surface: str
    abstract: str
    classes: tuple[WordClass, ...]

    @property
    def abstract_words(self) -> list[str]:
        return self.abstract.split(" ")

    @property
    def position(self) -> tuple[int, int]:
        return (self.sentence_index, self.start_word_index)


def generate_ngrams(sentence: Sentence, max_n: int = MAX_NGRAM) -> list[tuple[int, int]]:
    """All ``(start, length)`` windows in reading order."""
    n = sentence.word_count
    return [
        (start, length)
        for start in range(n)
        for length in range(1, max_n + 1)
        if start + length <= n
    ]


def rule_filter(classes: Sequence[WordClass]) -> bool:
    n = len(classes)
    if n == 1:
        return classes[0] in START_CLASSES
    if n == 2:
        return classes[0] in START_CLASSES and classes[1] in END_CLASSES
    if n == 3:
        return (
            classes[0] in START_CLASSES
            and classes[1] in MIDDLE_CLASSES
            and classes[2] in END_CLASSES
        )
    return False


def _effective_class(wc: WordClass, oov_as_noun: bool) -> WordClass:
    if oov_as_noun and wc is WordClass.UNKNOWN:
        return WordClass.GENERAL_NOUN
    return wc


def extract_candidates(
    doc: AnalyzedDocument, oov_as_noun: bool = False
) -> list[CandidateOccurrence]:
    """Materialize every rule-accepted window of ``doc``.

    Output is ordered by (sentence, start, length). With ``oov_as_noun`` the
    out-of-lexicon words are treated as general nouns.
    """
    out = []
    for sentence in doc.sentences:
        tokens = sentence.tokens
        classes = [_effective_class(t.entry.word_class, oov_as_noun) for t in tokens]
        for start, length in generate_ngrams(sentence):
            window = classes[start : start + length]
            if not rule_filter(window):
                continue
            span = tokens[start : start + length]
            out.append(
                CandidateOccurrence(
                    doc_id=doc.id,
                    sentence_index=sentence.index,
                    start_word_index=start,
                    length=length,
                    surface=" ".join(t.surface for t in span),
                    abstract=" ".join(t.entry.abstract for t in span),
                    classes=tuple(window),
                )
            )
    return out
