"""Sentence and word segmentation with lexicon analysis attached."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .lexicon import TATWEEL, VERB_CLASSES, Lexicon, LexiconEntry, WordClass

QUESTION_MARKS = frozenset("؟?")
SENTENCE_DELIMITERS = ",;:.،؛؟?!"

# Single-character delimiters, or a run of hyphens standing alone between
# whitespace (so hyphenated words survive).
_DELIMITER_RE = re.compile(r"[,;:.،؛؟?!]|(?<!\S)-+(?!\S)")
_WS_RE = re.compile(r"\s+")


@dataclass(frozen=True)
class RawSpan:
    text: str
    question: bool = False


@dataclass(frozen=True)
class Token:
    surface: str
    entry: LexiconEntry
    sentence_index: int
    word_index: int

    @property
    def word_class(self) -> WordClass:
        return self.entry.word_class


@dataclass(frozen=True)
class Sentence:
    index: int
    tokens: tuple[Token, ...]
    contains_verb: bool
    is_question: bool

    @property
    def word_count(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class AnalyzedDocument:
    id: str
    sentences: tuple[Sentence, ...] = field(default_factory=tuple)

    @property
    def sentence_count(self) -> int:
        return len(self.sentences)

    def words(self) -> list[str]:
        return [t.surface for s in self.sentences for t in s.tokens]


def normalize_text(raw: str) -> str:
    """Strip tatweel and collapse every whitespace run to one space."""
    return _WS_RE.sub(" ", raw.replace(TATWEEL, ""))


def segment_sentences(text: str) -> list[RawSpan]:
    spans = []
    pos = 0
    for m in _DELIMITER_RE.finditer(text):
        _append_span(spans, text[pos : m.start()], m.group() in QUESTION_MARKS)
        pos = m.end()
    _append_span(spans, text[pos:], False)
    return spans


def _append_span(spans: list[RawSpan], chunk: str, question: bool) -> None:
    chunk = chunk.strip()
    if chunk:
        spans.append(RawSpan(chunk, question))


def build_sentence(index: int, tokens: Sequence[Token], question_mark: bool = False) -> Sentence:
    """Assemble a sentence and derive its verb/question flags from ``tokens``."""
    tokens = tuple(tokens)
    classes = {t.entry.word_class for t in tokens}
    return Sentence(
        index=index,
        tokens=tokens,
        contains_verb=bool(classes & VERB_CLASSES),
        is_question=question_mark or WordClass.QUESTION_WORD in classes,
    )


def tokenize_and_analyze(
    spans: Iterable[RawSpan | str], lexicon: Lexicon, doc_id: str = ""
) -> AnalyzedDocument:
    sentences = []
    for span in spans:
        if isinstance(span, str):
            span = RawSpan(span)
        words = span.text.split()
        if not words:
            continue
        si = len(sentences)
        tokens = [
            Token(w, lexicon.analyze(w), si, wi) for wi, w in enumerate(words)
        ]
        sentences.append(build_sentence(si, tokens, span.question))
    return AnalyzedDocument(doc_id, tuple(sentences))


def analyze_text(raw: str, lexicon: Lexicon, doc_id: str = "") -> AnalyzedDocument:
    """Normalize, segment and analyze a whole document."""
    return tokenize_and_analyze(segment_sentences(normalize_text(raw)), lexicon, doc_id)
