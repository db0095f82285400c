"""Annotated-lexicon lookup.

A lexicon is a UTF-8 TSV file with nine columns per entry::

    surface  prefix  stem  suffix  abstract  word_class  gender  number  person

Blank lines and lines starting with ``#`` are ignored. Prefix and suffix may
be empty; every other column is required.
"""
from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from importlib import resources
from typing import Iterable, Iterator

from .errors import LexiconFormatError

TATWEEL = "ـ"
_ALEF_VARIANTS = str.maketrans({"أ": "ا", "إ": "ا", "آ": "ا", TATWEEL: None})

N_COLUMNS = 9


class WordClass(str, enum.Enum):
    GENERAL_NOUN = "general-noun"
    COUNT_NOUN = "count-noun"
    PLACE_NOUN = "place-noun"
    TIME_NOUN = "time-noun"
    PROPER_NOUN = "proper-noun"
    DECLINED_NOUN = "declined-noun"
    AUGMENTED_NOUN = "augmented-noun"
    ADJECTIVE = "adjective"
    ADVERB = "adverb"
    PAST_VERB = "past-verb"
    PRESENT_VERB = "present-verb"
    IGNORE_VERB = "ignore-verb"
    CONJUNCTION = "conjunction"
    PREPOSITION = "preposition"
    COMPARISON = "comparison"
    QUESTION_WORD = "question-word"
    PUNCTUATION = "punctuation"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


VERB_CLASSES = frozenset(
    {WordClass.PAST_VERB, WordClass.PRESENT_VERB, WordClass.IGNORE_VERB}
)

GENDERS = ("masculine", "feminine", "none")
NUMBERS = ("single", "dual", "plural", "none")
PERSONS = ("first", "second", "absent", "none")


@dataclass(frozen=True)
class LexiconEntry:
    surface: str
    prefix: str
    stem: str
    suffix: str
    abstract: str
    word_class: WordClass
    gender: str = "none"
    number: str = "none"
    person: str = "none"

    def to_line(self) -> str:
        """Serialize back to one TSV line (no trailing newline)."""
        return "\t".join(
            [
                self.surface,
                self.prefix,
                self.stem,
                self.suffix,
                self.abstract,
                self.word_class.value,
                self.gender,
                self.number,
                self.person,
            ]
        )


def unknown_entry(surface: str) -> LexiconEntry:
    return LexiconEntry(
        surface=surface,
        prefix="",
        stem="",
        suffix="",
        abstract=surface,
        word_class=WordClass.UNKNOWN,
    )


def normalize_query(surface: str) -> str:
    """Fold hamza/madda alef variants to bare alef and drop tatweel."""
    return surface.translate(_ALEF_VARIANTS)


def _has_space(text: str) -> bool:
    return any(ch.isspace() for ch in text)


def parse_line(line: str, lineno: int = 0) -> LexiconEntry:
    fields = line.rstrip("\r\n").split("\t")
    if len(fields) != N_COLUMNS:
        raise LexiconFormatError(
            f"malformed line: expected {N_COLUMNS} columns, got {len(fields)}",
            lineno,
        )
    surface, prefix, stem, suffix, abstract, tag, gender, number, person = fields
    if not surface or _has_space(surface):
        raise LexiconFormatError("malformed line: empty or spaced surface", lineno)
    if not abstract or _has_space(abstract):
        raise LexiconFormatError("malformed line: empty or spaced abstract", lineno)
    try:
        word_class = WordClass(tag)
    except ValueError:
        raise LexiconFormatError(
            f"malformed line: unrecognized word-class {tag!r}", lineno
        ) from None
    for value, allowed, name in (
        (gender, GENDERS, "gender"),
        (number, NUMBERS, "number"),
        (person, PERSONS, "person"),
    ):
        if value not in allowed:
            raise LexiconFormatError(
                f"malformed line: unrecognized {name} {value!r}", lineno
            )
    return LexiconEntry(
        surface, prefix, stem, suffix, abstract, word_class, gender, number, person
    )


class Lexicon:
    """Immutable multimap from surface form to lexicon entries.

    When a surface is listed more than once, the first entry wins on lookup.
    """

    def __init__(self, entries: Iterable[LexiconEntry] = ()):
        self._entries = tuple(entries)
        index: dict[str, list[LexiconEntry]] = {}
        for entry in self._entries:
            index.setdefault(entry.surface, []).append(entry)
        self._index = {k: tuple(v) for k, v in index.items()}

    @property
    def entries(self) -> tuple[LexiconEntry, ...]:
        return self._entries

    @property
    def entry_count(self) -> int:
        return len(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[LexiconEntry]:
        return iter(self._entries)

    def __contains__(self, surface: object) -> bool:
        return surface in self._index

    def lookup(self, surface: str) -> tuple[LexiconEntry, ...]:
        """All entries listed for ``surface``, in file order."""
        return self._index.get(surface, ())

    def analyze(self, surface: str) -> LexiconEntry:
        return analyze(self, surface)

    def dumps(self) -> str:
        return "".join(e.to_line() + "\n" for e in self._entries)


def analyze(lexicon: Lexicon, surface: str) -> LexiconEntry:
    """Look up one whitespace-free word.

    Exact match first, then a retry with the normalized query. Words missing
    from the lexicon get a synthesized ``unknown`` entry whose abstract form
    is the surface itself.
    """
    hits = lexicon.lookup(surface)
    if not hits:
        hits = lexicon.lookup(normalize_query(surface))
    if hits:
        return hits[0]
    return unknown_entry(surface)


def parse_lexicon(text: str) -> Lexicon:
    entries = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith("#"):
            continue
        entries.append(parse_line(line, lineno))
    return Lexicon(entries)


def load_lexicon(path: str | os.PathLike) -> Lexicon:
    with open(path, encoding="utf-8") as fh:
        return parse_lexicon(fh.read())


def load_mini_lexicon() -> Lexicon:
    """The bundled lexicon covering the worked examples and demo corpus."""
    ref = resources.files("miftah") / "data" / "mini_lexicon.tsv"
    return parse_lexicon(ref.read_text(encoding="utf-8"))


def mini_lexicon_path() -> str:
    return str(resources.files("miftah") / "data" / "mini_lexicon.tsv")
