"""Builders for synthetic analyzed documents with chosen word classes."""
import numpy as np

from miftah.lexicon import LexiconEntry, WordClass
from miftah.segmentation import AnalyzedDocument, Token, build_sentence

ALL_CLASSES = [wc for wc in WordClass if wc is not WordClass.PUNCTUATION]
VOCAB = ["a", "b", "c", "d", "e", "f"]


def entry(surface, word_class, abstract=None):
    return LexiconEntry(surface, "", surface, "", abstract or surface, word_class)


def make_doc(sentences, doc_id="synthetic", questions=None):
    """``sentences`` is a list of lists of ``(surface, WordClass[, abstract])``."""
    built = []
    for si, words in enumerate(sentences):
        tokens = [
            Token(w[0], entry(w[0], w[1], w[2] if len(w) > 2 else None), si, wi)
            for wi, w in enumerate(words)
        ]
        q = bool(questions[si]) if questions is not None else False
        built.append(build_sentence(si, tokens, q))
    return AnalyzedDocument(doc_id, tuple(built))


def random_sentence(rng, max_len=8, classes=ALL_CLASSES, vocab=VOCAB):
    n = int(rng.integers(1, max_len + 1))
    words = []
    for _ in range(n):
        wc = classes[int(rng.integers(len(classes)))]
        ab = vocab[int(rng.integers(len(vocab)))]
        words.append((f"w{ab}{int(rng.integers(100))}", wc, ab))
    return words


def random_doc(rng, max_sentences=6, max_len=8, doc_id="synthetic"):
    m = int(rng.integers(1, max_sentences + 1))
    sentences = [random_sentence(rng, max_len) for _ in range(m)]
    questions = rng.random(m) < 0.2
    return make_doc(sentences, doc_id, questions)


def gaussian_two_class(rng, n_per_class, mu_yes, mu_no, cov):
    Xy = rng.multivariate_normal(mu_yes, cov, size=n_per_class)
    Xn = rng.multivariate_normal(mu_no, cov, size=n_per_class)
    X = np.vstack([Xy, Xn])
    y = np.array([True] * n_per_class + [False] * n_per_class)
    return X, y
