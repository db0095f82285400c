"""Feature vectors for a labelled document, then a model trained on the demo corpus.

Run:  python demos/02_features_and_training.py
"""
from pathlib import Path

import numpy as np

from miftah import load_mini_lexicon
from miftah.features import FEATURE_LABELS, FEATURE_NAMES
from miftah.pipeline import (
    corpus_pairs,
    document_vectors,
    gold_abstracts,
    read_gold,
    read_text,
    train_from_corpus,
)

CORPUS = Path(__file__).parent / "corpus"

lexicon = load_mini_lexicon()
docs, golds = corpus_pairs(CORPUS)

doc, gold = docs[0], golds[0]
vectors = document_vectors(read_text(doc), lexicon, doc.stem, gold_abstracts(read_gold(gold), lexicon))

header = "  ".join(f"{FEATURE_LABELS[n]:>5}" for n in FEATURE_NAMES)
print(f"{doc.stem}: {len(vectors)} candidate occurrences\n")
print(f"{'phrase':<24}{header}  key")
for v in vectors[:12]:
    row = "  ".join(f"{x:5.2f}" for x in v.values())
    print(f"{v.candidate.surface:<24}{row}  {'yes' if v.is_key else ''}")

# Key phrases are the frequent ones, which shows up in PRF (x5).
keys = np.array([v.x5_prf for v in vectors if v.is_key])
rest = np.array([v.x5_prf for v in vectors if not v.is_key])
print(f"\nmean PRF  keys {keys.mean():.2f}  others {rest.mean():.2f}")

model, summary = train_from_corpus(docs, golds, lexicon)
print(f"\ntrained on {summary.documents} documents, {summary.candidates} candidates "
      f"({summary.positives} positive)")
print("class means (yes / no):")
for name, a, b in zip(model.feature_names, model.mu_yes, model.mu_no):
    print(f"  {name} {FEATURE_LABELS[name]:<6} {a:6.3f} {b:6.3f}")
