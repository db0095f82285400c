"""Train, extract and score on the demo corpus, the same way the CLI does.

Run:  python demos/04_evaluate_corpus.py
"""
from pathlib import Path

from miftah import load_mini_lexicon
from miftah.pipeline import (
    corpus_pairs,
    evaluate_corpus,
    extract_keyphrases,
    read_gold,
    read_text,
    train_from_corpus,
)

lexicon = load_mini_lexicon()
docs, golds = corpus_pairs(Path(__file__).parent / "corpus")
model, _ = train_from_corpus(docs, golds, lexicon, mask="x5,x6,x2,x1,x4,x8")

for doc, gold in zip(docs, golds):
    ranked = extract_keyphrases(read_text(doc), lexicon, model, 5, doc.stem)
    print(f"{doc.stem}  (gold: {', '.join(read_gold(gold))})")
    for kp in ranked:
        print(f"  {kp.rank}. {kp.surface:<22} {kp.score:8.3f}")

table = evaluate_corpus(docs, golds, lexicon, model, [5, 7, 10])
print("\n n   P      R")
for row in table.rows:
    print(f"{row.n:>2}  {row.mean_precision:.3f}  {row.mean_recall:.3f}")

# Precision falls as N grows because each document has only two gold phrases.
