"""The discriminant on toy data, and which features explain the label.

Run:  python demos/03_lda_and_anova.py
"""
from pathlib import Path

import numpy as np

from miftah import load_mini_lexicon
from miftah.features import FEATURE_LABELS, FEATURE_NAMES
from miftah.model import anova_report, classify, discriminant, fit_lda
from miftah.pipeline import corpus_pairs, labelled_corpus_vectors

rng = np.random.default_rng(0)
cov = np.array([[1.0, 0.3], [0.3, 1.0]])
X = np.vstack([
    rng.multivariate_normal([1.5, 1.5], cov, 300),
    rng.multivariate_normal([-1.5, -1.5], cov, 300),
])
y = np.array([True] * 300 + [False] * 300)

model = fit_lda(X, y)
print("pooled covariance\n", np.round(model.covariance, 3))
for point in ([1.0, 1.0], [0.0, 0.0], [-1.0, 0.2]):
    f_yes, f_no = discriminant(model, point)
    print(f"x={point}  f_yes={f_yes:7.3f}  f_no={f_no:7.3f}  key={classify(model, point)}")

accuracy = np.mean((model.scores(X) > 0) == y)
print(f"training accuracy {accuracy:.3f}\n")

# On the demo corpus, how much of the label does each feature explain?
lexicon = load_mini_lexicon()
docs, golds = corpus_pairs(Path(__file__).parent / "corpus")
vectors, _ = labelled_corpus_vectors(docs, golds, lexicon)
report = anova_report(vectors)

print("single-feature R^2")
for name, r2 in sorted(zip(FEATURE_NAMES, report.single_r2), key=lambda t: -t[1]):
    print(f"  {name} {FEATURE_LABELS[name]:<6} {r2:.3f}")
print("\nadding features one at a time")
for subset, r2 in report.accumulated:
    print(f"  {','.join(subset):<20} {r2:.3f}")
