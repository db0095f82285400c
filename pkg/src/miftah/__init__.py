"""Supervised keyphrase extraction with abstract word forms and LDA."""
from .candidates import CandidateOccurrence, extract_candidates, generate_ngrams, rule_filter
from .errors import (
    DegenerateTrainingError,
    LexiconFormatError,
    MiftahError,
    ModelFormatError,
    SingularCovarianceError,
    UnmatchableGoldWarning,
)
from .features import FEATURE_NAMES, FeatureVector, build_feature_vectors
from .lexicon import Lexicon, LexiconEntry, WordClass, analyze, load_lexicon, load_mini_lexicon
from .model import (
    LdaModel,
    anova_accumulated,
    anova_report,
    anova_single,
    classify,
    discriminant,
    load_model,
    save_model,
    score,
    train_lda,
)
from .pipeline import (
    ExtractedKeyphrase,
    evaluate_corpus,
    extract_keyphrases,
    precision_recall,
    train_from_corpus,
)
from .segmentation import AnalyzedDocument, analyze_text

__version__ = "0.1.0"
