"""Walk one sentence through analysis and candidate filtering.

Run:  python demos/01_candidates.py
"""
from miftah import analyze_text, extract_candidates, load_mini_lexicon

SENTENCE = "إن مشاريع التعليم عن بعد تعتبر من أهم تقنيات الاتصالات والمعلومات"

lexicon = load_mini_lexicon()
doc = analyze_text(SENTENCE, lexicon, doc_id="demo")

# Each word gets a class and an abstract form from the lexicon.
print("word analysis")
for tok in doc.sentences[0].tokens:
    print(f"  {tok.surface:<14} {tok.entry.word_class.value:<16} {tok.entry.abstract}")

# Windows of up to three words survive only if their class pattern is allowed.
# "عن بعد" starts with a preposition, so it never becomes a candidate.
print("\ncandidates")
for c in extract_candidates(doc):
    print(f"  {c.surface:<30} -> {c.abstract}")

# Inflected variants collapse to one abstract form.
for phrase in ("قواعد البيانات", "قاعدة بيانات"):
    d = analyze_text(phrase, lexicon)
    print(f"\n{phrase!r} abstracts to {' '.join(t.entry.abstract for s in d.sentences for t in s.tokens)!r}")
