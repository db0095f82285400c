import pytest

from miftah.lexicon import load_mini_lexicon

WORKED_SENTENCE = "إن مشاريع التعليم عن بعد تعتبر من أهم تقنيات الاتصالات والمعلومات"

# Four small documents whose gold phrases are their most frequent abstract
# phrases, so phrase relative frequency alone separates the classes.
SEPARABLE_CORPUS = {
    "networks": (
        "أمن الشبكات.\n"
        "تستخدم الشركات الشبكات الحديثة. تحمي البرمجيات أمن الشبكة.\n"
        "يعتمد الإنترنت على الشبكات، الأمن مهم في كل شبكة.\n"
        "توفر الشبكات الخدمات. كيف تساعد الشبكات الشركات؟\n"
        "الأمن أيضا مهم.\n",
        ["الشبكات", "الأمن"],
    ),
    "databases": (
        "قواعد البيانات في الحاسوب.\n"
        "يستخدم الحاسوب البيانات. تستخدم الشركات قاعدة بيانات كبيرة.\n"
        "يعتمد كل حاسوب على البيانات. ماذا يوفر الحاسوب؟\n"
        "البيانات مهمة. تطورت الحواسيب اليوم.\n",
        ["البيانات", "الحاسوب"],
    ),
    "ai": (
        "الذكاء الاصطناعي.\n"
        "تستخدم التطبيقات الحديثة الذكاء الاصطناعي. يعتمد الذكاء على البيانات.\n"
        "تطبيقات الذكاء جديدة. تساعد التطبيقات الطلاب في الجامعات.\n"
        "هل تساعد التطبيقات المستخدم؟ الذكاء مهم اليوم.\n",
        ["الذكاء", "التطبيقات"],
    ),
    "cloud": (
        "الحوسبة السحابية.\n"
        "توفر الحوسبة السحابية البرامج. تستخدم الجامعات البرامج الحديثة.\n"
        "يستخدم الطلاب برامج الحوسبة. الحوسبة مهمة في مصر.\n"
        "كان البرنامج جديد.\n",
        ["الحوسبة", "البرامج"],
    ),
}


def write_corpus(root, corpus):
    docs_dir = root / "docs"
    gold_dir = root / "gold"
    docs_dir.mkdir(parents=True)
    gold_dir.mkdir(parents=True)
    docs, golds = [], []
    for doc_id, (text, gold) in corpus.items():
        d = docs_dir / f"{doc_id}.txt"
        g = gold_dir / f"{doc_id}.keys"
        d.write_text(text, encoding="utf-8")
        g.write_text("\n".join(gold) + "\n", encoding="utf-8")
        docs.append(d)
        golds.append(g)
    return docs, golds


@pytest.fixture(scope="session")
def lexicon():
    return load_mini_lexicon()


@pytest.fixture
def separable_corpus(tmp_path):
    docs, golds = write_corpus(tmp_path / "corpus", SEPARABLE_CORPUS)
    return tmp_path / "corpus", docs, golds


_ACCEPTANCE = []


def record_criterion(number, title, passed):
    _ACCEPTANCE.append((number, title, passed))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed in sorted(_ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
