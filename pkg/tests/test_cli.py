import io
import subprocess
import sys

import numpy as np
import pytest

from miftah.cli import main
from miftah.lexicon import mini_lexicon_path
from miftah.model import fit_lda, load_model, save_model

from conftest import write_corpus


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


@pytest.fixture
def trained(separable_corpus, tmp_path):
    root, docs, golds = separable_corpus
    model = tmp_path / "model.json"
    code, _ = run(["train", "--docs", str(root / "docs"), "--model", str(model)])
    assert code == 0
    return root, model


class TestTrain:
    def test_writes_model_and_summary(self, separable_corpus, tmp_path):
        root, docs, golds = separable_corpus
        model = tmp_path / "m.json"
        code, out = run(["train", "--docs", *map(str, docs), "--gold", *map(str, golds), "--model", str(model)])
        assert code == 0
        assert model.is_file()
        lines = dict(line.split("\t") for line in out.splitlines())
        assert set(lines) == {"documents", "candidates", "positives", "negatives"}
        assert int(lines["positives"]) + int(lines["negatives"]) == int(lines["candidates"])
        assert load_model(model).dim == 8

    def test_missing_gold(self, separable_corpus, tmp_path, capsys):
        root, docs, golds = separable_corpus
        golds[1].unlink()
        code, out = run(["train", "--docs", str(root / "docs"), "--model", str(tmp_path / "m.json")])
        assert code == 1
        assert str(golds[1]) in capsys.readouterr().err
        assert out == ""

    def test_all_positive(self, tmp_path, capsys):
        docs, golds = write_corpus(tmp_path / "c", {"a": ("التعليم. التعليم", ["التعليم"])})
        code, _ = run(["train", "--docs", str(docs[0]), "--gold", str(golds[0]), "--model", str(tmp_path / "m.json")])
        assert code == 2
        assert "degenerate training set" in capsys.readouterr().err

    def test_mask_and_epsilon(self, separable_corpus, tmp_path):
        root, _, _ = separable_corpus
        model = tmp_path / "m.json"
        code, _ = run(["train", "--docs", str(root / "docs"), "--model", str(model),
                       "--mask", "x5,x6,x2,x1,x4,x8", "--epsilon", "1e-4"])
        assert code == 0
        m = load_model(model)
        assert m.dim == 6 and m.epsilon == 1e-4

    @pytest.mark.parametrize("extra", [["--epsilon", "0"], ["--mask", "x11"], ["--jobs", "0"]])
    def test_bad_options(self, separable_corpus, tmp_path, extra):
        root, _, _ = separable_corpus
        code, _ = run(["train", "--docs", str(root / "docs"), "--model", str(tmp_path / "m.json"), *extra])
        assert code == 1

    def test_unmatchable_gold_goes_to_stderr(self, separable_corpus, tmp_path, capsys):
        root, _, golds = separable_corpus
        golds[0].write_text(golds[0].read_text(encoding="utf-8") + "أشجار\n", encoding="utf-8")
        code, out = run(["train", "--docs", str(root / "docs"), "--model", str(tmp_path / "m.json")])
        assert code == 0
        assert "أشجار" in capsys.readouterr().err
        assert "أشجار" not in out


class TestExtract:
    def test_three_groups(self, trained, tmp_path):
        _, model = trained
        doc = tmp_path / "x.txt"
        doc.write_text("التعليم. المدرس. الشبكات", encoding="utf-8")
        code, out = run(["extract", "--model", str(model), "--docs", str(doc), "--n", "10"])
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "# doc: x"
        assert len(lines) == 4
        rank, score, surface = lines[1].split("\t")
        assert rank == "1" and len(score.split(".")[1]) == 3

    def test_empty_document(self, trained, tmp_path):
        _, model = trained
        doc = tmp_path / "empty.txt"
        doc.write_text("", encoding="utf-8")
        code, out = run(["extract", "--model", str(model), "--docs", str(doc)])
        assert (code, out) == (0, "# doc: empty\n")

    def test_precise(self, trained):
        root, model = trained
        code, out = run(["extract", "--model", str(model), "--docs", str(root / "docs" / "ai.txt"), "--precise"])
        assert code == 0
        score = out.splitlines()[1].split("\t")[1]
        assert float(score) == float(f"{float(score):.17g}")
        assert len(score.replace("-", "").replace(".", "").lstrip("0")) > 3

    def test_missing_document(self, trained, tmp_path):
        _, model = trained
        code, _ = run(["extract", "--model", str(model), "--docs", str(tmp_path / "none.txt")])
        assert code == 1

    def test_dimension_mismatch(self, tmp_path, separable_corpus):
        root, _, _ = separable_corpus
        m = fit_lda(np.random.default_rng(0).random((8, 2)), np.arange(8) % 2 == 0)
        save_model(m, tmp_path / "small.json")
        code, _ = run(["extract", "--model", str(tmp_path / "small.json"), "--docs", str(root / "docs")])
        assert code == 1

    def test_corrupt_model(self, tmp_path, separable_corpus):
        root, _, _ = separable_corpus
        (tmp_path / "bad.json").write_text("{", encoding="utf-8")
        code, _ = run(["extract", "--model", str(tmp_path / "bad.json"), "--docs", str(root / "docs")])
        assert code == 1

    def test_lexicon_env_fallback(self, trained, tmp_path, monkeypatch):
        root, model = trained
        monkeypatch.setenv("MIFTAH_LEXICON", str(tmp_path / "missing.tsv"))
        code, _ = run(["extract", "--model", str(model), "--docs", str(root / "docs")])
        assert code == 1
        monkeypatch.setenv("MIFTAH_LEXICON", mini_lexicon_path())
        code, _ = run(["extract", "--model", str(model), "--docs", str(root / "docs")])
        assert code == 0

    def test_deterministic_with_six_feature_mask(self, separable_corpus, tmp_path):
        root, _, _ = separable_corpus
        model = tmp_path / "m6.json"
        assert run(["train", "--docs", str(root / "docs"), "--model", str(model), "--mask", "x5,x6,x2,x1,x4,x8"])[0] == 0
        args = ["extract", "--model", str(model), "--docs", str(root / "docs")]
        assert run(args) == run(args)


class TestEvaluate:
    def test_default_rows(self, trained):
        root, model = trained
        code, out = run(["evaluate", "--model", str(model), "--docs", str(root / "docs")])
        assert code == 0
        rows = [l.split("\t") for l in out.splitlines() if not l.startswith("#")]
        assert [r[0] for r in rows] == ["5", "7", "10"]
        assert all(r[2] == "1.000" and r[3] == "4" for r in rows)

    def test_n_override(self, trained):
        root, model = trained
        code, out = run(["evaluate", "--model", str(model), "--docs", str(root / "docs"), "--n", "3,12"])
        rows = [l for l in out.splitlines() if not l.startswith("#")]
        assert code == 0 and len(rows) == 2

    def test_mismatched_counts(self, trained):
        root, model = trained
        docs = sorted((root / "docs").glob("*.txt"))
        golds = sorted((root / "gold").glob("*.keys"))
        code, _ = run(["evaluate", "--model", str(model), "--docs", *map(str, docs), "--gold", *map(str, golds[:2])])
        assert code == 1

    def test_perfect_corpus(self, tmp_path):
        text = "الشبكات الأمن الحاسوب البيانات الذكاء. الشبكات الأمن الحاسوب البيانات الذكاء. التعليم"
        gold = ["الشبكات", "الأمن", "الحاسوب", "البيانات", "الذكاء"]
        write_corpus(tmp_path / "c", {"p": (text, gold)})
        model = tmp_path / "m.json"
        docs = str(tmp_path / "c" / "docs")
        assert run(["train", "--docs", docs, "--model", str(model), "--mask", "x5,x1"])[0] == 0
        code, out = run(["evaluate", "--model", str(model), "--docs", docs, "--n", "5"])
        assert out.splitlines()[1] == "5\t1.000\t1.000\t1"


def _anova_blocks(out):
    single, acc, cur = {}, [], None
    for line in out.splitlines():
        if line.startswith("# feature"):
            cur = "single"
        elif line.startswith("# model"):
            cur = "acc"
        elif cur == "single":
            name, val = line.split("\t")
            single[name.split()[0]] = float(val)
        else:
            acc.append(float(line.split("\t")[1]))
    return single, acc


class TestAnova:
    def test_x5_separates(self, separable_corpus, lexicon):
        from miftah.pipeline import labelled_corpus_vectors

        root, docs, golds = separable_corpus
        vecs, _ = labelled_corpus_vectors(docs, golds, lexicon)
        assert all(v.is_key == (v.x5_prf > 0.5) for v in vecs)
        code, out = run(["anova", "--docs", str(root / "docs"), "--precise"])
        assert code == 0
        single, acc = _anova_blocks(out)
        assert max(single, key=single.get) == "x5"
        assert len(acc) == 6
        assert all(b >= a for a, b in zip(acc, acc[1:]))

    def test_constant_feature_row(self, tmp_path):
        corpus = {
            "a": ("التعليم الاتصالات. التعليم. تقنيات المدرس", ["التعليم"]),
            "b": ("المدرس الشبكات. المدرس", ["المدرس"]),
        }
        write_corpus(tmp_path / "c", corpus)
        code, out = run(["anova", "--docs", str(tmp_path / "c" / "docs")])
        assert code == 0
        assert "x8 (IIT)\t0.000" in out.splitlines()

    def test_custom_order(self, separable_corpus):
        root, _, _ = separable_corpus
        code, out = run(["anova", "--docs", str(root / "docs"), "--mask", "x6,x5"])
        assert code == 0
        assert [l.split("\t")[0] for l in out.splitlines()[-2:]] == ["x6", "x6,x5"]

    def test_class_absent(self, tmp_path):
        write_corpus(tmp_path / "c", {"a": ("التعليم. التعليم. التعليم", ["التعليم"])})
        code, _ = run(["anova", "--docs", str(tmp_path / "c" / "docs")])
        assert code == 2


def test_usage_error_exit_code():
    assert run(["frobnicate"])[0] == 1


def test_module_entry_point(trained):
    root, model = trained
    proc = subprocess.run(
        [sys.executable, "-m", "miftah", "extract", "--model", str(model), "--docs", str(root / "docs" / "ai.txt")],
        capture_output=True, text=True, encoding="utf-8",
    )
    assert proc.returncode == 0
    assert proc.stdout.startswith("# doc: ai\n1\t")
