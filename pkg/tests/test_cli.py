import json

import pytest

from thetarich.cli import main
from thetarich.suite import PROPERTIES

THETA = "a<->a' c"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestAnalyze:
    def test_periodic_rich(self, capsys):
        code, out, _ = run(capsys, "analyze", "--gen", "periodic:ccaa'", "--theta", THETA,
                           "--window", "200", "--n", "0..20", "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["richness"]["is_rich"] is True
        rows = doc["profile"]["rows"]
        assert [r["n"] for r in rows] == list(range(21))
        assert all(r["status"] == "equal" for r in rows if r["n"] >= 1)
        assert doc["window_length"] == 200
        assert doc["source"] == "periodic:ccaa'@200"
        assert doc["schema"] == "thetarich.analyze/1"

    def test_caca_witness(self, capsys):
        code, out, _ = run(capsys, "analyze", "--word", "caca'caca'", "--theta", THETA,
                           "--format", "json")
        assert code == 0
        rich = json.loads(out)["richness"]
        assert rich["is_rich"] is False
        assert rich["witness"]["prefix"] == "cac"

    def test_empty_word(self, capsys):
        code, out, _ = run(capsys, "analyze", "--word", "", "--theta", THETA)
        assert code == 0
        assert "rich: true" in out

    def test_text_and_csv(self, capsys):
        code, out, _ = run(capsys, "analyze", "--gen", "morphic:ex5.1", "--n", "0..3")
        assert code == 0 and "closure: closed-on-window" in out
        code, out, _ = run(capsys, "analyze", "--gen", "morphic:ex5.1", "--n", "1..2",
                           "--format", "csv")
        assert out.splitlines() == ["n,C,dC,P,lhs,rhs,status", "1,3,1,1,3,3,equal",
                                    "2,4,1,2,3,3,equal"]

    def test_file_source(self, capsys, tmp_path):
        f = tmp_path / "w.txt"
        f.write_text("alphabet: a a' c\ntheta: a<->a' c<->c\nword: c c a a' c c a a'\n")
        code, out, _ = run(capsys, "analyze", "--file", str(f), "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["source"] == f"file:{f}" and doc["richness"]["is_rich"]

    def test_out_file(self, capsys, tmp_path):
        dest = tmp_path / "r.json"
        code, out, _ = run(capsys, "analyze", "--gen", "corpus:ex5.5", "--n", "0..4",
                           "--format", "json", "--out", str(dest))
        assert code == 0 and out == ""
        assert json.loads(dest.read_text())["theta"] == THETA


class TestUsageErrors:
    @pytest.mark.parametrize(
        "argv, token",
        [
            (["analyze", "--word", "cab", "--theta", THETA], "'b'"),
            (["analyze", "--word", "ca", "--theta", "a<->"], "'a<->'"),
            (["analyze", "--gen", "wobble:1", "--theta", THETA], "'wobble'"),
            (["analyze", "--gen", "sturmian:1,q"], "'q'"),
        ],
    )
    def test_bad_input_names_token(self, capsys, argv, token):
        code, _, err = run(capsys, *argv)
        assert code == 1
        assert token in err

    def test_word_needs_theta(self, capsys):
        assert run(capsys, "analyze", "--word", "ca")[0] == 1

    def test_two_sources(self, capsys):
        assert run(capsys, "analyze", "--word", "c", "--gen", "corpus:ex5.1", "--theta", THETA)[0] == 1

    def test_n_beyond_window(self, capsys):
        code, _, err = run(capsys, "analyze", "--word", "ccaa'", "--theta", THETA, "--n", "0..6")
        assert code == 1 and "window" in err

    def test_bad_range(self, capsys):
        assert run(capsys, "analyze", "--gen", "corpus:ex5.1", "--n", "3..1")[0] == 1
        assert run(capsys, "analyze", "--gen", "corpus:ex5.1", "--n", "x")[0] == 1

    def test_argparse_errors(self, capsys):
        assert run(capsys, "frobnicate")[0] == 1
        assert run(capsys)[0] == 1

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "analyze", "--file", str(tmp_path / "none.txt"))[0] == 1


class TestRauzy:
    def test_example51_single_vertex(self, capsys, tmp_path):
        code, _, _ = run(capsys, "rauzy", "--gen", "morphic:ex5.1", "--n", "3",
                         "--out-dir", str(tmp_path))
        assert code == 0
        assert sorted(p.name for p in tmp_path.iterdir()) == [
            "rauzy_3.dot", "reduced_3.dot", "super_reduced_3.dot"]
        dot = (tmp_path / "super_reduced_3.dot").read_text()
        vertex_lines = [ln for ln in dot.splitlines() if ln.strip().endswith('";')]
        assert len(vertex_lines) == 1
        assert dot.count("style=dashed") == dot.count(" -- ") > 0

    def test_ccaa_four_cycle(self, capsys):
        code, out, _ = run(capsys, "rauzy", "--gen", "periodic:ccaa'", "--theta", THETA, "--n", "2")
        assert code == 0
        rauzy = out.split("// reduced_2.dot")[0]
        assert rauzy.count(" -> ") == 4

    def test_ab(self, capsys):
        code, out, _ = run(capsys, "rauzy", "--word", "ab", "--theta", "a b", "--n", "1")
        assert code == 0
        rauzy = out.split("// reduced_1.dot")[0]
        assert '"a" -> "b" [label="ab"]' in rauzy and rauzy.count(" -> ") == 1

    def test_n_too_large(self, capsys):
        assert run(capsys, "rauzy", "--word", "ab", "--theta", "a b", "--n", "2")[0] == 1

    def test_n_required(self, capsys):
        assert run(capsys, "rauzy", "--gen", "morphic:ex5.1")[0] == 1


class TestVerify:
    def test_list(self, capsys):
        code, out, _ = run(capsys, "verify", "--list")
        assert code == 0
        assert [ln.split()[0] for ln in out.splitlines()] == list(PROPERTIES)

    def test_corpus_subset_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "--corpus", "ex5.1", "ex5.4", "--n", "0..15",
                           "--window", "800")
        assert code == 0
        assert out.splitlines()[-1].endswith("checks passed")

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "--corpus", "ex5.5", "--n", "0..10",
                           "--window", "300", "--format", "json", "--only", "inequality", "bound")
        doc = json.loads(out)
        assert code == 0 and doc["passed"]
        assert {r["property"] for r in doc["rows"]} == {"inequality", "bound"}
        assert doc["targets"][0]["window_length"] == 300

    def test_mutation_is_flagged(self, capsys):
        code, out, _ = run(capsys, "verify", "--corpus", "ex5.1", "--mutate", "100",
                           "--n", "0..10", "--window", "800")
        assert code == 2
        assert "FAIL  closure" in out

    def test_single_word(self, capsys):
        code, out, _ = run(capsys, "verify", "--gen", "sturmian:2,1", "--n", "0..10", "-v")
        assert code == 0 and "PASS  inequality" in out

    def test_unknown_property(self, capsys):
        assert run(capsys, "verify", "--corpus", "ex5.5", "--only", "nonsense")[0] == 1

    def test_unknown_corpus(self, capsys):
        assert run(capsys, "verify", "--corpus", "nonsense")[0] == 1


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--gen", "sturmian:1", "--length", "8")
    assert (code, out) == (0, "01001010\n")
    code, out, _ = run(capsys, "generate", "--gen", "morphic:ex5.2", "--length", "4", "--sep", " ")
    assert out == "a' c a c\n"


def test_generate_budget(capsys):
    code, _, err = run(capsys, "generate", "--gen", "theta-standard:seed=,directive=c",
                       "--theta", THETA, "--length", "100")
    assert code == 1 and "closure steps" in err


def test_corpus(capsys):
    code, out, _ = run(capsys, "corpus", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc[0]["name"] == "ex5.1" and doc[0]["theta"] == THETA


def test_version(capsys):
    assert run(capsys, "--version")[0] == 0
