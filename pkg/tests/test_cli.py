"""Command-line behavior: exit codes, rendered reports, and JSON outputs."""

import json
from importlib.resources import files

import pytest

from ybx.cli import main
from ybx.shelves import dihedral_shelf, sd_pair_map

CORPUS = files("ybx").joinpath("corpus")

CORPUS_NAMES = sorted(p.name for p in CORPUS.iterdir() if p.name.endswith(".json"))


def corpus(name: str) -> str:
    return str(CORPUS.joinpath(name))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestVerify:
    @pytest.mark.parametrize("name", CORPUS_NAMES)
    def test_corpus_documents(self, capsys, name):
        code, out, _ = run(capsys, "verify", corpus(name))
        if name == "broken_shelf.json":
            assert code == 1
            assert "overall: FAIL (law failure)" in out
            assert "witness=(0, 0, 0)" in out
        else:
            assert code == 0
            assert "overall: PASS (all checks passed)" in out

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "verify", "/nonexistent/x.json")
        assert code == 2 and err.startswith("error:")

    def test_schema_error(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text('{"kind": "shelf"}', encoding="utf-8")
        code, _, err = run(capsys, "verify", str(path))
        assert code == 2 and "square table" in err
        path.write_text('{"kind": "hopf_algebra", "dim": 2}', encoding="utf-8")
        code, _, err = run(capsys, "verify", str(path))
        assert code == 2 and "missing keys" in err

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate", corpus("d3_shelf.json"))[0] == 2

    def test_help_exits_zero(self, capsys):
        assert run(capsys, "--help")[0] == 0
        assert run(capsys, "verify", "--help")[0] == 0


class TestReport:
    def test_json_format_agrees_with_text(self, capsys):
        code, out, _ = run(capsys, "report", corpus("d3_shelf.json"), "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["pass"] is True and obj["checks"]
        code, out, _ = run(capsys, "report", corpus("d3_shelf.json"), "--format", "text")
        assert code == 0 and "overall: PASS" in out

    def test_json_format_on_failure(self, capsys):
        code, out, _ = run(capsys, "report", corpus("broken_shelf.json"), "--format", "json")
        assert code == 1
        obj = json.loads(out)
        assert obj["pass"] is False
        assert [0, 0, 0] in [c.get("witness") for c in obj["checks"]]

    def test_bad_format_flag(self, capsys):
        assert run(capsys, "report", corpus("d3_shelf.json"), "--format", "xml")[0] == 2


class TestYbe:
    def test_broken_shelf_reports_a_witness(self, capsys):
        code, out, _ = run(capsys, "ybe", corpus("broken_shelf.json"))
        assert code == 1
        assert "witness=(0, 0, 0)" in out

    @pytest.mark.parametrize(
        "name",
        ["d3_shelf.json", "qs3_hopf.json", "d3_adjoint_crmod.json",
         "l2_identity_crmod.json", "d3_shelf_bundle.json", "f7z3_hennings_bundle.json"],
    )
    def test_passing_documents(self, capsys, name):
        code, out, _ = run(capsys, "ybe", corpus(name))
        assert code == 0 and "overall: PASS" in out

    def test_single_triple_on_a_bundle(self, capsys):
        code, out, _ = run(capsys, "ybe", corpus("d3_shelf_bundle.json"), "--triple", "0,1,0")
        assert code == 0
        assert "ybe.0.1.0" in out

    def test_triple_errors(self, capsys):
        bundle = corpus("d3_shelf_bundle.json")
        assert run(capsys, "ybe", bundle, "--triple", "0,1")[0] == 2
        assert run(capsys, "ybe", bundle, "--triple", "a,b,c")[0] == 2
        assert run(capsys, "ybe", bundle, "--triple", "0,1,9")[0] == 2
        assert run(capsys, "ybe", corpus("qs3_hopf.json"), "--triple", "1,0,0")[0] == 2
        assert run(capsys, "ybe", corpus("d3_shelf.json"), "--triple", "0,1,0")[0] == 2

    def test_max_dim_guard(self, capsys, monkeypatch):
        monkeypatch.setenv("YBX_MAX_DIM", "2")
        code, _, err = run(capsys, "ybe", corpus("d3_shelf_bundle.json"))
        assert code == 2 and "YBX_MAX_DIM" in err


class TestCharacters:
    def test_census(self, capsys):
        code, out, _ = run(capsys, "characters", corpus("conj_s3_adjoint.json"))
        assert code == 0
        assert out.splitlines() == ["1 YD characters", "character 0: invariant grade 0"]
        code, out, _ = run(capsys, "characters", corpus("projection3_shelf.json"))
        assert code == 0 and out.splitlines()[0] == "3 YD characters"
        code, out, _ = run(capsys, "characters", corpus("cyclic3_shelf.json"))
        assert code == 0 and out.splitlines() == ["0 YD characters"]

    def test_unsupported_kind(self, capsys):
        code, _, err = run(capsys, "characters", corpus("z3_group.json"))
        assert code == 2 and "does not apply" in err


class TestPiCheck:
    @pytest.mark.parametrize(
        "name, exponents, code",
        [
            ("d3_shelf.json", "0,1,1,1", 0),
            ("d3_shelf.json", "1,1,1,1", 1),
            ("conj_s3_adjoint.json", "0,1,1,1", 0),
            ("qs3_hopf.json", "1,1,1,1", 0),
            ("z2_conj_crmod.json", "1,1,1,1", 0),
            ("l2_identity_crmod.json", "0,1,1,1", 0),
        ],
    )
    def test_exponent_ledger(self, capsys, name, exponents, code):
        got, out, _ = run(capsys, "pi-check", corpus(name), "--exponents", exponents)
        assert got == code
        assert ("overall: PASS" in out) == (code == 0)

    def test_flag_errors(self, capsys):
        shelf = corpus("d3_shelf.json")
        assert run(capsys, "pi-check", shelf, "--exponents", "0,1,1")[0] == 2
        assert run(capsys, "pi-check", shelf, "--exponents", "9,1,1,1")[0] == 2
        assert run(capsys, "pi-check", corpus("bantay_rep.json"),
                   "--exponents", "1,1,1,1")[0] == 2

    def test_invalid_max_dim_env(self, capsys, monkeypatch):
        monkeypatch.setenv("YBX_MAX_DIM", "abc")
        code, _, err = run(capsys, "pi-check", corpus("d3_shelf.json"),
                           "--exponents", "0,1,1,1")
        assert code == 2 and "YBX_MAX_DIM" in err


class TestPentagon:
    @pytest.mark.parametrize(
        "name",
        ["d3_shelf.json", "d3_rack.json", "conj_s3_adjoint.json",
         "l2_leibniz.json", "l2_identity_crmod.json", "l2_kplus_rep.json"],
    )
    def test_passing_documents(self, capsys, name):
        code, out, _ = run(capsys, "pentagon", corpus(name))
        assert code == 0 and "overall: PASS" in out
        assert "pentagon." in out

    def test_unsupported_kinds(self, capsys):
        assert run(capsys, "pentagon", corpus("z3_group.json"))[0] == 2
        assert run(capsys, "pentagon", corpus("bantay_rep.json"))[0] == 2


class TestBraiding:
    def test_shelf_pair_map(self, capsys):
        code, out, _ = run(capsys, "braiding", corpus("d3_shelf.json"), "--pair", "0,0")
        assert code == 0
        obj = json.loads(out)
        sigma = sd_pair_map(dihedral_shelf(3).table)
        assert obj == {"domain": 9, "codomain": 9, "table": list(sigma.table)}

    def test_hopf_pair_is_a_matrix(self, capsys):
        code, out, _ = run(capsys, "braiding", corpus("qs3_hopf.json"), "--pair", "0,1")
        assert code == 0
        obj = json.loads(out)
        assert obj["field"] == "Q"
        assert len(obj["matrix"]) == 36 and len(obj["matrix"][0]) == 36

    def test_bundle_pair(self, capsys):
        code, out, _ = run(capsys, "braiding", corpus("d3_shelf_bundle.json"),
                           "--pair", "0,1")
        assert code == 0
        obj = json.loads(out)
        assert obj["domain"] == 18 and obj["codomain"] == 18

    def test_out_file(self, capsys, tmp_path):
        target = tmp_path / "sigma.json"
        code, out, _ = run(capsys, "braiding", corpus("d3_shelf.json"),
                           "--pair", "0,0", "--out", str(target))
        assert code == 0 and out.strip() == f"wrote {target}"
        written = json.loads(target.read_text(encoding="utf-8"))
        _, direct, _ = run(capsys, "braiding", corpus("d3_shelf.json"), "--pair", "0,0")
        assert written == json.loads(direct)

    def test_pair_errors(self, capsys):
        assert run(capsys, "braiding", corpus("d3_shelf.json"), "--pair", "0,1")[0] == 2
        assert run(capsys, "braiding", corpus("qs3_hopf.json"), "--pair", "1,0")[0] == 2
        assert run(capsys, "braiding", corpus("d3_shelf_bundle.json"), "--pair", "0,7")[0] == 2
        assert run(capsys, "braiding", corpus("z3_group.json"), "--pair", "0,0")[0] == 2


class TestBraid:
    def test_shelf_word(self, capsys):
        code, out, _ = run(capsys, "braid", corpus("d3_shelf.json"),
                           "--strands", "3", "--word", "1 2 1")
        assert code == 0
        assert json.loads(out) == {
            "strands": 3, "word": [1, 2, 1], "size": 27,
            "bijective": True, "fixed_points": 3,
        }

    def test_rack_word_cancels(self, capsys):
        code, out, _ = run(capsys, "braid", corpus("d3_rack.json"),
                           "--strands", "2", "--word", "1 -1")
        assert code == 0
        obj = json.loads(out)
        assert obj["size"] == 9 and obj["fixed_points"] == 9 and obj["bijective"] is True

    def test_hopf_word_traces(self, capsys):
        code, out, _ = run(capsys, "braid", corpus("qs3_hopf.json"),
                           "--strands", "2", "--word", "1 1")
        assert code == 0
        obj = json.loads(out)
        assert obj == {"strands": 2, "word": [1, 1], "size": 36, "trace": 18}

    def test_flag_errors(self, capsys):
        shelf = corpus("d3_shelf.json")
        assert run(capsys, "braid", shelf, "--strands", "1", "--word", "1")[0] == 2
        assert run(capsys, "braid", shelf, "--strands", "2", "--word", "0")[0] == 2
        assert run(capsys, "braid", shelf, "--strands", "2", "--word", "x")[0] == 2
        assert run(capsys, "braid", shelf, "--strands", "2", "--word", "2")[0] == 2
        assert run(capsys, "braid", corpus("z3_group.json"),
                   "--strands", "2", "--word", "1")[0] == 2

    def test_inverse_needs_a_bijective_braiding(self, capsys, tmp_path):
        path = tmp_path / "constant.json"
        path.write_text(json.dumps({"kind": "shelf", "table": [[0, 0], [0, 0]]}),
                        encoding="utf-8")
        code, _, err = run(capsys, "braid", str(path), "--strands", "2", "--word", "-1")
        assert code == 2 and "error:" in err

    def test_strand_count_guard(self, capsys):
        code, _, err = run(capsys, "braid", corpus("d3_shelf.json"),
                           "--strands", "8", "--word", "1")
        assert code == 2 and "YBX_MAX_DIM" in err
