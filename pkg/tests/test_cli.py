"""Command line behavior: exit codes, formats, determinism."""

import json

import pytest
from click.testing import CliRunner

from ellsurf import BinForm, validate
from ellsurf.cli import main
from ellsurf.documents import dump_json, triple_to_document

from conftest import U, V


@pytest.fixture()
def runner():
    return CliRunner()


@pytest.fixture()
def w1_file(tmp_path, w1):
    path = tmp_path / "w1.json"
    path.write_text(dump_json(triple_to_document(w1)))
    return str(path)


def _write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(dump_json(doc) if isinstance(doc, dict) else doc)
    return str(path)


class TestValidateCommand:
    def test_valid(self, runner, w1_file):
        result = runner.invoke(main, ["validate", w1_file])
        assert result.exit_code == 0
        assert "valid" in result.output

    def test_nonminimal(self, runner, tmp_path):
        doc = {"k": 1, "p": ["0", "0", "0", "0", "1"], "q": ["0"] * 6 + ["1"]}
        path = _write(tmp_path, "bad.json", doc)
        result = runner.invoke(main, ["validate", path])
        assert result.exit_code == 2
        assert "non-minimal" in result.output
        assert "0" in result.output  # the witness point

    def test_malformed_rational(self, runner, tmp_path):
        doc = {"k": 1, "p": ["1/0", "0", "0", "0", "1"], "q": ["1"] + ["0"] * 6}
        path = _write(tmp_path, "bad2.json", doc)
        result = runner.invoke(main, ["validate", path])
        assert result.exit_code == 2

    def test_unreadable(self, runner, tmp_path):
        result = runner.invoke(main, ["validate", str(tmp_path / "missing.json")])
        assert result.exit_code == 2


class TestReportCommand:
    def test_w1_text(self, runner, w1_file):
        result = runner.invoke(main, ["report", w1_file])
        assert result.exit_code == 0
        assert "h0=1 h1=2" in result.output
        assert "V2" in result.output

    def test_w1_json_schema(self, runner, w1_file):
        result = runner.invoke(main, ["report", w1_file, "--json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert doc["topology"]["h0"] == 1
        assert doc["invariants"]["chi_top"] == 12
        assert len(doc["fibers"]) == 12
        assert doc["bounds"]["all_ok"]
        # exact rationals only: no floats anywhere in the JSON tree
        def no_floats(node):
            if isinstance(node, float):
                return False
            if isinstance(node, dict):
                return all(no_floats(v) for v in node.values())
            if isinstance(node, list):
                return all(no_floats(v) for v in node)
            return True

        assert no_floats(doc)

    def test_istar_refusal_with_partial_data(self, runner, tmp_path):
        t = validate(1, BinForm.monomial(4, 2), BinForm.monomial(6, 3))
        path = _write(tmp_path, "istar.json", triple_to_document(t))
        result = runner.invoke(main, ["report", path, "--json"])
        assert result.exit_code == 0
        doc = json.loads(result.output)
        assert "real_topology" in doc and "refused" in doc["real_topology"]
        assert len(doc["fibers"]) == 2

    def test_bundle_caveat(self, runner, tmp_path):
        t = validate(1, BinForm.zero(4), V ** 6 + U ** 6)
        path = _write(tmp_path, "bundle.json", triple_to_document(t))
        result = runner.invoke(main, ["report", path, "--json"])
        doc = json.loads(result.output)
        assert doc["topology"]["no_real_singular_fibers"]
        assert "caveat" in doc["topology"]

    def test_deterministic_bytes(self, runner, w1_file):
        a = runner.invoke(main, ["report", w1_file, "--json"]).output
        b = runner.invoke(main, ["report", w1_file, "--json"]).output
        assert a == b


class TestTransformCommand:
    def test_twist_twice_is_normalized_identity(self, runner, w1_file, tmp_path, w1):
        once = str(tmp_path / "t1.json")
        twice = str(tmp_path / "t2.json")
        r1 = runner.invoke(main, ["transform", w1_file, "--twist", "--out", once])
        assert r1.exit_code == 0
        r2 = runner.invoke(main, ["transform", once, "--twist", "--out", twice])
        assert r2.exit_code == 0
        from ellsurf import normalize
        from ellsurf.documents import load_triple

        assert load_triple(twice) == normalize(w1)

    def test_i0star_with_verify(self, runner, w1_file):
        result = runner.invoke(
            main, ["transform", w1_file, "--i0star", "4", "5", "--verify"]
        )
        assert result.exit_code == 0
        assert "VIOLATED" not in result.output
        doc = json.loads(result.output[result.output.index("{"):])
        assert doc["k"] == 2

    def test_i0star_equal_centers(self, runner, w1_file):
        result = runner.invoke(main, ["transform", w1_file, "--i0star", "1", "1"])
        assert result.exit_code == 2

    def test_requires_exactly_one_mode(self, runner, w1_file):
        result = runner.invoke(main, ["transform", w1_file])
        assert result.exit_code == 2


class TestFuzzCommand:
    def test_small_run_green(self, runner):
        result = runner.invoke(
            main, ["fuzz", "--k", "1", "--trials", "12", "--seed", "7"]
        )
        assert result.exit_code == 0, result.output
        assert "violations=0" in result.output

    def test_deterministic_output(self, runner):
        args = ["fuzz", "--k", "1", "--trials", "10", "--seed", "3"]
        a = runner.invoke(main, args).output
        b = runner.invoke(main, args).output
        assert a == b

    def test_zero_trials(self, runner):
        result = runner.invoke(main, ["fuzz", "--trials", "0"])
        assert result.exit_code == 0


class TestSearchCommand:
    def test_too_many_components_rejected(self, runner):
        result = runner.invoke(main, ["search", "--k", "1", "--components", "6"])
        assert result.exit_code == 2
        assert "bound" in result.output

    def test_two_components(self, runner, tmp_path):
        out = str(tmp_path / "found.json")
        result = runner.invoke(
            main, ["search", "--k", "1", "--components", "2", "--out", out]
        )
        assert result.exit_code == 0, result.output
        from ellsurf import betti
        from ellsurf.documents import load_triple

        assert betti(load_triple(out)).h0 == 2


class TestOracleCheckCommand:
    def test_w1_agrees(self, runner, w1_file):
        result = runner.invoke(main, ["oracle-check", w1_file])
        assert result.exit_code == 0
        assert "agree" in result.output


class TestWorkerCap:
    def test_thread_env_never_changes_bytes(self, runner, w1_file, monkeypatch):
        base = runner.invoke(main, ["report", w1_file, "--json"]).output
        monkeypatch.setenv("ELLSURF_THREADS", "8")
        capped = runner.invoke(main, ["report", w1_file, "--json"]).output
        assert capped == base
