"""End-to-end runs of the installed command-line interface."""

import json
import subprocess
import sys

import pytest

import corpusgen

MODULE = [sys.executable, "-m", "cookbook_compiler.cli"]


def run_cli(*argv, cwd=None):
    return subprocess.run(MODULE + list(argv), capture_output=True,
                          text=True, cwd=cwd)


@pytest.fixture(scope="session")
def synthetic_inputs(tmp_path_factory):
    """A 460-recipe table plus a vocabulary covering all its terms."""
    root = tmp_path_factory.mktemp("synthetic")
    table = root / "table.tsv"
    table.write_text(corpusgen.synthetic_table(corpusgen.rng(8)),
                     encoding="utf-8")
    vocab = root / "vocab"
    corpusgen.write_synthetic_vocab(vocab)
    return table, vocab


class TestBuild:
    def test_fixture_build_succeeds(self, fixtures_dir, vocab_dir, tmp_path):
        result = run_cli("build", "--input",
                         str(fixtures_dir / "zia_dina.tsv"),
                         "--vocab", str(vocab_dir),
                         "--out", str(tmp_path))
        assert result.returncode == 0
        assert "0 errors, 0 warnings" in result.stderr
        lines = result.stdout.splitlines()
        assert len(lines) == 11
        for line in lines:
            assert (tmp_path / line.split(str(tmp_path) + "/")[-1]).is_file()

    def test_strict_unknown_ingredient_aborts(self, fixtures_dir, vocab_dir,
                                              tmp_path):
        table = tmp_path / "bad.tsv"
        original = (fixtures_dir / "zia_dina_full.tsv").read_text("utf-8")
        table.write_text(original.replace("rigatoni", "platypus"), "utf-8")
        out = tmp_path / "out"
        result = run_cli("build", "--input", str(table),
                         "--vocab", str(vocab_dir),
                         "--out", str(out), "--strict")
        assert result.returncode == 1
        assert "unknown-ingredient" in result.stderr
        assert "no files written" in result.stderr
        assert not out.exists()

    def test_non_strict_build_keeps_warnings(self, fixtures_dir, vocab_dir,
                                             tmp_path):
        table = tmp_path / "warm.tsv"
        original = (fixtures_dir / "zia_dina.tsv").read_text("utf-8")
        table.write_text(original.replace("Rimini\tEmilia Romagna",
                                          "Atlantis\tEmilia Romagna"),
                         "utf-8")
        out = tmp_path / "out"
        result = run_cli("build", "--input", str(table),
                         "--vocab", str(vocab_dir), "--out", str(out))
        assert result.returncode == 0
        assert "0 errors, 1 warning" in result.stderr
        assert result.stderr.count("unknown city") == 1
        assert (out / "map.json").is_file()
        assert json.loads((out / "map.json").read_bytes()) == {"points": []}

    def test_missing_input_exits_2(self, tmp_path):
        result = run_cli("build", "--input", str(tmp_path / "absent.tsv"))
        assert result.returncode == 2
        assert result.stderr.startswith("error:")
        assert result.stdout == ""

    def test_no_input_configured_exits_2(self):
        result = run_cli("build")
        assert result.returncode == 2
        assert "input" in result.stderr

    def test_edge_threshold_zero_exits_2(self, fixtures_dir):
        result = run_cli("build", "--input",
                         str(fixtures_dir / "zia_dina.tsv"),
                         "--edge-threshold", "0")
        assert result.returncode == 2

    def test_build_without_vocab_skips_term_checks(self, fixtures_dir,
                                                   tmp_path):
        result = run_cli("build", "--input",
                         str(fixtures_dir / "zia_dina_full.tsv"),
                         "--out", str(tmp_path))
        assert result.returncode == 0
        assert "unknown-ingredient" not in result.stderr

    def test_synthetic_corpus_builds(self, synthetic_inputs, tmp_path):
        table, vocab = synthetic_inputs
        result = run_cli("build", "--input", str(table),
                         "--vocab", str(vocab), "--out", str(tmp_path))
        assert result.returncode == 0, result.stderr
        general = json.loads((tmp_path / "general.json").read_bytes())
        assert general["stats"]["recipes"] == 460


class TestValidate:
    def test_clean_fixture(self, fixtures_dir, vocab_dir):
        result = run_cli("validate", "--input",
                         str(fixtures_dir / "zia_dina.tsv"),
                         "--vocab", str(vocab_dir))
        assert result.returncode == 0
        assert result.stdout.strip() == "0 errors, 0 warnings"

    def test_json_format(self, fixtures_dir, vocab_dir):
        result = run_cli("validate", "--input",
                         str(fixtures_dir / "zia_dina.tsv"),
                         "--vocab", str(vocab_dir), "--format", "json")
        assert result.returncode == 0
        payload = json.loads(result.stdout)
        assert payload["errors"] == 0 and payload["warnings"] == 0
        assert payload["entries"] == []

    def test_image_page_mismatch_is_error(self, fixtures_dir, vocab_dir,
                                          tmp_path):
        table = tmp_path / "mismatch.tsv"
        original = (fixtures_dir / "zia_dina.tsv").read_text("utf-8")
        broken = original.replace("2; 3", "2; 3; 4")
        assert broken != original
        table.write_text(broken, "utf-8")
        result = run_cli("validate", "--input", str(table),
                         "--vocab", str(vocab_dir), "--format", "json")
        assert result.returncode == 1
        payload = json.loads(result.stdout)
        mismatches = [e for e in payload["entries"]
                      if e["code"] == "image-page-mismatch"]
        assert mismatches and mismatches[0]["severity"] == "error"
        assert mismatches[0]["row"] == 7

    def test_unknown_term_warns_without_strict(self, fixtures_dir, vocab_dir,
                                               tmp_path):
        table = tmp_path / "odd.tsv"
        original = (fixtures_dir / "zia_dina_full.tsv").read_text("utf-8")
        table.write_text(original.replace("rigatoni", "platypus"), "utf-8")
        result = run_cli("validate", "--input", str(table),
                         "--vocab", str(vocab_dir))
        assert result.returncode == 0
        assert "unknown-ingredient" in result.stdout

    def test_strict_flips_exit_code(self, fixtures_dir, vocab_dir, tmp_path):
        table = tmp_path / "odd.tsv"
        original = (fixtures_dir / "zia_dina_full.tsv").read_text("utf-8")
        table.write_text(original.replace("rigatoni", "platypus"), "utf-8")
        result = run_cli("validate", "--input", str(table),
                         "--vocab", str(vocab_dir), "--strict")
        assert result.returncode == 1


class TestStats:
    def test_fixture_lines(self, fixtures_dir, vocab_dir):
        result = run_cli("stats", "--input",
                         str(fixtures_dir / "zia_dina.tsv"),
                         "--vocab", str(vocab_dir))
        assert result.returncode == 0
        lines = result.stdout.splitlines()
        assert lines[0] == "cookbooks: 1 / recipes: 2 / ingredients: 0"
        assert lines[1] == "gender: female=2"
        assert "alphabet: M=1 P=1" in lines
        assert "categories: first=2" in lines
        assert "ingredients: (empty)" in lines
        assert "provenance: Rimini=2" in lines

    def test_synthetic_recipe_count(self, synthetic_inputs):
        table, vocab = synthetic_inputs
        result = run_cli("stats", "--input", str(table),
                         "--vocab", str(vocab))
        assert result.returncode == 0
        assert result.stdout.startswith("cookbooks: 10 / recipes: 460")


class TestConfigFile:
    def test_config_drives_build(self, fixtures_dir, vocab_dir, tmp_path):
        conf = tmp_path / "build.conf"
        conf.write_text(
            "# site build\n"
            f"input = {fixtures_dir / 'zia_dina.tsv'}\n"
            f"vocab = {vocab_dir}\n"
            f"out = {tmp_path / 'site'}\n",
            encoding="utf-8")
        result = run_cli("build", "--config", str(conf))
        assert result.returncode == 0
        assert (tmp_path / "site" / "general.json").is_file()

    def test_flag_overrides_config(self, fixtures_dir, vocab_dir, tmp_path):
        conf = tmp_path / "build.conf"
        conf.write_text(
            f"input = {fixtures_dir / 'zia_dina.tsv'}\n"
            f"out = {tmp_path / 'ignored'}\n",
            encoding="utf-8")
        result = run_cli("build", "--config", str(conf),
                         "--out", str(tmp_path / "wins"))
        assert result.returncode == 0
        assert (tmp_path / "wins" / "general.json").is_file()
        assert not (tmp_path / "ignored").exists()

    def test_unknown_config_key_exits_2(self, tmp_path):
        conf = tmp_path / "bad.conf"
        conf.write_text("inptu = table.tsv\n", encoding="utf-8")
        result = run_cli("build", "--config", str(conf))
        assert result.returncode == 2
        assert "inptu" in result.stderr

    def test_column_override_via_config(self, fixtures_dir, vocab_dir,
                                        tmp_path):
        table = tmp_path / "renamed.tsv"
        original = (fixtures_dir / "zia_dina.tsv").read_text("utf-8")
        table.write_text(original.replace("Title Recipe", "Recipe name", 1),
                         "utf-8")
        conf = tmp_path / "build.conf"
        conf.write_text(
            f"input = {table}\n"
            f"vocab = {vocab_dir}\n"
            f"out = {tmp_path / 'site'}\n"
            "column.recipe = Recipe name\n",
            encoding="utf-8")
        result = run_cli("build", "--config", str(conf))
        assert result.returncode == 0, result.stderr
