import json

import pytest

from lct.cli import main
from lct.pipeline import bundled_corpus_path

SAMPLE = "def add_two_numbers(first_value, second_value):\n    return first_value + second_value\n"


@pytest.fixture
def sample(tmp_path):
    path = tmp_path / "add.py"
    path.write_text(SAMPLE)
    return path


def test_extract(sample, capsys):
    assert main(["extract", str(sample), "--lang", "python"]) == 0
    caps = json.loads(capsys.readouterr().out)
    assert [c["text"] for c in caps] == ["add_two_numbers", "first_value", "second_value"]


def test_replace_then_restore(sample, tmp_path, capsys):
    assert main(["replace", str(sample), "--lang", "python"]) == 0
    compacted = capsys.readouterr().out
    assert "first_value" not in compacted and "id_0" in compacted
    sidecar = tmp_path / "add.py.idmap.json"
    assert json.loads(sidecar.read_text())["version"] == 1
    out = tmp_path / "out.py"
    out.write_text(compacted)
    assert main(["restore", str(out), "--map", str(sidecar)]) == 0
    assert capsys.readouterr().out == SAMPLE


def test_restore_reports_unresolved(sample, tmp_path, capsys):
    sidecar = tmp_path / "m.json"
    main(["replace", str(sample), "--lang", "python", "--map", str(sidecar)])
    capsys.readouterr()
    out = tmp_path / "t.py"
    out.write_text("print(id_0)\n")
    assert main(["restore", str(out), "--map", str(sidecar)]) == 0
    captured = capsys.readouterr()
    assert captured.out == "print(add_two_numbers)\n"
    assert "unresolved placeholder: id_1" in captured.err


def test_replace_categories(sample, capsys):
    main(["replace", str(sample), "--lang", "python", "--categories", "F"])
    out = capsys.readouterr().out
    assert "add_two_numbers" not in out and "first_value" in out


def test_translate_writes_artifacts(sample, tmp_path, capsys):
    out_dir = tmp_path / "out"
    out_dir.mkdir()
    assert main(["translate", str(sample), "--from", "python", "--to", "java", "--out-dir", str(out_dir)]) == 0
    assert capsys.readouterr().out == SAMPLE
    assert (out_dir / "add.py.idmap.json").exists()
    assert "id_0" in (out_dir / "add.py.raw.txt").read_text()


def test_translate_reorder_mock(sample, capsys):
    assert main(["translate", str(sample), "--from", "python", "--to", "go", "--mock", "reorder"]) == 0
    captured = capsys.readouterr()
    assert "add_two_numbers" in captured.out and "unresolved" not in captured.err


def test_stats_default_corpus(capsys):
    assert main(["stats"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert set(report["languages"]) == {"c", "cpp", "java", "go", "python"}


def test_stats_needs_records(tmp_path, capsys):
    assert main(["stats", str(tmp_path)]) == 2
    assert "stats stage failed" in capsys.readouterr().err


def test_ablate(sample, capsys):
    assert main(["ablate", str(sample), "--from", "python", "--to", "c", "--sets", "F;P;-"]) == 0
    rows = json.loads(capsys.readouterr().out)
    assert [r["categories"] for r in rows] == ["F", "P", "-"]
    assert rows[0]["replaced"] == ["add_two_numbers"]
    assert rows[2]["replaced"] == [] and rows[2]["delta_l"] == 0
    assert all(r["restored"] == SAMPLE for r in rows)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["replace"],
        ["extract", "x.py", "--lang", "haskell"],
        ["replace", "x.py", "--lang", "python", "--categories", "Q"],
        ["translate", "x.py", "--from", "c", "--to", "go", "--mode", "fancy"],
    ],
)
def test_usage_errors_exit_1(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 1


def test_same_language_exit_1(sample, capsys):
    assert main(["translate", str(sample), "--from", "python", "--to", "python"]) == 1


def test_bpe_without_vocab_exit_1(sample):
    assert main(["replace", str(sample), "--lang", "python", "--tokenizer", "bpe"]) == 1


def test_missing_file_exit_2(tmp_path, capsys):
    assert main(["replace", str(tmp_path / "none.py"), "--lang", "python"]) == 2
    assert "read stage failed" in capsys.readouterr().err


def test_http_failure_exit_2(sample, stub_server, capsys):
    stub_server.script = [(413, "too big")]
    code = main(["translate", str(sample), "--from", "python", "--to", "go", "--provider", "http", "--endpoint", stub_server.url])
    assert code == 2
    assert "translate stage failed" in capsys.readouterr().err


def test_rules_override(sample, tmp_path, capsys):
    rules = tmp_path / "python.rules"
    rules.write_text("PARENT function_definition F\nNOT add_two_numbers\n")
    main(["extract", str(sample), "--lang", "python", "--rules", str(tmp_path)])
    assert json.loads(capsys.readouterr().out) == []


def test_bad_rules_exit_2(sample, tmp_path):
    (tmp_path / "python.rules").write_text("WHAT\n")
    assert main(["extract", str(sample), "--lang", "python", "--rules", str(tmp_path)]) == 2


def test_bundled_corpus_exists():
    assert bundled_corpus_path().is_dir()
