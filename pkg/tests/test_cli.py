import subprocess
import sys
from pathlib import Path

import pytest

from colored_motzkin.cli import main

from conftest import D1_PATH, D1_WORD, D2_PATH, D2_WORD

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


@pytest.mark.parametrize("argv, golden", [
    (["map", "--d", "2", "--path", D2_PATH], "map_d2.txt"),
    (["enumerate", "motzkin", "--n", "3", "--d", "1"], "enumerate_motzkin_n3_d1.txt"),
    (["enumerate", "syt", "--n", "3", "--d", "2"], "enumerate_syt_n3_d2.txt"),
    (["render", "path", "U1 U2 L D2 L D1"], "render_path.txt"),
    (["render", "tableau", "1 1 2 3 2 1"], "render_tableau.txt"),
])
def test_golden(capsys, argv, golden):
    status, out, _ = run(capsys, *argv)
    assert status == 0
    assert out == (GOLDEN / golden).read_text()


def test_spec_examples(capsys):
    assert run(capsys, "map", "--d", "2", "--path", D2_PATH)[1] == D2_WORD + "\n"
    assert run(capsys, "count", "syt", "--n", "5", "--d", "5", "--method", "dp")[1] == "26\n"
    assert run(capsys, "map", "--d", "1", "--path", "L L L")[1] == "1 1 1\n"


def test_unmap_accepts_all_word_formats(capsys):
    for text in [D1_WORD, D1_WORD.replace(" ", ","), D1_WORD.replace(" ", "")]:
        status, out, _ = run(capsys, "unmap", "--d", "1", "--word", text)
        assert status == 0 and out == D1_PATH + "\n"


@pytest.mark.parametrize("d, path", [(1, D1_PATH), (2, D2_PATH), (3, "U1 U2 U3 L D3 D2 D1 L")])
def test_map_unmap_roundtrip(capsys, d, path):
    _, word, _ = run(capsys, "map", "--d", str(d), "--path", path)
    _, back, _ = run(capsys, "unmap", "--d", str(d), "--word", word.strip())
    assert back == path + "\n"
    _, again, _ = run(capsys, "map", "--d", str(d), "--path", back.strip())
    assert again == word


def test_trace_output(capsys):
    status, out, _ = run(capsys, "map", "--d", "2", "--path", D2_PATH, "--trace")
    lines = out.splitlines()
    assert status == 0
    assert lines[0].startswith("forward step=C1 stage=2 anchor=7 chain=(8,13)")
    assert lines[-1] == D2_WORD
    status, out, _ = run(capsys, "unmap", "--d", "2", "--word", D2_WORD, "--trace")
    assert out.splitlines()[-1] == D2_PATH
    assert any(line.startswith("backward step=D3") for line in out.splitlines())


@pytest.mark.parametrize("family, n, d", [("motzkin", 6, 2), ("motzkin", 0, 1), ("syt", 6, 3), ("syt", 5, 5)])
@pytest.mark.parametrize("method", ["dp", "enumerate"])
def test_enumerate_lines_equal_count(capsys, family, n, d, method):
    _, listing, _ = run(capsys, "enumerate", family, "--n", str(n), "--d", str(d))
    _, count, _ = run(capsys, "count", family, "--n", str(n), "--d", str(d), "--method", method)
    assert len(listing.splitlines()) == int(count)


def test_count_formula_methods(capsys):
    assert run(capsys, "count", "syt", "--n", "5", "--d", "5", "--method", "formula")[1] == "26\n"
    assert run(capsys, "count", "motzkin", "--n", "5", "--d", "2", "--method", "formula")[1] == "26\n"
    assert run(capsys, "count", "motzkin", "--n", "5", "--d", "1", "--method", "formula",
               "--level-policy", "floor-only")[1] == "10\n"
    for method in ["dp", "enumerate"]:
        assert run(capsys, "count", "motzkin", "--n", "5", "--d", "1", "--method", method,
                   "--level-policy", "floor-only")[1] == "10\n"


def test_enumerate_by_class(capsys):
    counts = {}
    for cls in ["lower", "hat", "bar"]:
        _, out, _ = run(capsys, "enumerate", "motzkin", "--n", "5", "--d", "2", "--class", cls)
        counts[cls] = len(out.splitlines())
    assert sum(counts.values()) == 26
    assert counts["lower"] + counts["hat"] == 25
    assert counts["bar"] == 1


def test_stats(capsys):
    assert run(capsys, "stats", "--d", "2", "--path", D2_PATH)[1] == "level_steps=1 odd_columns=1\n"
    assert run(capsys, "stats", "--d", "1", "--path", "L L L")[1] == "level_steps=3 odd_columns=3\n"


def test_verify_command(capsys):
    status, out, _ = run(capsys, "verify", "--n-max", "4", "--d-max", "2")
    assert status == 0
    assert "FAIL" not in out and "counts.formula" in out
    status, out, _ = run(capsys, "verify", "--n-max", "3", "--d-max", "1", "--suite", "statistic",
                         "--format", "records")
    assert status == 0
    assert out.splitlines()[0].startswith("check=statistic ")


def test_verify_failure_exit_status(capsys, monkeypatch):
    from colored_motzkin import verify

    monkeypatch.setattr(verify, "phi", lambda p, d: (1,) * len(p))
    status, out, _ = run(capsys, "verify", "--n-max", "3", "--d-max", "1", "--suite", "bijection")
    assert status == 3
    assert "FAIL" in out


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    status, out, _ = run(capsys, "count", "syt", "--n", "4", "--d", "4", "-o", str(target))
    assert status == 0 and out == ""
    assert target.read_text() == "10\n"


@pytest.mark.parametrize("argv", [
    ["map", "--d", "1", "--path", "U1"],
    ["map", "--d", "1", "--path", "U2 D2"],
    ["map", "--d", "1", "--path", "X"],
    ["unmap", "--d", "1", "--word", "2 1"],
    ["unmap", "--d", "1", "--word", "1 2 3 4"],
    ["stats", "--d", "1", "--path", "D1 U1"],
    ["render", "tableau", "1 3"],
])
def test_invalid_input_exit_2(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2
    assert out == "" and "invalid input" in err


@pytest.mark.parametrize("argv", [
    ["count", "syt", "--n", "4", "--d", "6", "--method", "formula"],
    ["count", "motzkin", "--n", "4", "--d", "3", "--method", "formula"],
    ["count", "syt", "--n", "4", "--d", "3", "--level-policy", "floor-only"],
    ["enumerate", "syt", "--n", "3", "--d", "3", "--class", "hat"],
    ["enumerate", "motzkin", "--n", "3", "--d", "0", "--class", "hat"],
    ["verify", "--n-max", "3"],
])
def test_usage_errors_exit_1(capsys, argv):
    status, _, err = run(capsys, *argv)
    assert status == 1 and "error" in err


@pytest.mark.parametrize("argv", [[], ["frobnicate"], ["map", "--d", "-1", "--path", "L"], ["count", "syt", "--n", "x", "--d", "2"]])
def test_argparse_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 1


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "colored_motzkin", "map", "--d", "1", "--path", D1_PATH],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == D1_WORD + "\n"
