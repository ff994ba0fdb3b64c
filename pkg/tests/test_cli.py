"""CLI behaviour: outputs, exit codes, byte stability, report files."""

import json

import pytest

from genmarkov.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen_command(capsys):
    code, out, _ = run_cli(capsys, "gen", "2", "3")
    assert code == 0
    assert out == "217\n"


def test_ord_and_band_and_ext(capsys):
    assert run_cli(capsys, "ord", "2", "3")[1] == "29\n"
    assert run_cli(capsys, "band", "1", "1")[1] == "17\n"
    assert run_cli(capsys, "ext", "1", "1", "2")[1] == "51\n"
    assert run_cli(capsys, "ext", "2", "3", "2")[1] == "282317\n"


def test_json_output_serializes_big_integers_as_strings(capsys):
    code, out, _ = run_cli(capsys, "gen", "2", "5", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["value"] == "4683"
    assert isinstance(payload["value"], str)


def test_signs_command(capsys):
    code, out, _ = run_cli(capsys, "signs", "2", "3")
    assert code == 0
    assert out.splitlines() == ["---++++-----+++", "runs [3,4,5,3]", "numerator 217"]
    code, out, _ = run_cli(capsys, "signs", "2", "3", "--even")
    assert out.splitlines()[1] == "runs [2,2,2,2]"
    code, out, _ = run_cli(capsys, "signs", "2", "3", "--midpoint", "plus")
    assert out.splitlines()[1] == "runs [3,5,4,3]"


def test_cf_and_snake_commands(capsys):
    assert run_cli(capsys, "cf", "numerator", "3,4,5,3")[1] == "217\n"
    code, out, _ = run_cli(capsys, "snake", "render", "3,3")
    assert code == 0
    assert "+---+" in out
    assert "matchings 10" in out
    code, out, _ = run_cli(capsys, "snake", "render", "3,3", "--format", "json")
    payload = json.loads(out)
    assert payload["sign_sequence"] == "---+++"


def test_tree_command(capsys):
    code, out, _ = run_cli(capsys, "tree", "--kind", "gen", "--depth", "3")
    assert code == 0
    lines = [json.loads(line) for line in out.strip().split("\n")]
    assert lines[0] == {"farey": ["0/1", "1/0", "1/1"], "triple": ["1", "1", "3"], "depth": 0}
    assert {"farey": ["1/3", "1/2", "2/5"], "triple": ["13", "61", "4683"], "depth": 3} in lines


def test_table_command_with_errata(capsys):
    code, out, _ = run_cli(capsys, "table", "--max-q", "7", "--errata")
    assert code == 0  # errata are reported, not fatal
    assert "4 errata" in out
    assert "4683" in out
    code, out, _ = run_cli(capsys, "table", "--max-q", "4", "--format", "csv")
    assert out.splitlines()[0].startswith("p,q,k,value")
    code, out, _ = run_cli(capsys, "table", "--max-q", "4", "--format", "tsv")
    assert out.splitlines()[0].startswith("p\tq\tk\tvalue")


def test_family_command(capsys):
    code, out, _ = run_cli(capsys, "family", "one_over_q", "--terms", "5")
    assert code == 0
    assert out.splitlines() == ["1", "3", "13", "61", "291"]


def test_limits_commands(capsys):
    code, out, _ = run_cli(capsys, "limits", "--family", "one_over_q")
    assert code == 0
    assert "4.79128784748" in out
    code, out, _ = run_cli(capsys, "limits", "--point", "1,1,1")
    assert code == 0
    assert "4.791287847478" in out
    code, out, _ = run_cli(capsys, "limits", "--family", "one_over_q", "--format", "csv")
    assert out.splitlines()[0] == "q,ratio,error"


def test_byte_stable_outputs(capsys):
    first = run_cli(capsys, "table", "--max-q", "6", "--format", "json")[1]
    second = run_cli(capsys, "table", "--max-q", "6", "--format", "json")[1]
    assert first == second
    first = run_cli(capsys, "tree", "--kind", "ord", "--depth", "5")[1]
    second = run_cli(capsys, "tree", "--kind", "ord", "--depth", "5")[1]
    assert first == second


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["nonsense"])
    assert excinfo.value.code == 2
    code, _, err = run_cli(capsys, "gen", "2", "4")  # not reduced: reduces fine
    assert code == 0
    code, _, err = run_cli(capsys, "ext", "2", "4", "2")  # not coprime
    assert code == 2
    assert "error" in err


def test_report_files_written(tmp_path, capsys):
    out_dir = tmp_path / "report"
    code, _, err = run_cli(
        capsys, "limits", "--family", "one_over_q", "--max-q", "30", "--out", str(out_dir)
    )
    assert code == 0
    assert (out_dir / "convergence_one_over_q.csv").exists()
    assert (out_dir / "convergence_one_over_q.png").stat().st_size > 0

    code, _, err = run_cli(capsys, "table", "--max-q", "5", "--out", str(out_dir))
    assert code == 0
    assert (out_dir / "table.csv").exists()
    assert (out_dir / "table.json").exists()
    assert (out_dir / "table.png").stat().st_size > 0


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "limits")
    assert code == 0
    assert "suite limits" in out
    assert "FAIL" not in out
