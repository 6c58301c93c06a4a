import json

import pytest

from zmtool.cli import main


def test_validate_ok(capsys):
    assert main(["validate", "3", "4", "2"]) == 0
    assert capsys.readouterr().out.strip() == "valid, d=2"


def test_validate_invalid(capsys):
    assert main(["validate", "4", "2", "3"]) == 2
    assert "gcd(m,n)!=1" in capsys.readouterr().out


def test_validate_usage_error():
    assert main(["validate", "3", "4", "x"]) == 64
    assert main([]) == 64
    assert main(["frobnicate"]) == 64


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0
    assert "validate" in capsys.readouterr().out


def test_info_json(capsys):
    assert main(["info", "3", "4", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["k"] == 6
    assert data["k_prime"] == 5
    assert data["aut_order"] == 12
    assert data["subgroup_count"] == 8


def test_info_text_cyclic(capsys):
    assert main(["info", "1", "7", "0"]) == 0
    out = capsys.readouterr().out
    assert "k: 7\n" in out
    assert "k_prime: 2\n" in out
    assert "aut_order: 6\n" in out


def test_info_s3(capsys):
    assert main(["info", "3", "2", "2", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["k"], data["k_prime"]) == (3, 3)


def test_info_invalid_triple(capsys):
    assert main(["info", "4", "2", "3"]) == 2
    assert "gcd(m,n)" in capsys.readouterr().err


def test_classes_csv_golden(capsys, golden):
    assert main(["classes", "3", "4", "2"]) == 0
    assert capsys.readouterr().out == golden("classes_3_4_2.csv")


def test_classes_row_counts(capsys):
    assert main(["classes", "1", "1", "0", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 1
    assert main(["classes", "5", "4", "2", "--format", "json"]) == 0
    assert len(json.loads(capsys.readouterr().out)) == 5


def test_classes_above_element_budget(zm_env):
    zm_env("ZMTOOL_ELEMENT_BUDGET", 10)
    assert main(["classes", "3", "4", "2"]) == 3
    assert main(["table", "--m-max", "3", "--n-max", "4"]) == 3


def test_subgroups_csv_golden(capsys, golden):
    assert main(["subgroups", "3", "4", "2"]) == 0
    assert capsys.readouterr().out == golden("subgroups_3_4_2.csv")


def test_verify(capsys):
    assert main(["verify", "3", "4", "2"]) == 0
    assert "all 13 checks passed" in capsys.readouterr().out


def test_verify_budget_exceeded():
    assert main(["verify", "3", "4", "2", "--budget", "5"]) == 3


def test_verify_failure_exit_code(monkeypatch, capsys):
    from zmtool.services import verification
    monkeypatch.setattr(verification.cc, "k_conj", lambda p: 7)
    assert main(["verify", "3", "4", "2"]) == 1
    assert "verification failed at class_count" in capsys.readouterr().out


def test_verify_budget_from_environment(zm_env):
    zm_env("ZMTOOL_BUDGET", 10)
    assert main(["verify", "3", "4", "2"]) == 3


def test_table_golden(capsys, golden):
    assert main(["table", "--m-max", "3", "--n-max", "4"]) == 0
    assert capsys.readouterr().out == golden("table_m3_n4.csv")


def test_table_empty_range(capsys):
    assert main(["table", "--m-max", "0", "--n-max", "5"]) == 0
    assert capsys.readouterr().out == "m,n,r,d,group_order,k,k_prime,subgroup_count\n"


def test_table_to_file(tmp_path, golden):
    out = tmp_path / "table.csv"
    assert main(["table", "--m-max", "3", "--n-max", "4", "--out", str(out)]) == 0
    assert out.read_text() == golden("table_m3_n4.csv")


def test_table_unwritable_path(tmp_path):
    out = tmp_path / "missing" / "table.csv"
    assert main(["table", "--m-max", "3", "--n-max", "4", "--out", str(out)]) == 73


@pytest.mark.slow
def test_table_rows_strictly_increasing(capsys):
    assert main(["table", "--m-max", "15", "--n-max", "12"]) == 0
    lines = capsys.readouterr().out.splitlines()[1:]
    keys = [tuple(int(x) for x in line.split(",")[:3]) for line in lines]
    assert all(a < b for a, b in zip(keys, keys[1:]))
