import json

import pytest

from simsim.cli import main, parse_matrix_file


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count_polynomial(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--k", "2")
    assert code == 0
    assert out.strip() == "q^6 + q^5 + 2*q^4 + q^3 + 2*q^2"


def test_count_evaluated(capsys):
    code, out, _ = run(capsys, "count", "--n", "3", "--k", "2", "--q", "2")
    assert code == 0
    assert out.strip() == "144"


def test_count_json_schema(capsys):
    code, out, _ = run(capsys, "count", "--n", "2", "--k", "1", "--json")
    payload = json.loads(out)
    assert code == 0
    assert payload["schema_version"] == 1
    assert payload["command"] == "count"
    assert payload["result"]["polynomial"] == "q^2 + q"


def test_output_is_deterministic(capsys):
    _, out1, _ = run(capsys, "count", "--n", "4", "--k", "3", "--json")
    _, out2, _ = run(capsys, "count", "--n", "4", "--k", "3", "--json")
    assert out1 == out2


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--kmax", "3",
                       "--q", "2")
    assert code == 0
    assert "MISMATCH" not in out


def test_oracle_resource_exit_code(capsys):
    code, _, err = run(capsys, "oracle", "--n", "4", "--k", "2", "--q", "3",
                       "--method", "direct")
    assert code == 3
    assert "resource" in err


def test_census_ok(capsys):
    code, out, _ = run(capsys, "census", "--type", "(2,1)_1", "--q", "2")
    assert code == 0
    assert "matches" in out


def test_census_bad_type_is_usage_error(capsys):
    code, _, err = run(capsys, "census", "--type", "NT9", "--q", "2")
    assert code == 2


def test_nonneg(capsys):
    code, out, _ = run(capsys, "nonneg", "--kmax", "20")
    assert code == 0
    assert "certified" in out


def test_genfun_verify(capsys):
    code, out, _ = run(capsys, "genfun", "--n", "3", "--verify",
                       "--terms", "8")
    assert code == 0
    assert "ok" in out


def test_classify_file(tmp_path, capsys):
    f = tmp_path / "tuples.txt"
    f.write_text("# one pair over F_2\n"
                 "3 2 2\n"
                 "0 1 0\n0 0 0\n0 0 0\n"
                 "\n"
                 "0 0 0\n0 0 0\n0 0 0\n"
                 "---\n"
                 "0 1 0\n0 0 1\n0 0 0\n"
                 "\n"
                 "0 0 1\n0 0 0\n0 0 0\n")
    code, out, _ = run(capsys, "classify", "--input", str(f), "--json")
    assert code == 0
    payload = json.loads(out)
    rows = payload["result"]["tuples"]
    assert rows[0]["type"] == "(2,1)_1"
    assert rows[0]["centralizer_dim"] == 5
    assert rows[1]["type"] == "(3)_1"


def test_parse_matrix_file_rejects_non_prime_q():
    with pytest.raises(ValueError):
        parse_matrix_file("2 1 4\n0 0\n0 0\n")


def test_parse_matrix_file_rejects_bad_entries():
    with pytest.raises(ValueError):
        parse_matrix_file("2 1 2\n0 2\n0 0\n")
    with pytest.raises(ValueError):
        parse_matrix_file("2 1 2\n0 0\n")


def test_classify_missing_file_is_usage_error(capsys):
    code, _, _ = run(capsys, "classify", "--input", "/nonexistent/x.txt")
    assert code == 2


def test_threads_flag_does_not_change_output(capsys):
    _, out1, _ = run(capsys, "count", "--n", "3", "--k", "4", "--json")
    _, out2, _ = run(capsys, "count", "--n", "3", "--k", "4", "--json",
                     "--threads", "7")
    assert out1 == out2
