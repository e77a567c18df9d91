import json

import pytest

from v2partitions.cli import main, parse_bfile


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTable:
    def test_csv_output(self, capsys):
        code, out, _ = run(capsys, "table", "--family", "pe", "--limit", "8",
                           "--route", "product", "--format", "csv")
        lines = out.splitlines()
        assert code == 0
        assert lines[0] == "family,n,value,route"
        assert lines[-1] == "pe,8,5,product"

    def test_limit_zero(self, capsys):
        code, out, _ = run(capsys, "table", "--family", "pd", "--limit", "0")
        assert code == 0
        assert out.splitlines()[1] == "pd,0,1,gf"

    def test_json_lines(self, capsys):
        code, out, _ = run(capsys, "table", "--family", "pod", "--limit", "5",
                           "--route", "binomial", "--format", "json")
        records = [json.loads(line) for line in out.splitlines()]
        assert code == 0
        assert records[-1] == {"family": "pod", "n": 5, "value": "4", "route": "binomial"}
        assert all(set(r) == {"family", "n", "value", "route"} for r in records)

    def test_csv_and_json_carry_identical_tuples(self, capsys):
        _, csv_out, _ = run(capsys, "table", "--family", "ped", "--limit", "20",
                            "--route", "gf", "--format", "csv")
        _, json_out, _ = run(capsys, "table", "--family", "ped", "--limit", "20",
                             "--route", "gf", "--format", "json")
        csv_tuples = [tuple(line.split(",")) for line in csv_out.splitlines()[1:]]
        json_tuples = [(r["family"], str(r["n"]), r["value"], r["route"])
                       for r in map(json.loads, json_out.splitlines())]
        assert csv_tuples == json_tuples

    def test_unknown_family_is_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["table", "--family", "bogus", "--limit", "5"])
        assert exc.value.code == 2

    def test_brute_beyond_policy_is_usage_error(self, capsys):
        code, _, err = run(capsys, "table", "--family", "pe", "--limit", "61",
                           "--route", "brute")
        assert code == 2
        assert "error" in err


class TestVerify:
    def test_all_families_pass(self, capsys):
        code, out, _ = run(capsys, "verify", "--families", "all", "--limit", "100")
        assert code == 0
        assert out.count("PASS") == 6  # five families + binary-identity sweep
        assert "FAIL" not in out

    def test_single_family_with_brute(self, capsys):
        code, out, _ = run(capsys, "verify", "--families", "pe", "--limit", "40", "--brute")
        assert code == 0
        assert "brute" in out

    def test_unknown_family_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "--families", "bogus", "--limit", "10")
        assert code == 2
        assert "unknown family" in err

    def test_brute_with_large_limit_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "verify", "--families", "pd", "--limit", "100", "--brute")
        assert code == 2

    def test_stable_output_is_deterministic(self, capsys):
        args = ["verify", "--families", "all", "--limit", "60", "--stable"]
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second

    def test_stable_json_output_is_deterministic(self, capsys):
        args = ["verify", "--families", "pod,pe", "--limit", "50",
                "--format", "json", "--stable"]
        _, first, _ = run(capsys, *args)
        _, second, _ = run(capsys, *args)
        assert first == second


class TestRemark:
    def test_overpartition_tableau(self, capsys):
        code, out, _ = run(capsys, "remark", "--family", "overpartition-odd", "--n", "5")
        lines = out.splitlines()
        assert code == 0
        assert len(lines) == 5
        assert lines[-1] == "total = 8"

    def test_ped_tableau(self, capsys):
        code, out, _ = run(capsys, "remark", "--family", "ped", "--n", "5")
        assert code == 0
        assert len(out.splitlines()) == 5
        assert out.splitlines()[-1] == "total = 6"

    def test_pe_tableau(self, capsys):
        code, out, _ = run(capsys, "remark", "--family", "pe", "--n", "8")
        lines = out.splitlines()
        assert code == 0
        assert lines == ["8  C(3,1) = 3", "6+2  C(1,1)*C(1,1) = 1",
                         "4+4  C(2,2) = 1", "total = 5"]

    def test_out_of_policy_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "remark", "--family", "pd", "--n", "61")
        assert code == 2


class TestBFileParsing:
    def test_comments_and_blanks_skipped(self, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("# header\n\n0 1\n1 2\n\n# tail\n2 2\n")
        entries = parse_bfile(str(f))
        assert [(e.index, e.value) for e in entries] == [(0, 1), (1, 2), (2, 2)]

    def test_malformed_line_reports_line_number(self, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("0 1\n1 two\n")
        with pytest.raises(ValueError, match="line 2"):
            parse_bfile(str(f))

    def test_non_increasing_rejected(self, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("0 1\n0 1\n")
        with pytest.raises(ValueError, match="strictly increasing"):
            parse_bfile(str(f))


class TestCompare:
    def test_matching_bfile(self, capsys, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("0 1\n1 2\n2 2\n3 4\n")
        code, out, _ = run(capsys, "compare", "--family", "overpartition-odd",
                           "--bfile", str(f), "--route", "brute")
        assert code == 0
        assert out.count("MATCH") == 4 and "MISMATCH" not in out

    def test_single_entry(self, capsys, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("8 5\n")
        code, out, _ = run(capsys, "compare", "--family", "pe", "--bfile", str(f))
        assert code == 0
        assert "8: MATCH 5" in out

    def test_wrong_value_exits_one(self, capsys, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("5 7\n")
        code, out, _ = run(capsys, "compare", "--family", "ped", "--bfile", str(f))
        assert code == 1
        assert "MISMATCH file=7 computed=6" in out

    def test_corrupted_file_exits_two(self, capsys, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("0 1\nnot a bfile line\n")
        code, _, err = run(capsys, "compare", "--family", "pd", "--bfile", str(f))
        assert code == 2
        assert "line 2" in err

    def test_missing_file_exits_two(self, capsys, tmp_path):
        code, _, err = run(capsys, "compare", "--family", "pd",
                           "--bfile", str(tmp_path / "absent.txt"))
        assert code == 2

    def test_indices_beyond_brute_policy_skipped(self, capsys, tmp_path):
        f = tmp_path / "b.txt"
        f.write_text("0 1\n100 0\n")
        code, out, _ = run(capsys, "compare", "--family", "pe",
                           "--bfile", str(f), "--route", "brute")
        assert code == 0
        assert "100: SKIPPED" in out
        assert "1 compared, 0 mismatched, 1 skipped" in out
