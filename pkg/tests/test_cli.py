import json

import pytest

from kmersenne import cli, identities, polynomials, sequences
from kmersenne.exact import GaussianPolynomial, IntPolynomial
from kmersenne.render import decode_value


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


class TestTable:
    def test_table3_first_row(self, capsys):
        code, out, _ = run(capsys, "table", "3", "--format", "csv")
        assert code == 0
        rows = out.splitlines()
        assert rows[0] == "n,k=1,k=2,k=3,k=4,k=5"
        assert rows[1] == "0,-i/2,-1/4,i/8,1/16,-i/32"

    def test_table1_plain(self, capsys):
        code, out, _ = run(capsys, "table", "1")
        assert code == 0
        assert out.splitlines()[-1].split() == ["5", "31", "21", "9", "3", "1"]

    def test_errata_flagged(self, capsys):
        _, out, _ = run(capsys, "table", "4")
        assert "27x^3-9x+i(18x^2-2)*" in out
        assert out.count("published table prints") == 2
        _, out, _ = run(capsys, "table", "3", "--format", "json")
        cells = json.loads(out)["cells"]
        flagged = [c for c in cells if "erratum" in c]
        assert [(c["n"], c["k"]) for c in flagged] == [(3, 5)]
        assert decode_value(flagged[0]["value"], "GM") == sequences.k_gaussian_mersenne(3, 5)

    def test_table2_json_decodes_native(self, capsys):
        _, out, _ = run(capsys, "table", "2", "--format", "json")
        cells = json.loads(out)["cells"]
        assert len(cells) == 30
        last = decode_value(cells[-1]["value"], "MP")
        assert isinstance(last, IntPolynomial) and last == IntPolynomial((1,))

    def test_byte_stable(self, capsys):
        outs = {run(capsys, "table", "4", "--format", fmt)[1] for fmt in ["json"] * 3}
        assert len(outs) == 1

    def test_bounds(self, capsys):
        _, out, _ = run(capsys, "table", "1", "--n-max", "8", "--k-max", "2")
        lines = out.splitlines()
        assert len(lines) == 10 and lines[0].split() == ["n", "k=1", "k=2"]

    def test_unknown_table(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["table", "5"])
        assert exc.value.code == 2


class TestSeq:
    @pytest.mark.parametrize("argv, text", [
        (["seq", "M", "20"], "1048575"),
        (["seq", "GM", "4"], "15+7i"),
        (["seq", "GM", "0"], "-i/2"),
        (["seq", "MP", "5"], "81x^4-54x^2+4"),
        (["seq", "M", "5", "--k", "2"], "21"),
        (["seq", "GMP", "4", "--k", "2"], "9x^2-1+i6x"),
    ])
    def test_terms(self, capsys, argv, text):
        code, out, _ = run(capsys, *argv)
        assert code == 0 and out.strip() == text

    def test_range(self, capsys):
        _, out, _ = run(capsys, "seq", "M", "4", "--range")
        assert out.splitlines() == ["0 0", "1 1", "2 3", "3 7", "4 15"]

    def test_json(self, capsys):
        _, out, _ = run(capsys, "seq", "M", "100", "--format", "json")
        rec = json.loads(out)
        assert decode_value(rec["value"], "M") == 2**100 - 1

    @pytest.mark.parametrize("argv", [["seq", "M", "-1"], ["seq", "M", "3", "--k", "0"],
                                      ["seq", "MP", "100000"]])
    def test_usage_errors(self, capsys, argv):
        code, out, err = run(capsys, *argv)
        assert code == 2 and out == "" and "error" in err


class TestVerify:
    def test_single_suite(self, capsys):
        code, out, _ = run(capsys, "verify", "docagne", "--n-max", "3")
        assert code == 0 and out.strip() == "docagne[GM]: 9/9 pass"

    def test_family_filter_json(self, capsys):
        code, out, _ = run(capsys, "verify", "cassini", "--family", "M", "--family", "GMP",
                           "--n-max", "5", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["ok"] and doc["first_failure"] is None
        assert [s["suite"] for s in doc["suites"]] == ["cassini[M]", "cassini[GMP]"]

    def test_cells(self, capsys):
        _, out, _ = run(capsys, "verify", "two-index", "--family", "GM", "--n-max", "2",
                        "--format", "csv", "--cells")
        rows = out.splitlines()
        assert rows[0] == "suite,parameters,holds,lhs,rhs"
        assert len(rows) == 1 + 6

    def test_zero_n_max_is_usage_error(self, capsys):
        code, _, err = run(capsys, "verify", "docagne", "--n-max", "0")
        assert code == 2 and "n-max" in err

    def test_unknown_suite(self):
        with pytest.raises(SystemExit) as exc:
            cli.main(["verify", "lucas"])
        assert exc.value.code == 2

    def test_broken_closed_form_fails(self, capsys, monkeypatch):
        monkeypatch.setattr(sequences, "mersenne", lambda n: pow(2, n) - 1 + (n == 7))
        code, out, _ = run(capsys, "verify", "cassini", "--family", "M", "--n-max", "10")
        assert code == 1
        assert "first failure: cassini" in out

    def test_broken_polynomial_recurrence_fails(self, capsys, monkeypatch):
        monkeypatch.setattr(polynomials, "_THREE_X", IntPolynomial((0, 2)))
        code, out, _ = run(capsys, "verify", "all", "--n-max", "4", "--k-max", "2", "--format", "json")
        doc = json.loads(out)
        assert code == 1 and not doc["ok"]
        assert doc["first_failure"] is not None


class TestSeriesBench:
    def test_series(self, capsys):
        code, out, _ = run(capsys, "series", "GM", "4")
        assert code == 0 and out.strip() == "-i/2, 1, 3+i, 7+3i (match)"
        code, out, _ = run(capsys, "series", "M", "6")
        assert out.strip() == "0 1 3 7 15 31 (match)"

    def test_series_mismatch(self, capsys, monkeypatch):
        wrong = GaussianPolynomial((1, -3, 3))
        monkeypatch.setattr(identities, "MERSENNE_DENOMINATOR", wrong)
        code, out, _ = run(capsys, "series", "M", "4")
        assert code == 1 and "MISMATCH" in out

    def test_bench(self, capsys):
        code, out, _ = run(capsys, "bench", "10", "2000", "--format", "json")
        doc = json.loads(out)
        assert code == 0 and doc["ok"]
        assert [r["bits"] for r in doc["rows"]] == [10, 2000]

    def test_bench_skips_oracle(self, capsys):
        code, out, _ = run(capsys, "bench", "50000", "--oracle-cutoff", "10")
        assert code == 0 and "skipped" in out and "bits ok" in out

    def test_bench_negative(self, capsys):
        assert run(capsys, "bench", "-5")[0] == 2


def test_out_file(tmp_path, capsys):
    target = tmp_path / "t1.txt"
    code, out, _ = run(capsys, "table", "1", "--out", str(target))
    assert code == 0 and out == ""
    direct = run(capsys, "table", "1")[1]
    assert target.read_text() == direct


def test_global_flags_before_subcommand(capsys):
    a = run(capsys, "--format", "csv", "table", "1")[1]
    b = run(capsys, "table", "1", "--format", "csv")[1]
    assert a == b


def test_module_entry_point():
    import subprocess
    import sys
    proc = subprocess.run([sys.executable, "-m", "kmersenne", "seq", "GM", "3"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "7+3i"
