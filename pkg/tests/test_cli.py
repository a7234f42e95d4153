"""Tests for the command-line front end."""

import csv
import json
import math

import pytest

from bergdir.cli import main, parse_complex, read_coefficients


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_csv(text):
    rows = list(csv.reader(text.splitlines()))
    return rows[0], rows[1:]


class TestParsing:
    def test_parse_complex(self):
        assert parse_complex("0.5,-1.25") == complex(0.5, -1.25)

    def test_parse_complex_rejects_garbage(self):
        from bergdir.cli import CLIError
        with pytest.raises(CLIError):
            parse_complex("1")
        with pytest.raises(CLIError):
            parse_complex("a,b")

    def test_read_coefficients(self, tmp_path):
        path = tmp_path / "f.txt"
        path.write_text("# a comment\n1 0\n0.5 -2  # trailing\n\n")
        f = read_coefficients(str(path))
        assert f.coefficients.tolist() == [1 + 0j, 0.5 - 2j]


class TestKernelCommand:
    def test_disk_bergman_value(self, capsys):
        code, out, _ = run(capsys, "kernel", "--space", "disk", "--R", "1",
                           "--alpha", "0", "--m", "0",
                           "--z", "0.5,0", "--w", "0.5,0")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["re_z", "im_z", "re_w", "im_w", "re_K", "im_K"]
        assert float(rows[0][4]) == pytest.approx(16 / (9 * math.pi), rel=1e-12)

    def test_plane_fock_value(self, capsys):
        code, out, _ = run(capsys, "kernel", "--space", "plane", "--nu", "1",
                           "--m", "0", "--z", "1,0", "--w", "1,0")
        assert code == 0
        _, rows = parse_csv(out)
        assert float(rows[0][4]) == pytest.approx(math.e / math.pi, rel=1e-12)

    def test_force_series_flag(self, capsys):
        code, out, _ = run(capsys, "kernel", "--space", "disk", "--R", "1",
                           "--alpha", "0", "--m", "0", "--force-series",
                           "--z", "0.5,0", "--w", "0.5,0")
        assert code == 0
        _, rows = parse_csv(out)
        assert float(rows[0][4]) == pytest.approx(16 / (9 * math.pi), rel=1e-12)

    def test_point_outside_disk_is_validation_error(self, capsys):
        code, _, err = run(capsys, "kernel", "--space", "disk", "--R", "1",
                           "--alpha", "0", "--m", "0",
                           "--z", "2,0", "--w", "0,0")
        assert code == 1
        assert "error" in err

    def test_bad_params_exit_one(self, capsys):
        code, _, _ = run(capsys, "kernel", "--space", "disk", "--R", "1",
                         "--alpha", "-3", "--m", "0",
                         "--z", "0,0", "--w", "0,0")
        assert code == 1

    def test_missing_space_params(self, capsys):
        code, _, _ = run(capsys, "kernel", "--space", "disk",
                         "--z", "0,0", "--w", "0,0")
        assert code == 1

    def test_json_output(self, capsys):
        code, out, _ = run(capsys, "kernel", "--space", "plane", "--nu", "1",
                           "--m", "0", "--z", "1,0", "--w", "1,0",
                           "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["command"] == "kernel"
        assert payload["params"]["space"] == "plane"
        assert payload["rows"][0]["re_K"] == pytest.approx(math.e / math.pi)


class TestNormCommand:
    def test_inline_coefficients(self, capsys):
        code, out, _ = run(capsys, "norm", "--space", "disk", "--R", "1",
                           "--alpha", "0", "--m", "0", "--coeff", "1,0")
        assert code == 0
        _, rows = parse_csv(out)
        assert float(rows[-1][4]) == pytest.approx(math.pi, rel=1e-14)

    def test_file_coefficients(self, capsys, tmp_path):
        path = tmp_path / "f.txt"
        path.write_text("1 0\n1 0\n")
        code, out, _ = run(capsys, "norm", "--space", "plane", "--nu", "1",
                           "--m", "1", "--coeffs", str(path))
        assert code == 0
        _, rows = parse_csv(out)
        assert float(rows[-1][4]) == pytest.approx(2 * math.pi, rel=1e-14)

    def test_no_coefficients_is_error(self, capsys):
        code, _, _ = run(capsys, "norm", "--space", "disk", "--R", "1",
                         "--alpha", "0", "--m", "0")
        assert code == 1


class TestGramCommand:
    def test_min_eigenvalue_nonnegative(self, capsys):
        code, out, err = run(capsys, "gram", "--space", "disk", "--R", "1",
                             "--alpha", "0", "--m", "1",
                             "--point", "0.1,0", "--point", "0.3,0.2",
                             "--point=-0.4,0.1")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["i", "j", "re_K", "im_K", "min_eigenvalue"]
        assert len(rows) == 9
        assert float(rows[0][4]) > 0
        assert "min_eigenvalue" in err


class TestConvergeCommand:
    def test_w_zero_exact_error_column(self, capsys):
        code, out, _ = run(capsys, "converge", "--nu", "1", "--m", "0",
                           "--z", "1,0", "--w", "0,0", "--radii", "5,10,20")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["R", "re_K_disk", "im_K_disk", "re_K_plane",
                          "im_K_plane", "abs_error"]
        for row in rows:
            R = float(row[0])
            assert float(row[5]) == pytest.approx(1 / (math.pi * R * R),
                                                  abs=1e-16)


class TestLimitCheckCommand:
    def test_columns_and_rate(self, capsys):
        code, out, _ = run(capsys, "limit-check", "--m", "1", "--xi", "1,0",
                           "--rhos", "100,1000")
        assert code == 0
        header, rows = parse_csv(out)
        assert header == ["rho", "abs_error", "rho_times_error"]
        assert float(rows[0][1]) > float(rows[1][1])
        for row in rows:
            assert float(row[2]) == pytest.approx(
                float(row[0]) * float(row[1]), rel=1e-12)


class TestVerifyCommand:
    def test_verify_passes(self, capsys):
        code, out, _ = run(capsys, "verify")
        assert code == 0
        lines = [ln for ln in out.splitlines() if ln.strip()]
        assert lines
        assert all(ln.startswith("[PASS]") for ln in lines)
        assert all("error=" in ln and "threshold=" in ln for ln in lines)


class TestCsvRoundTrip:
    def test_seventeen_digit_round_trip(self, capsys, tmp_path):
        from bergdir import DiskSpaceParams, kernel
        out_path = tmp_path / "k.csv"
        code, _, _ = run(capsys, "kernel", "--space", "disk", "--R", "1",
                         "--alpha", "0.5", "--m", "2",
                         "--z", "0.3,0.4", "--w", "0.2,-0.1",
                         "--output", str(out_path))
        assert code == 0
        header, rows = parse_csv(out_path.read_text())
        params = DiskSpaceParams(1.0, 0.5, 2)
        expected = kernel(params, complex(0.3, 0.4), complex(0.2, -0.1))
        assert float(rows[0][4]) == expected.real
        assert float(rows[0][5]) == expected.imag
        assert out_path.read_text().endswith("\n")
