"""
Tests for input parsing, the rainfall data and the command line
"""

import io
import json
import math

import numpy as np
import pytest

from cli.commands import parse_m_rule, parse_origin
from cli.inputs import InputSpec, parse_angle, parse_error_model, parse_records
from cli.rainfall import ADJUSTED_FREQUENCIES, load_rainfall, month_angles
from deconv.error_models import ErrorKind
from harness.experiment import MRuleKind
from harness.report import read_grid
from main import main
from utils.exceptions import ConfigurationError, InputError


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return str(path)


def _grid_output(capsys):
    return read_grid(io.StringIO(capsys.readouterr().out))


def _local_maxima(values):
    return int(np.sum((values > np.roll(values, 1)) & (values >= np.roll(values, -1))))


class TestParsing:
    @pytest.mark.parametrize("text,expected", [
        ("0.5", 0.5),
        ("-pi", -math.pi),
        ("pi/12", math.pi / 12),
        ("2*pi/3", 2 * math.pi / 3),
        ("3π/4", 3 * math.pi / 4),
        ("-1e-3", -1e-3),
    ])
    def test_parse_angle(self, text, expected):
        assert parse_angle(text) == pytest.approx(expected)

    def test_parse_angle_rejects_text(self):
        with pytest.raises(InputError):
            parse_angle("north")
        with pytest.raises(InputError):
            parse_angle("inf")

    def test_parse_error_model(self):
        assert parse_error_model("none").is_none
        laplace = parse_error_model("laplace:0.2")
        assert laplace.kind is ErrorKind.WRAPPED_LAPLACE and laplace.parameter == 0.2
        assert parse_error_model("laplace-scale:0.2").parameter == pytest.approx(5.0)
        assert parse_error_model("uniform:pi/12").parameter == pytest.approx(math.pi / 12)
        assert parse_error_model("vm:5").kind is ErrorKind.VON_MISES
        with pytest.raises(ConfigurationError):
            parse_error_model("laplace")
        with pytest.raises(ConfigurationError):
            parse_error_model("gamma:2")

    def test_parse_m_rule(self):
        assert parse_m_rule("7").m == 7
        assert parse_m_rule("sqrt-n").kind is MRuleKind.SQRT_N
        assert parse_m_rule("opt-nonparametric").kind is MRuleKind.OPT_NONPARAMETRIC
        with pytest.raises(ConfigurationError):
            parse_m_rule("wide")

    def test_parse_origin(self):
        assert parse_origin("auto") is None
        assert parse_origin("fixed:-pi") == pytest.approx(-math.pi)
        with pytest.raises(ConfigurationError):
            parse_origin("moving:1")


class TestRecords:
    def test_comments_and_blank_lines(self):
        sample = parse_records(["# header", "", "0.1", "pi/2  # inline", "  -0.3 "])
        assert len(sample) == 3
        assert sample.unit_weights

    def test_grouped_pairs(self):
        sample = parse_records(["0,3", "1.0,1"])
        assert sample.n_effective == 4.0
        assert list(sample.weights) == [3.0, 1.0]

    def test_degrees(self):
        sample = parse_records(["90", "-45"], degrees=True)
        assert sample.angles == pytest.approx([math.pi / 2, -math.pi / 4])

    def test_errors(self):
        with pytest.raises(InputError):
            parse_records(["# nothing"])
        with pytest.raises(InputError):
            parse_records(["0.1", "0.2,3"])
        with pytest.raises(InputError):
            parse_records(["0.1,-2"])
        with pytest.raises(InputError):
            parse_records(["east"])

    def test_missing_file(self, tmp_path):
        with pytest.raises(InputError):
            InputSpec(str(tmp_path / "absent.txt")).load()


class TestRainfall:
    def test_weights(self):
        rain = load_rainfall()
        assert rain.n_effective == 7237
        assert rain.weights[6] == 1458
        assert sum(ADJUSTED_FREQUENCIES) == 7237

    def test_month_bins(self):
        angles = load_rainfall().angles
        assert len(np.unique(angles)) == 12
        assert np.diff(angles) == pytest.approx(np.full(11, math.pi / 6))
        assert angles[0] == pytest.approx(-math.pi + math.pi / 12)

    def test_phase_shift(self):
        assert month_angles(-math.pi / 12)[0] == pytest.approx(-math.pi)


class TestDensityCommand:
    def test_single_angle(self, tmp_path, capsys):
        path = _write(tmp_path, "one.txt", "0.0\n")
        assert main(["density", path, "--m", "10", "--grid", "4"]) == 0
        theta, values, header = _grid_output(capsys)
        assert theta[2] == 0.0
        assert values[2] == pytest.approx(1.750704, abs=1e-6)
        assert header["m"] == "10"

    def test_empty_file(self, tmp_path, capsys):
        path = _write(tmp_path, "empty.txt", "")
        assert main(["density", path, "--m", "5"]) == 1
        assert "no observations" in capsys.readouterr().err

    def test_degrees_equal_radians(self, tmp_path, capsys):
        degrees = _write(tmp_path, "deg.txt", "90\n-45\n30\n")
        radians = _write(tmp_path, "rad.txt", "pi/2\n-pi/4\npi/6\n")
        assert main(["density", degrees, "--degrees", "--m", "5", "--grid", "16"]) == 0
        _, from_degrees, _ = _grid_output(capsys)
        assert main(["density", radians, "--m", "5", "--grid", "16"]) == 0
        _, from_radians, _ = _grid_output(capsys)
        assert from_degrees == pytest.approx(from_radians, abs=1e-12)

    def test_data_driven_header(self, tmp_path, capsys):
        angles = "\n".join(str(a) for a in np.linspace(-1.0, 1.0, 40)) + "\n"
        path = _write(tmp_path, "spread.txt", angles)
        assert main(["density", path, "--m", "opt-nonparametric", "--grid", "8"]) == 0
        _, _, header = _grid_output(capsys)
        assert header["method"] == "nonparametric"
        assert header["rule"] == "opt-nonparametric"
        assert "theta1_hat" in header
        assert int(header["M"]) == 5

    def test_json_output(self, tmp_path, capsys):
        path = _write(tmp_path, "one.txt", "0.0\n")
        assert main(["density", path, "--m", "3", "--grid", "8", "--format", "json"]) == 0
        document = json.loads(capsys.readouterr().out)
        assert document["header"]["m"] == 3
        assert len(document["theta"]) == len(document["value"]) == 8

    def test_infeasible_classical(self, tmp_path, capsys):
        path = _write(tmp_path, "few.txt", "0.1\n0.5\n-0.2\n")
        code = main(["density", path, "--m", "12", "--classical", "uniform:pi/12"])
        assert code == 2
        assert "lambda(12)" in capsys.readouterr().err

    def test_rainfall_berkson_removes_spurious_modes(self, capsys):
        assert main(["density", "--rainfall", "--m", "opt-parametric"]) == 0
        _, plain, plain_header = _grid_output(capsys)
        assert main(["density", "--rainfall", "--berkson", "uniform:pi/12", "--m", "opt-parametric"]) == 0
        _, smoothed, header = _grid_output(capsys)
        assert header["m"] == plain_header["m"]
        assert "negative_mass" in header
        assert _local_maxima(smoothed) < _local_maxima(plain)

    def test_usage_error_exits_one(self):
        with pytest.raises(SystemExit) as info:
            main(["density", "--grid", "many"])
        assert info.value.code == 1

    def test_plot(self, tmp_path, capsys):
        path = _write(tmp_path, "one.txt", "0.0\n1.0\n")
        image = tmp_path / "density.png"
        assert main(["density", path, "--m", "4", "--plot", str(image)]) == 0
        assert image.stat().st_size > 0


class TestCdfCommand:
    def test_fixed_origin(self, tmp_path, capsys):
        path = _write(tmp_path, "two.txt", "-pi/2\npi/2\n")
        assert main(["cdf", path, "--origin", "fixed:-pi", "--m", "5", "--at", "pi"]) == 0
        _, values, header = _grid_output(capsys)
        assert values[0] == pytest.approx(1.0, abs=1e-12)
        assert header["origin"] == "fixed"

    def test_auto_origin_needs_two_points(self, tmp_path):
        path = _write(tmp_path, "one.txt", "0.3\n")
        assert main(["cdf", path, "--origin", "auto"]) == 3

    def test_auto_origin_header(self, tmp_path, capsys):
        path = _write(tmp_path, "two.txt", "-pi/2\npi/2\n")
        profile = tmp_path / "criterion.csv"
        assert main(["cdf", path, "--origin", "auto", "--m", "5", "--grid", "6",
                     "--criterion-out", str(profile)]) == 0
        _, _, header = _grid_output(capsys)
        assert float(header["theta0"]) == pytest.approx(-math.pi)
        assert float(header["criterion_min"]) == pytest.approx(math.pi / 4, rel=1e-5)
        with open(profile, encoding="utf-8") as stream:
            _, criterion, _ = read_grid(stream)
        assert criterion == pytest.approx(np.full(6, math.pi / 4))

    def test_nonparametric_rule_rejected(self, tmp_path):
        path = _write(tmp_path, "two.txt", "-pi/2\npi/2\n")
        assert main(["cdf", path, "--m", "opt-nonparametric"]) == 1


class TestReproduceCommand:
    def test_unknown_table(self):
        assert main(["reproduce", "--table", "t9"]) == 1

    def test_appendix_b(self, capsys):
        assert main(["reproduce", "--table", "appendix-b"]) == 0
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "m,col1,col2,col3,flags"
        assert len(lines) == 10
        assert all(line.endswith(",") for line in lines[1:])

    def test_output_dir(self, tmp_path):
        assert main(["reproduce", "--table", "appendix-b", "--output-dir", str(tmp_path)]) == 0
        assert (tmp_path / "appendix-b.csv").read_text(encoding="utf-8").startswith("m,col1")
