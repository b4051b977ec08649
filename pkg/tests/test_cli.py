import numpy as np
import pytest

from crossplit import Sample, SplitEstimate, SplitOutcome, sample_crossover_eval
from crossplit.cli import main


def write_sample(tmp_path, values, name="sample.csv"):
    p = tmp_path / name
    p.write_text("\n".join(str(v) for v in values) + "\n")
    return str(p)


class TestSplitCommand:
    def test_symmetric_pair(self, tmp_path, capsys):
        path = write_sample(tmp_path, [-1, 1])
        assert main(["split", "--input", path]) == 0
        assert capsys.readouterr().out.strip() == "0"

    def test_hand_pair(self, tmp_path, capsys):
        path = write_sample(tmp_path, [0, 2])
        assert main(["split", "--input", path]) == 0
        assert capsys.readouterr().out.strip() == "1"

    def test_malformed_input_exit_1(self, tmp_path, capsys):
        p = tmp_path / "bad.csv"
        p.write_text("1\nnope\n3\n")
        assert main(["split", "--input", str(p)]) == 1
        assert "error" in capsys.readouterr().err

    def test_missing_file_exit_1(self, tmp_path):
        assert main(["split", "--input", str(tmp_path / "absent.csv")]) == 1

    def test_sentinel_exit_2(self, tmp_path, capsys, monkeypatch):
        import crossplit.cli as cli_mod

        path = write_sample(tmp_path, [-1, 1])
        monkeypatch.setattr(
            cli_mod,
            "sample_split_point",
            lambda s: SplitEstimate(outcome=SplitOutcome.ALL_NEGATIVE, n=s.n),
        )
        assert main(["split", "--input", path]) == 2
        captured = capsys.readouterr()
        assert captured.out == ""
        assert "no finite split point" in captured.err

    def test_confidence_interval_brackets_estimate(self, tmp_path, capsys):
        rng = np.random.default_rng(6)
        path = write_sample(tmp_path, rng.standard_normal(3000).tolist())
        assert main(["split", "--input", path, "--confidence", "0.9"]) == 0
        out = capsys.readouterr().out.strip().splitlines()
        t = float(out[0])
        lo, hi = (float(v) for v in out[1].split())
        assert lo < t < hi


class TestCurveCommand:
    def test_hand_rows(self, tmp_path, capsys):
        path = write_sample(tmp_path, [0, 2])
        assert main(["curve", "--input", path, "--grid", "3"]) == 0
        rows = capsys.readouterr().out.strip().splitlines()
        assert rows[0] == "t,T_n"
        ts = [float(r.split(",")[0]) for r in rows[1:]]
        vals = [float(r.split(",")[1]) for r in rows[1:]]
        assert ts[0] == 0.0 and vals[0] == 2.0
        assert 1.0 in ts
        assert vals[ts.index(1.0)] == 0.0
        # last row sits just below the open right boundary; at 12 printed
        # digits its t collapses to the boundary while the value is the
        # left limit there
        assert ts[-1] == pytest.approx(2.0, abs=1e-11)
        assert vals[-1] == pytest.approx(-2.0, abs=1e-9)

    def test_rows_match_direct_eval(self, tmp_path, capsys):
        rng = np.random.default_rng(17)
        values = np.round(rng.standard_normal(80), 2)
        path = write_sample(tmp_path, values.tolist())
        assert main(["curve", "--input", path, "--grid", "64"]) == 0
        rows = capsys.readouterr().out.strip().splitlines()[1:]
        s = Sample.from_values(values)
        top = np.nextafter(float(np.max(values)), -np.inf)
        for row in rows:
            t_str, v_str = row.split(",")
            # printed t has 12 significant digits; clamp back inside the
            # right-open domain before re-evaluating
            direct = sample_crossover_eval(s, min(float(t_str), top))
            assert float(v_str) == pytest.approx(direct, abs=1e-9)

    def test_zero_crossing_row_matches_split(self, tmp_path, capsys):
        rng = np.random.default_rng(23)
        values = rng.standard_normal(200)
        path = write_sample(tmp_path, values.tolist())
        assert main(["split", "--input", path]) == 0
        t_split = capsys.readouterr().out.strip()
        assert main(["curve", "--input", path]) == 0
        rows = capsys.readouterr().out.strip().splitlines()[1:]
        assert any(r.split(",")[0] == t_split for r in rows)

    def test_output_file(self, tmp_path):
        path = write_sample(tmp_path, [0, 1, 2])
        out = tmp_path / "curve.csv"
        assert main(["curve", "--input", path, "--output", str(out)]) == 0
        assert out.read_text().startswith("t,T_n\n")


class TestSimulateCommand:
    def test_deterministic(self, tmp_path):
        a = tmp_path / "a.csv"
        b = tmp_path / "b.csv"
        argv = ["simulate", "--kind", "m_dependent_moving_sum", "--n", "50", "--seed", "7"]
        assert main(argv + ["--output", str(a)]) == 0
        assert main(argv + ["--output", str(b)]) == 0
        assert a.read_text() == b.read_text()
        assert len(a.read_text().strip().splitlines()) == 50

    def test_roundtrips_through_split(self, tmp_path, capsys):
        out = tmp_path / "series.csv"
        assert (
            main(
                [
                    "simulate", "--kind", "ar1_gaussian", "--n", "500",
                    "--seed", "3", "--rho", "0.5", "--output", str(out),
                ]
            )
            == 0
        )
        assert main(["split", "--input", str(out)]) == 0
        t = float(capsys.readouterr().out.strip())
        assert -1.0 < t < 1.0

    def test_invalid_parameters_exit_1(self, tmp_path):
        assert (
            main(["simulate", "--kind", "ar1_gaussian", "--n", "10", "--seed", "1"]) == 1
        )


class TestTable1Command:
    def test_smoke_and_determinism(self, tmp_path, capsys):
        out1 = tmp_path / "r1.csv"
        out2 = tmp_path / "r2.csv"
        argv = [
            "table1", "--sizes", "50,100", "--replicates", "10", "--seed", "0",
        ]
        assert main(argv + ["--output", str(out1)]) == 0
        assert main(argv + ["--output", str(out2)]) == 0
        assert out1.read_text() == out2.read_text()
        header = out1.read_text().splitlines()[0]
        assert header == "n,replicates_used,sentinels,mean_sqrt_n_tn,var_sqrt_n_tn"
        # summary table printed for both runs
        assert capsys.readouterr().out.count("variance") == 2

    def test_json_output(self, tmp_path):
        out = tmp_path / "r.json"
        argv = [
            "table1", "--sizes", "50", "--replicates", "5", "--seed", "1",
            "--json", str(out),
        ]
        assert main(argv) == 0
        assert '"master_seed": 1' in out.read_text()

    def test_bad_sizes_exit_1(self):
        assert main(["table1", "--sizes", "50,oops", "--replicates", "5", "--seed", "1"]) == 1


class TestVarianceCommand:
    def test_prints_positive_estimate(self, tmp_path, capsys):
        rng = np.random.default_rng(9)
        path = write_sample(tmp_path, rng.standard_normal(2000).tolist())
        assert main(["variance", "--input", path]) == 0
        assert float(capsys.readouterr().out.strip()) > 0.0

    def test_explicit_point_and_bandwidth(self, tmp_path, capsys):
        rng = np.random.default_rng(10)
        path = write_sample(tmp_path, rng.standard_normal(2000).tolist())
        assert main(["variance", "--input", path, "--t", "0.0", "--bandwidth", "5"]) == 0
        assert float(capsys.readouterr().out.strip()) > 0.0

    def test_oversize_bandwidth_exit_1(self, tmp_path):
        path = write_sample(tmp_path, [0, 1, 2, 3])
        assert main(["variance", "--input", path, "--t", "1.0", "--bandwidth", "10"]) == 1
