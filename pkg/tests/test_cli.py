import json
import os

import pandas as pd
import pytest
from conftest import Z, Z2
from test_cayley_complex import square

from src.cli.app import EXIT_CAP, EXIT_FILE, EXIT_INPUT, EXIT_OK, EXIT_USAGE, EXIT_WINDOW, main
from src.cli.run_config import RunConfig, load_run_config
from src.modules.errors import InputError
from src.modules.life_engine import LifeState, format_state


def run_cli(*argv, output_dir) -> int:
    return main(list(argv) + ["--output-dir", str(output_dir)])


def read(path) -> str:
    with open(path, encoding="utf-8") as f:
        return f.read()


def error_record(capsys) -> dict:
    return json.loads(capsys.readouterr().err.strip().splitlines()[-1])


def body(text: str) -> list[str]:
    return [line for line in text.splitlines() if not line.startswith("#")]


class TestRunConfig:
    def test_defaults(self, tmp_path):
        config = RunConfig(output_dir=str(tmp_path))
        assert config.threads >= 1
        assert config.rule == "B={3} S={2,3}"

    def test_env_defaults(self, monkeypatch):
        monkeypatch.setenv("CAYLEY_WORKBENCH_OUTPUT_DIR", "/tmp/artifacts")
        monkeypatch.setenv("CAYLEY_WORKBENCH_THREADS", "3")
        config = load_run_config()
        assert (config.output_dir, config.threads) == ("/tmp/artifacts", 3)

    def test_file_and_overrides(self, tmp_path):
        path = tmp_path / "run.conf"
        path.write_text("# experiment\ngroup = <s|>\nradius = 2\nmatrices = a.mtx, b.mtx\n")
        config = load_run_config(str(path), {"radius": 4, "seed": None})
        assert config.group == "<s|>"
        assert config.radius == 4
        assert config.matrices == ("a.mtx", "b.mtx")

    def test_rule_separator(self):
        config = load_run_config(overrides={"rule": "type_0: B={3} S={2,3}; type_1: B={1} S={}"})
        assert config.rule == "type_0: B={3} S={2,3}\ntype_1: B={1} S={}"

    def test_orbit_sizes(self):
        assert load_run_config(overrides={"orbit_sizes": "10, 100"}).orbit_sizes == (10, 100)

    @pytest.mark.parametrize(
        "overrides",
        [{"theta": 1.0}, {"theta": 0}, {"ball_cap": 0}, {"radius": -1}, {"orbit_sizes": "10,-1"}, {"colour": "black"}],
    )
    def test_invalid(self, overrides):
        with pytest.raises(InputError):
            load_run_config(overrides=overrides)

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_run_config(str(tmp_path / "missing.conf"))


class TestGroupCommands:
    def test_ball(self, tmp_path):
        assert run_cli("group", "ball", "--group", Z, "--radius", "3", output_dir=tmp_path) == EXIT_OK
        elements = body(read(tmp_path / "ball.txt"))
        assert len(elements) == 7
        assert elements[0] == "e"
        assert set(elements) == {"e", "s", "s^-1", "s^2", "s^-2", "s^3", "s^-3"}

    def test_icc(self, tmp_path):
        assert run_cli("group", "icc", "--group", Z2, "--radius", "2", output_dir=tmp_path) == EXIT_OK
        assert "# verdict: not ICC" in read(tmp_path / "icc.txt")

    def test_config_file(self, tmp_path):
        config = tmp_path / "ball.conf"
        config.write_text(f"group = {Z}\nradius = 1\n")
        assert run_cli("group", "ball", "--config", str(config), "--radius", "3", output_dir=tmp_path) == EXIT_OK
        assert len(body(read(tmp_path / "ball.txt"))) == 7


class TestGoCommands:
    def test_enumerate(self, tmp_path):
        assert run_cli("go", "enumerate", "--group", Z, "--radius", "3", "--depth", "1", output_dir=tmp_path) == 0
        # vacuum plus one stone of either color on each of the 5 interior vertices
        assert read(tmp_path / "go_states.txt").count("# state:") == 11

    def test_play(self, tmp_path):
        argv = ["go", "play", "--group", Z, "--radius", "3", "--moves", "black:s, white:s^-1"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_OK
        text = read(tmp_path / "go_play.txt")
        assert text.count("# state:") == 3
        assert set(body(text)[-2:]) == {"s^-1\twhite", "s\tblack"}

    def test_matrix(self, tmp_path):
        argv = ["go", "matrix", "--group", Z, "--radius", "3", "--depth", "1", "--vertex", "s", "--color", "white"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_OK
        assert os.path.isfile(tmp_path / "go_white_s.mtx")
        assert read(tmp_path / "go_white_s.mtx").startswith("%%MatrixMarket")

    def test_vertex_outside_interior(self, tmp_path, capsys):
        argv = ["go", "matrix", "--group", Z, "--radius", "2", "--vertex", "s^2"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_WINDOW
        assert error_record(capsys)["error"] == "window"

    def test_bad_color(self, tmp_path, capsys):
        argv = ["go", "play", "--group", Z, "--moves", "green:s"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_INPUT
        assert error_record(capsys)["exit_code"] == EXIT_INPUT


class TestComplexCommands:
    def test_types(self, tmp_path):
        argv = ["complex", "types", "--group", Z2, "--radius", "3", "--block-cap", "4"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_OK
        text = read(tmp_path / "complex_types.txt")
        assert "# types: 1" in text
        (pruned,) = [line for line in text.splitlines() if line.startswith("# pruned: ")]
        assert int(pruned.removeprefix("# pruned: ")) > 0
        (row,) = body(text)[1:]
        assert row.split("\t")[:3] == ["0", "2", "8"]

    def test_build_exports_graphs(self, tmp_path):
        argv = ["complex", "build", "--group", Z, "--radius", "2", "--block-cap", "4"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_OK
        names = set(os.listdir(tmp_path))
        assert {"complex_cells.txt", "complex_types.txt", "complex.graphml", "complex.dot"} <= names


class TestLifeCommands:
    def test_run_from_state_file(self, tmp_path, z2):
        blinker = LifeState.of(square(z2, x, 0) for x in (-1, 0, 1))
        state = tmp_path / "blinker.txt"
        state.write_text(format_state(z2, blinker))
        argv = ["life", "run", "--group", Z2, "--radius", "2", "--block-cap", "4", "--generations", "2"]
        assert run_cli(*argv, "--state", str(state), output_dir=tmp_path / "out") == EXIT_OK
        text = read(tmp_path / "out" / "life_run.txt")
        assert text.count("# generation:") == 3

    def test_run_is_deterministic(self, tmp_path):
        argv = ["life", "run", "--group", Z2, "--radius", "2", "--block-cap", "4", "--generations", "3", "--seed", "5"]
        assert run_cli(*argv, output_dir=tmp_path / "a") == EXIT_OK
        assert run_cli(*argv, output_dir=tmp_path / "b") == EXIT_OK
        assert read(tmp_path / "a" / "life_run.txt") == read(tmp_path / "b" / "life_run.txt")

    def test_matrix(self, tmp_path):
        argv = ["life", "matrix", "--group", Z2, "--radius", "2", "--block-cap", "4", "--max-alive", "1"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_OK
        expected = {"life_basis.txt", "life_step.mtx", "life_fibers.txt", "life_rule_space.csv"}
        assert expected <= set(os.listdir(tmp_path))
        frame = pd.read_csv(tmp_path / "life_rule_space.csv")
        assert len(frame) >= 1

    def test_inadmissible_rule(self, tmp_path, capsys):
        argv = ["life", "run", "--group", Z2, "--radius", "2", "--block-cap", "4", "--rule", "B={0,3} S={2,3}"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_INPUT
        assert error_record(capsys)["error"] == "input"


class TestTruncCommands:
    def test_defect_on_z(self, tmp_path):
        assert run_cli("trunc", "defect", "--group", Z, "--radius", "5", output_dir=tmp_path) == EXIT_OK
        text = read(tmp_path / "trunc_defect.txt")
        assert "# identity_only: true" in text
        assert "# support_size: 1" in text
        assert text.splitlines()[-1] == "e\te\t-1"
        assert os.path.isfile(tmp_path / "trunc_defect.mtx")

    def test_ops_feed_the_lab(self, tmp_path):
        assert run_cli("trunc", "ops", "--group", Z, "--radius", "3", output_dir=tmp_path) == EXIT_OK
        matrix = str(tmp_path / "trunc_U_s.mtx")
        assert run_cli("lab", "spectrum", "--matrices", matrix, output_dir=tmp_path) == EXIT_OK
        assert len(pd.read_csv(tmp_path / "lab_spectrum_trunc_U_s.csv")) == 7
        assert run_cli("lab", "commutant", "--matrices", matrix, output_dir=tmp_path) == EXIT_OK
        assert read(tmp_path / "lab_commutant.txt").startswith(f"# matrix: {matrix}\ncommutant_dimension:")

    def test_window_too_small(self, tmp_path, capsys):
        assert run_cli("trunc", "defect", "--group", Z, "--radius", "1", output_dir=tmp_path) == EXIT_WINDOW
        assert error_record(capsys)["exit_code"] == EXIT_WINDOW


class TestCircleCommands:
    def test_eval_with_fixed_points(self, tmp_path):
        argv = ["circle", "eval", "--word", "b*a", "--theta", "0.1", "--samples", "64"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_OK
        assert len(pd.read_csv(tmp_path / "circle_eval.csv")) == 64
        points = pd.read_csv(tmp_path / "circle_fixed_points.csv")["x"]
        assert list(points) == pytest.approx([0.5 - 0.15**0.5, 0.5 + 0.15**0.5], abs=1e-6)

    def test_defect_sweep_is_deterministic(self, tmp_path):
        argv = ["circle", "defect", "--count", "10", "--samples", "500", "--seed", "4"]
        assert run_cli(*argv, output_dir=tmp_path / "a") == EXIT_OK
        assert run_cli(*argv, output_dir=tmp_path / "b") == EXIT_OK
        assert read(tmp_path / "a" / "circle_defect.csv") == read(tmp_path / "b" / "circle_defect.csv")
        assert len(pd.read_csv(tmp_path / "a" / "circle_defect.csv")) == 10

    def test_single_word_defect(self, tmp_path):
        assert run_cli("circle", "defect", "--word", "a*b*a^-1*b^-1", output_dir=tmp_path) == EXIT_OK
        assert pd.read_csv(tmp_path / "circle_defect.csv")["defect"].iloc[0] > 1e-6

    def test_measure(self, tmp_path):
        assert run_cli("circle", "measure", "--orbit-sizes", "10,100", output_dir=tmp_path) == EXIT_OK
        orbit = pd.read_csv(tmp_path / "measure_orbit.csv")
        assert list(orbit["n"]) == [10, 100]


class TestExitCodes:
    def test_bad_flag(self, tmp_path, capsys):
        assert run_cli("group", "ball", "--radius", "many", output_dir=tmp_path) == EXIT_USAGE
        assert error_record(capsys) == {"error": "usage", "message": "invalid command line", "exit_code": EXIT_USAGE}

    def test_unknown_subcommand(self, tmp_path):
        assert run_cli("group", "grow", output_dir=tmp_path) == EXIT_USAGE

    def test_cap(self, tmp_path, capsys):
        argv = ["group", "ball", "--group", Z2, "--radius", "5", "--ball-cap", "10"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_CAP
        assert error_record(capsys)["error"] == "cap"

    def test_missing_matrix(self, tmp_path, capsys):
        assert run_cli("lab", "spectrum", "--matrices", str(tmp_path / "none.mtx"), output_dir=tmp_path) == EXIT_FILE
        assert error_record(capsys)["error"] == "file"

    def test_bad_presentation(self, tmp_path, capsys):
        assert run_cli("group", "ball", "--group", "<s|", output_dir=tmp_path) == EXIT_INPUT
        record = error_record(capsys)
        assert record["error"] == "input"
        assert record["message"]

    def test_missing_group(self, tmp_path):
        assert run_cli("trunc", "ops", output_dir=tmp_path) == EXIT_INPUT

    def test_bad_threads_variable(self, tmp_path, monkeypatch, capsys):
        monkeypatch.setenv("CAYLEY_WORKBENCH_THREADS", "many")
        assert run_cli("group", "ball", "--group", Z, output_dir=tmp_path) == EXIT_INPUT
        record = error_record(capsys)
        assert record["error"] == "input"
        assert "CAYLEY_WORKBENCH_THREADS" in record["message"]

    def test_complex_without_cells(self, tmp_path, capsys):
        argv = ["complex", "types", "--group", Z2, "--radius", "1", "--block-cap", "4"]
        assert run_cli(*argv, output_dir=tmp_path) == EXIT_WINDOW
        assert error_record(capsys)["error"] == "window"
        assert not os.path.exists(tmp_path / "complex_types.txt")


class TestDryRun:
    def test_computes_nothing(self, tmp_path):
        out = tmp_path / "out"
        assert run_cli("group", "ball", "--group", Z2, "--radius", "50", "--dry-run", output_dir=out) == EXIT_OK
        assert not os.path.exists(out)

    @pytest.mark.parametrize(
        "argv, code",
        [
            (["complex", "build", "--group", "<s1,s2|[s1,s2]"], EXIT_INPUT),
            (["go", "play", "--group", Z], EXIT_INPUT),
            (["go", "enumerate", "--group", Z, "--color", "green"], EXIT_INPUT),
            (["circle", "eval", "--word", "b*b^-1"], EXIT_INPUT),
            (["circle", "measure"], EXIT_OK),
            (["lab", "commutant", "--matrices", "missing.mtx"], EXIT_FILE),
        ],
    )
    def test_validation(self, tmp_path, argv, code):
        assert run_cli(*argv, "--dry-run", output_dir=tmp_path / "out") == code
        assert not os.path.exists(tmp_path / "out")
