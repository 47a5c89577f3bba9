import json

import pytest

from lipgames import game_to_dict, random_game
from lipgames.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def parse_kv(out):
    data = {}
    for line in out.strip().splitlines():
        if " = " in line:
            key, value = line.split(" = ", 1)
            data[key] = value
    return data


def test_lambda_trivial(capsys):
    code, out, _ = run_cli(capsys, "lambda", "--n", "2", "--k", "3", "--delta", "0.5")
    assert code == 0
    data = parse_kv(out)
    assert data["lambda"] == "0.5"
    assert data["method"] == "walk-closed-form"


def test_lambda_both_shows_difference(capsys):
    code, out, _ = run_cli(
        capsys, "lambda", "--n", "4", "--k", "2", "--delta", "0.5", "--method", "both"
    )
    assert code == 0
    data = parse_kv(out)
    assert data["lambda"] == "0.3125"
    assert float(data["difference"]) <= 1e-9


def test_lambda_odd_bracket(capsys):
    code, out, _ = run_cli(capsys, "lambda", "--n", "3", "--k", "2", "--delta", "0.5")
    assert code == 0
    data = parse_kv(out)
    assert data["lambda"] == "0.375"
    assert data["lower"] == "0.3125"
    assert float(data["upper"]) == pytest.approx(0.3952847075, abs=1e-9)


def test_lambda_json_deterministic(capsys):
    _, first, _ = run_cli(
        capsys, "lambda", "--n", "6", "--k", "4", "--delta", "0.3", "--json"
    )
    _, second, _ = run_cli(
        capsys, "lambda", "--n", "6", "--k", "4", "--delta", "0.3", "--json"
    )
    assert first == second
    payload = json.loads(first)
    assert payload["method"] == "walk-closed-form"
    assert payload["n"] == 6


def test_lambda_oracle_method(capsys):
    code, out, _ = run_cli(
        capsys, "lambda", "--n", "5", "--k", "3", "--delta", "0.3", "--method", "oracle"
    )
    assert code == 0
    data = parse_kv(out)
    assert data["method"] == "oracle"
    assert data["worst_class"] == "(0, 0, 3)"


def test_lambda_rejects_bad_delta(capsys):
    code, out, err = run_cli(capsys, "lambda", "--n", "4", "--k", "3", "--delta", "1.5")
    assert code == 1
    assert out == ""
    assert err.startswith("error: ValueError:")
    assert "\n" not in err.strip()


def test_oracle_budget_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "lambda", "--n", "200", "--k", "4", "--delta", "0.3", "--method", "oracle"
    )
    assert code == 2
    assert err.startswith("error: BudgetExceededError:")


def test_sweep_csv_schema_and_single_cell(tmp_path, capsys):
    out_path = tmp_path / "sweep.csv"
    code, _, _ = run_cli(
        capsys,
        "sweep",
        "--n-start", "4", "--n-stop", "4", "--k", "2", "--delta", "0.5",
        "--output", str(out_path),
    )
    assert code == 0
    lines = out_path.read_text().splitlines()
    assert lines[0] == "n,k,delta,lambda,lower,upper,asymptotic,ratio"
    fields = lines[1].split(",")
    assert fields[0] == "4" and fields[1] == "2"
    assert fields[3] == "0.3125"
    assert float(fields[7]) == pytest.approx(0.3125 / float(fields[6]), rel=1e-12)


def test_sweep_row_order_and_stdout(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep",
        "--n-start", "2", "--n-stop", "6", "--n-step", "2", "--k", "3",
        "--delta", "0.1", "--delta", "0.3",
    )
    assert code == 0
    rows = [line.split(",")[:3] for line in out.strip().splitlines()[1:]]
    assert rows == [
        ["2", "3", "0.1"],
        ["2", "3", "0.3"],
        ["4", "3", "0.1"],
        ["4", "3", "0.3"],
        ["6", "3", "0.1"],
        ["6", "3", "0.3"],
    ]


def test_sweep_json_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep",
        "--n-start", "2", "--n-stop", "3", "--k", "3", "--delta", "0.5",
        "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert len(rows) == 2
    assert rows[0]["lambda"] == 0.5


def test_sweep_rejects_empty_range(capsys):
    code, _, err = run_cli(
        capsys, "sweep", "--n-start", "5", "--n-stop", "4", "--k", "2", "--delta", "0.5"
    )
    assert code == 1
    assert "empty" in err


def test_coupling_deterministic_output(capsys):
    args = (
        "coupling", "--n", "8", "--k", "3", "--delta", "0.3",
        "--samples", "20000", "--seed", "11",
    )
    code, first, _ = run_cli(capsys, *args)
    assert code == 0
    _, second, _ = run_cli(capsys, *args)
    assert first == second
    data = parse_kv(first)
    assert abs(float(data["z_score"])) <= 4.0


def test_coupling_zero_steps(capsys):
    code, out, _ = run_cli(
        capsys, "coupling", "--n", "0", "--k", "3", "--delta", "0.3",
        "--samples", "100", "--seed", "1",
    )
    assert code == 0
    data = parse_kv(out)
    assert data["estimate"] == "1"
    assert data["exact"] == "1"


def test_meet_time_output(capsys):
    code, out, _ = run_cli(
        capsys, "meet-time", "--n", "4", "--k", "3", "--delta", "0.5",
        "--samples", "5000", "--seed", "3",
    )
    assert code == 0
    assert "step,count" in out
    assert out.strip().splitlines()[-1].startswith("never,")


def test_equilibrium_party_fixture(capsys):
    code, out, _ = run_cli(
        capsys, "equilibrium", "--party", "4", "--delta", "0.3", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["found"] is True
    assert payload["max_regret"] <= payload["epsilon"]
    assert payload["unperturbed_guarantee"] == pytest.approx(
        0.3 + payload["max_regret"], abs=1e-9
    )


def test_equilibrium_game_file(tmp_path, capsys):
    path = tmp_path / "game.json"
    path.write_text(json.dumps(game_to_dict(random_game(3, 2, seed=7))))
    code, out, _ = run_cli(
        capsys, "equilibrium", "--game", str(path), "--delta", "0.1",
        "--epsilon", "1.0",
    )
    assert code == 0
    assert parse_kv(out)["found"] == "True"


def test_equilibrium_malformed_file(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"n": 2, "k": 2, "payoffs": [[0.5]]}))
    code, _, err = run_cli(
        capsys, "equilibrium", "--game", str(path), "--delta", "0.1"
    )
    assert code == 1
    assert err.startswith("error: ValueError:")


def test_equilibrium_requires_exactly_one_source(capsys):
    code, _, err = run_cli(capsys, "equilibrium", "--delta", "0.1")
    assert code == 1
    assert "exactly one" in err


def test_equilibrium_absence_is_reported(capsys):
    code, out, _ = run_cli(
        capsys, "equilibrium", "--party", "3", "--delta", "0", "--epsilon", "0.25"
    )
    assert code == 0
    assert parse_kv(out)["found"] == "False"


def test_delta_star_trivial(capsys):
    code, out, _ = run_cli(capsys, "delta-star", "--n", "2", "--k", "3")
    assert code == 0
    data = parse_kv(out)
    assert float(data["delta_star"]) == pytest.approx(0.5, abs=1e-9)
    assert float(data["residual"]) <= 1e-10
    assert float(data["epsilon"]) == pytest.approx(2 * float(data["delta_star"]), rel=1e-12)


def test_delta_star_decreasing_over_players(capsys):
    values = []
    for n in ("10", "100", "1000"):
        _, out, _ = run_cli(capsys, "delta-star", "--n", n, "--k", "2")
        values.append(float(parse_kv(out)["delta_star"]))
    assert values[0] > values[1] > values[2]


def test_verify_passes(capsys):
    code, out, _ = run_cli(capsys, "verify")
    assert code == 0
    assert "verify: PASS" in out
    data = parse_kv(out)
    assert float(data["max_deviation"]) <= 1e-9


def test_fifteen_significant_digits(capsys):
    _, out, _ = run_cli(capsys, "lambda", "--n", "3", "--k", "2", "--delta", "0.5")
    upper = parse_kv(out)["upper"]
    # sqrt(0.15625) rendered at 15 significant digits
    assert upper == "0.395284707521047"
    assert upper == format(float(upper), ".15g")
