import csv
import io
import json
from pathlib import Path

import pytest

from taxsim import compute_savings, parse_scenario, run_adjusted, run_baseline
from taxsim.cli import main
from taxsim.scenario_io import money

ROOT = Path(__file__).resolve().parent.parent
SCENARIOS = ROOT / "scenarios"
GOLDEN = Path(__file__).resolve().parent / "golden"
WORKED = ["rising_profits", "constant_pra", "loss_year_reset"]


@pytest.mark.parametrize("name", WORKED)
@pytest.mark.parametrize("mode", ["adjusted", "baseline"])
def test_simulate_golden(name, mode, capsys):
    assert main(["simulate", "--scenario", str(SCENARIOS / f"{name}.json"), "--mode", mode, "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{name}_{mode}.csv").read_text(encoding="utf-8")


@pytest.mark.parametrize("name", WORKED)
def test_compare_golden_and_savings(name, capsys):
    path = SCENARIOS / f"{name}.json"
    assert main(["compare", "--scenario", str(path), "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out == (GOLDEN / f"{name}_compare.csv").read_text(encoding="utf-8")
    scenario = parse_scenario(path.read_text())
    savings = compute_savings(run_baseline(scenario), run_adjusted(scenario))
    rows = {r["tax"]: r for r in csv.DictReader(io.StringIO(out))}
    for name_ in ("property", "vehicle", "income_federal", "income_regional", "income", "grand_total"):
        assert rows[name_]["saved"] == money(getattr(savings, name_))


def test_out_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["simulate", "--scenario", str(SCENARIOS / "rising_profits.json"),
                 "--format", "structured", "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    assert json.loads(out.read_text())["mode"] == "adjusted"


def test_compare_table(capsys):
    assert main(["compare", "--scenario", str(SCENARIOS / "rising_profits.json")]) == 0
    assert "grand_total" in capsys.readouterr().out


def test_validate_ok(capsys):
    assert main(["validate", "--scenario", str(SCENARIOS / "loss_year_reset.json")]) == 0
    captured = capsys.readouterr()
    assert captured.out == "" and "ok" in captured.err


def test_validate_broken(tmp_path, capsys):
    broken = tmp_path / "broken.json"
    broken.write_text(json.dumps({"asset": {"historical_cost": 0, "useful_life_years": 1}, "profits": [1, 2]}))
    assert main(["validate", "--scenario", str(broken)]) == 1
    err = capsys.readouterr().err
    assert "asset.historical_cost" in err and "rates: missing required key" in err


def test_missing_file(tmp_path, capsys):
    assert main(["simulate", "--scenario", str(tmp_path / "nope.json")]) == 1
    assert "cannot read" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [[], ["explode"], ["simulate"], ["simulate", "--scenario", "x", "--mode", "fast"]])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2
    assert capsys.readouterr().out == ""


def test_range_warning_goes_to_stderr(tmp_path, capsys):
    path = tmp_path / "s.json"
    path.write_text(json.dumps({
        "asset": {"historical_cost": 100, "useful_life_years": 2},
        "rates": {"property": 0.01, "income_regional": 0.12},
        "clamps": {"income_regional": {"floor": 0.1, "ceiling": 0.18}},
        "profits": [10, 20],
    }))
    assert main(["validate", "--scenario", str(path)]) == 0
    assert "warning:" in capsys.readouterr().err
