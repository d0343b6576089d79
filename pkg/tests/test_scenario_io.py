import csv
import io
import json

import pytest

from taxsim import (
    ClampSet,
    RateClampPolicy,
    ScenarioValidationError,
    compute_savings,
    emit_comparison,
    emit_report,
    parse_scenario,
    run_adjusted,
    run_baseline,
    scenario_to_document,
)
from taxsim.scenario_io import CSV_COLUMNS, money, rate

MINIMAL = {
    "asset": {"historical_cost": 1000, "useful_life_years": 5},
    "rates": {"property": 0.022},
    "profits": [100, 150],
}


def doc(**overrides):
    data = json.loads(json.dumps(MINIMAL))
    data.update(overrides)
    return json.dumps(data)


def violations(text):
    with pytest.raises(ScenarioValidationError) as info:
        parse_scenario(text)
    return info.value.violations


def test_minimal_document_gets_defaults():
    s = parse_scenario(doc())
    assert s.rates.income_federal == 0.02 and s.rates.income_regional == 0.18
    assert s.vehicle.base_quantity == 0 and s.rates.vehicle == 0
    assert s.clamps == ClampSet(RateClampPolicy(0, 0.022), RateClampPolicy(0, 0), RateClampPolicy(0.135, 0.18))
    assert s.profits == (100.0, 150.0)


def test_income_bounds_carried():
    s = parse_scenario(doc(rates={"property": 0.022, "income_regional": 0.18},
                           clamps={"income_regional": {"floor": 0.135}}))
    assert s.clamps.income_regional == RateClampPolicy(0.135, 0.18)


def test_profits_longer_than_life():
    problems = violations(doc(profits=[1] * 6))
    assert any(p.startswith("profits:") for p in problems)


def test_all_violations_reported_at_once():
    text = json.dumps({
        "asset": {"historical_cost": -5, "useful_life_years": 2.5},
        "rates": {"property": "high", "bogus": 1},
        "clamps": {"vehicle": {"floor": 2, "ceiling": 1}},
        "profits": [1, None],
        "extra": True,
    })
    problems = violations(text)
    for path in ("extra", "asset.historical_cost", "asset.useful_life_years", "rates.property",
                 "rates.bogus", "clamps.vehicle", "profits[1]"):
        assert any(p.startswith(path + ":") for p in problems), path


def test_missing_keys():
    problems = violations(json.dumps({"asset": {"historical_cost": 1}}))
    assert {"asset.useful_life_years: missing required key", "rates: missing required key",
            "profits: missing required key"} <= set(problems)


def test_statutory_outside_clamp():
    problems = violations(doc(clamps={"property": {"floor": 0, "ceiling": 0.01}}))
    assert any(p.startswith("clamps.property") for p in problems)


@pytest.mark.parametrize("text", ['{"asset": ', '{"profits": [NaN]}', "[1, 2"])
def test_syntax_errors(text):
    problems = violations(text)
    assert problems[0].startswith("syntax:")


def test_syntax_error_position():
    problems = violations('{\n  "asset": {,}\n}')
    assert "line 2" in problems[0]


def test_round_trip(rising_scenario):
    assert parse_scenario(scenario_to_document(rising_scenario)) == rising_scenario


def test_infinite_ceiling_cannot_be_serialized(rising_scenario):
    from dataclasses import replace

    with pytest.raises(ValueError):
        scenario_to_document(replace(rising_scenario, clamps=ClampSet.wide_open()))


@pytest.mark.parametrize(
    "value, expected",
    [(2.675, "2.68"), (0.125, "0.12"), (0.135, "0.14"), (-1e-15, "0.00"), (7.985185185, "7.99"), (1e6, "1000000.00")],
)
def test_money_rounds_half_even(value, expected):
    assert money(value) == expected


def test_rate_six_places():
    assert rate(0.0114074074) == "0.011407"
    assert rate(0.0000005) == "0.000000"
    assert rate(0.0000015) == "0.000002"


def test_csv_one_period():
    s = parse_scenario(doc(profits=[100]))
    rows = list(csv.reader(io.StringIO(emit_report(run_adjusted(s), "csv"))))
    assert tuple(rows[0]) == CSV_COLUMNS
    assert len(rows) == 3
    assert rows[2][0] == "TOTAL" and rows[2][1:8] == [""] * 7
    assert rows[1][8:12] == rows[2][8:12]


def test_csv_shows_decreasing_rates(rising_scenario):
    rows = list(csv.DictReader(io.StringIO(emit_report(run_adjusted(rising_scenario), "csv"))))
    rates = [float(r["rate_property"]) for r in rows[:-1]]
    assert all(a > b for a, b in zip(rates, rates[1:]))


@pytest.mark.parametrize("fmt", ["table", "csv", "structured"])
def test_emission_deterministic(rising_scenario, fmt):
    a = emit_report(run_adjusted(rising_scenario), fmt)
    b = emit_report(run_adjusted(rising_scenario), fmt)
    assert a == b


def test_structured_schedule(rising_scenario):
    tree = json.loads(emit_report(run_adjusted(rising_scenario), "structured"))
    assert tree["mode"] == "adjusted"
    assert len(tree["periods"]) == 5
    assert tree["periods"][1]["effective_rates"]["income_regional"] == 0.135
    assert tree["totals"]["property"] == 31.8


def test_savings_emission(rising_scenario):
    savings = compute_savings(run_baseline(rising_scenario), run_adjusted(rising_scenario))
    tree = json.loads(emit_report(savings, "structured"))
    assert tree["income"] == float(money(savings.income))
    assert "grand_total" in emit_report(savings, "csv")
    assert emit_report(savings, "table").splitlines()[0].startswith("tax")


def test_comparison_structured(rising_scenario):
    b, a = run_baseline(rising_scenario), run_adjusted(rising_scenario)
    tree = json.loads(emit_comparison(b, a, compute_savings(b, a), "structured"))
    assert tree["baseline"]["income"] == 200.0
    assert tree["savings"]["income_regional"] == 40.5


def test_unknown_format(rising_scenario):
    with pytest.raises(ValueError):
        emit_report(run_adjusted(rising_scenario), "xml")


def test_nonfinite_number_rejected():
    # 1e400 overflows to inf during decoding
    text = doc(profits=[12345]).replace("12345", "1e400")
    problems = violations(text)
    assert "profits[0]: must be finite" in problems
