"""Scenario documents (JSON) and report serialization.

Scenario document layout::

    {
      "asset":   {"historical_cost": 1000, "useful_life_years": 5},
      "vehicle": {"tax_base": 150, "statutory_rate": 5},            # optional
      "rates":   {"property": 0.022, "income_federal": 0.02, "income_regional": 0.18},
      "clamps":  {"property": {"floor": 0, "ceiling": 0.022}, ...},  # optional
      "profits": [100, 150, 200]
    }
"""

from __future__ import annotations

import csv
import io
import json
import math
from decimal import ROUND_HALF_EVEN, Decimal
from typing import Literal

from taxsim.asset_ledger import FixedAssetPool
from taxsim.errors import ScenarioValidationError
from taxsim.incentive_engine import ClampSet, RateClampPolicy
from taxsim.simulator import (
    RateSet,
    SavingsReport,
    Scenario,
    ScheduleReport,
    TaxAmounts,
)
from taxsim.statutory_taxes import (
    FEDERAL_INCOME_RATE,
    REGIONAL_INCOME_FLOOR,
    REGIONAL_INCOME_RATE,
    StatutoryRates,
    VehicleTaxBase,
)

ReportFormat = Literal["table", "csv", "structured"]
FORMATS = ("table", "csv", "structured")

CSV_COLUMNS = (
    "year",
    "pra",
    "rate_property",
    "rate_vehicle",
    "rate_income_regional",
    "raw_rate_property",
    "raw_rate_vehicle",
    "raw_rate_income_regional",
    "tax_property",
    "tax_vehicle",
    "tax_income_federal",
    "tax_income_regional",
    "adjustment_applied",
    "reset_occurred",
)

_SCHEMA = {
    "asset": {"historical_cost", "useful_life_years"},
    "vehicle": {"tax_base", "statutory_rate"},
    "rates": {"property", "income_federal", "income_regional"},
    "clamps": {"property", "vehicle", "income_regional"},
    "profits": None,
}
_REQUIRED = ("asset", "rates", "profits")


# --------------------------------------------------------------------------
# parsing


def _reject_constant(name):
    raise ValueError(f"non-finite number {name} is not allowed")


class _Checker:
    """Collects every violation instead of stopping at the first."""

    def __init__(self):
        self.problems: list[str] = []

    def fail(self, path: str, message: str) -> None:
        self.problems.append(f"{path}: {message}")

    def table(self, value, path: str, allowed: set[str], required=()) -> dict | None:
        if not isinstance(value, dict):
            self.fail(path, "expected an object")
            return None
        for key in sorted(set(value) - allowed):
            self.fail(f"{path}.{key}" if path else key, "unknown key")
        for key in required:
            if key not in value:
                self.fail(f"{path}.{key}" if path else key, "missing required key")
        return value

    def number(self, value, path: str, *, minimum=None, exclusive=False, maximum=None):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            self.fail(path, f"expected a number, got {json.dumps(value)}")
            return None
        if not math.isfinite(value):
            self.fail(path, "must be finite")
            return None
        if minimum is not None and (value <= minimum if exclusive else value < minimum):
            self.fail(path, f"must be {'>' if exclusive else '>='} {minimum}, got {value}")
            return None
        if maximum is not None and value > maximum:
            self.fail(path, f"must be <= {maximum}, got {value}")
            return None
        return float(value)


def _clamp(check: _Checker, doc: dict, name: str, floor_default, ceiling_default):
    raw = doc.get(name)
    path = f"clamps.{name}"
    if raw is None:
        floor, ceiling = floor_default, ceiling_default
    else:
        if check.table(raw, path, {"floor", "ceiling"}) is None:
            return None
        floor = check.number(raw["floor"], f"{path}.floor", minimum=0) if "floor" in raw else floor_default
        ceiling = check.number(raw["ceiling"], f"{path}.ceiling", minimum=0) if "ceiling" in raw else ceiling_default
    if floor is None or ceiling is None:
        return None
    if floor > ceiling:
        check.fail(path, f"floor {floor} exceeds ceiling {ceiling}")
        return None
    return RateClampPolicy(floor, ceiling)


def parse_scenario(document: str) -> Scenario:
    """Parse and validate a JSON scenario document.

    Raises :class:`ScenarioValidationError` listing every problem found,
    including JSON syntax errors with their line and column.
    """
    try:
        data = json.loads(document, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise ScenarioValidationError([f"syntax: {exc.msg} at line {exc.lineno}, column {exc.colno}"]) from None
    except ValueError as exc:
        raise ScenarioValidationError([f"syntax: {exc}"]) from None

    check = _Checker()
    if check.table(data, "", set(_SCHEMA), _REQUIRED) is None:
        raise ScenarioValidationError(check.problems)

    pool = None
    asset = data.get("asset")
    if asset is not None and check.table(asset, "asset", _SCHEMA["asset"], sorted(_SCHEMA["asset"])):
        cost = life = None
        if "historical_cost" in asset:
            cost = check.number(asset["historical_cost"], "asset.historical_cost", minimum=0, exclusive=True)
        if "useful_life_years" in asset:
            life = asset["useful_life_years"]
            if isinstance(life, bool) or not isinstance(life, int):
                check.fail("asset.useful_life_years", f"expected an integer, got {json.dumps(life)}")
                life = None
            elif life < 1:
                check.fail("asset.useful_life_years", f"must be >= 1, got {life}")
                life = None
        if cost is not None and life is not None:
            pool = FixedAssetPool(cost, life)

    vehicle_base, vehicle_rate = 0.0, 0.0
    vehicle = data.get("vehicle")
    if vehicle is not None and check.table(vehicle, "vehicle", _SCHEMA["vehicle"], sorted(_SCHEMA["vehicle"])):
        if "tax_base" in vehicle:
            vehicle_base = check.number(vehicle["tax_base"], "vehicle.tax_base", minimum=0)
        if "statutory_rate" in vehicle:
            vehicle_rate = check.number(vehicle["statutory_rate"], "vehicle.statutory_rate", minimum=0)

    rates = None
    rates_doc = data.get("rates")
    if rates_doc is not None and check.table(rates_doc, "rates", _SCHEMA["rates"], ("property",)):
        prop = check.number(rates_doc["property"], "rates.property", minimum=0, maximum=1) \
            if "property" in rates_doc else None
        fed = check.number(rates_doc.get("income_federal", FEDERAL_INCOME_RATE), "rates.income_federal",
                           minimum=0, maximum=1)
        reg = check.number(rates_doc.get("income_regional", REGIONAL_INCOME_RATE), "rates.income_regional",
                           minimum=0, maximum=1)
        if None not in (prop, fed, reg, vehicle_rate):
            rates = StatutoryRates(prop, vehicle_rate, fed, reg)

    profits = None
    profits_doc = data.get("profits")
    if profits_doc is not None:
        if not isinstance(profits_doc, list):
            check.fail("profits", "expected an array of numbers")
        else:
            values = [check.number(p, f"profits[{k}]") for k, p in enumerate(profits_doc)]
            if pool is not None and not 1 <= len(values) <= pool.useful_life:
                check.fail("profits", f"length {len(values)} outside [1, {pool.useful_life}] (useful life)")
            elif not values:
                check.fail("profits", "must contain at least one year")
            if None not in values:
                profits = values

    clamps = None
    clamps_doc = data.get("clamps", {})
    if check.table(clamps_doc, "clamps", _SCHEMA["clamps"]) is not None:
        prop_ceiling = rates.property if rates is not None else math.inf
        parts = (
            _clamp(check, clamps_doc, "property", 0.0, prop_ceiling),
            _clamp(check, clamps_doc, "vehicle", 0.0, vehicle_rate if vehicle_rate is not None else math.inf),
            _clamp(check, clamps_doc, "income_regional", REGIONAL_INCOME_FLOOR, REGIONAL_INCOME_RATE),
        )
        if None not in parts:
            clamps = ClampSet(*parts)

    if check.problems or None in (pool, rates, profits, clamps, vehicle_base):
        raise ScenarioValidationError(check.problems)
    return Scenario(pool, rates, tuple(profits), VehicleTaxBase(vehicle_base), clamps)


def scenario_to_document(scenario: Scenario) -> str:
    """Serialize a scenario so that :func:`parse_scenario` reproduces it.

    Clamp ceilings must be finite; JSON has no infinity.
    """
    clamps = {
        name: {"floor": getattr(scenario.clamps, name).floor, "ceiling": getattr(scenario.clamps, name).ceiling}
        for name in RateSet._fields
    }
    doc = {
        "asset": {
            "historical_cost": scenario.pool.historical_cost,
            "useful_life_years": scenario.pool.useful_life,
        },
        "vehicle": {"tax_base": scenario.vehicle.base_quantity, "statutory_rate": scenario.rates.vehicle},
        "rates": {
            "property": scenario.rates.property,
            "income_federal": scenario.rates.income_federal,
            "income_regional": scenario.rates.income_regional,
        },
        "clamps": clamps,
        "profits": list(scenario.profits),
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


# --------------------------------------------------------------------------
# emission


def _quantize(value: float, places: int) -> Decimal:
    q = Decimal(repr(float(value))).quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN)
    return q.copy_abs() if q.is_zero() else q


def money(value: float) -> str:
    return str(_quantize(value, 2))


def rate(value: float) -> str:
    return str(_quantize(value, 6))


def _flag(value: bool) -> str:
    return "true" if value else "false"


def _schedule_rows(report: ScheduleReport) -> list[list[str]]:
    rows = []
    for p in report.periods:
        rows.append(
            [str(p.year), rate(p.pra)]
            + [rate(r) for r in p.effective_rates]
            + [rate(r) for r in p.raw_rates]
            + [money(t) for t in p.taxes]
            + [_flag(p.adjustment_applied), _flag(p.reset_occurred)]
        )
    rows.append(["TOTAL", ""] + [""] * 6 + [money(t) for t in report.totals] + ["", ""])
    return rows


def _to_csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _to_table(header, rows) -> str:
    widths = [max(len(h), *(len(r[k]) for r in rows)) for k, h in enumerate(header)]

    def line(cells):
        # label column left-aligned, numbers right-aligned
        return "  ".join(c.ljust(w) if k == 0 else c.rjust(w) for k, (c, w) in enumerate(zip(cells, widths)))

    lines = [line(header), line(["-" * w for w in widths])]
    lines += [line(r) for r in rows]
    return "\n".join(lines) + "\n"


def _money_tree(amounts: TaxAmounts | SavingsReport) -> dict:
    tree = {name: float(_quantize(getattr(amounts, name), 2)) for name in TaxAmounts._fields}
    tree["income"] = float(_quantize(amounts.income, 2))
    return tree


def _rate_tree(rates: RateSet) -> dict:
    return {name: float(_quantize(getattr(rates, name), 6)) for name in RateSet._fields}


def _schedule_tree(report: ScheduleReport) -> dict:
    return {
        "mode": report.mode,
        "periods": [
            {
                "year": p.year,
                "profit": float(_quantize(p.profit, 2)),
                "pra": float(_quantize(p.pra, 6)),
                "effective_rates": _rate_tree(p.effective_rates),
                "raw_rates": _rate_tree(p.raw_rates),
                "taxes": _money_tree(p.taxes),
                "adjustment_applied": p.adjustment_applied,
                "reset_occurred": p.reset_occurred,
            }
            for p in report.periods
        ],
        "totals": _money_tree(report.totals),
    }


def _savings_tree(savings: SavingsReport) -> dict:
    tree = _money_tree(savings)
    tree["grand_total"] = float(_quantize(savings.grand_total, 2))
    return tree


def _dump(tree) -> str:
    return json.dumps(tree, indent=2, allow_nan=False) + "\n"


_SAVINGS_ROWS = ("property", "vehicle", "income_federal", "income_regional", "income", "grand_total")


def emit_report(report: ScheduleReport | SavingsReport, fmt: ReportFormat = "table") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}")
    if isinstance(report, SavingsReport):
        if fmt == "structured":
            return _dump(_savings_tree(report))
        rows = [[name, money(getattr(report, name))] for name in _SAVINGS_ROWS]
        return (_to_csv if fmt == "csv" else _to_table)(["tax", "saved"], rows)
    if fmt == "structured":
        return _dump(_schedule_tree(report))
    if fmt == "csv":
        return _to_csv(CSV_COLUMNS, _schedule_rows(report))
    header = ["year", "pra", "t", "v", "ry", "raw t", "raw v", "raw ry",
              "property", "vehicle", "income fed", "income reg", "adjusted", "reset"]
    return f"mode: {report.mode}\n" + _to_table(header, _schedule_rows(report))


def emit_comparison(
    baseline: ScheduleReport, adjusted: ScheduleReport, savings: SavingsReport, fmt: ReportFormat = "table"
) -> str:
    """Baseline totals, adjusted totals, and their difference side by side."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown report format {fmt!r}")
    if fmt == "structured":
        return _dump({
            "baseline": _money_tree(baseline.totals),
            "adjusted": _money_tree(adjusted.totals),
            "savings": _savings_tree(savings),
        })

    def total(amounts, name):
        return amounts.total if name == "grand_total" else getattr(amounts, name)

    rows = [
        [name, money(total(baseline.totals, name)), money(total(adjusted.totals, name)), money(getattr(savings, name))]
        for name in _SAVINGS_ROWS
    ]
    return (_to_csv if fmt == "csv" else _to_table)(["tax", "baseline", "adjusted", "saved"], rows)
