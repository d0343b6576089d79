"""Year-by-year simulation of regional taxes under statutory or adjusted rates.

The adjusted run follows a simple per-period procedure:

1. The first period (and the first profitable period after a loss) is taxed
   at statutory rates and becomes the reference period.
2. Every following profitable period rescales each adjustable rate from the
   previous effective rate using the change in profitability of fixed assets,
   clamped to the configured bounds.
3. A loss year (profit <= 0) is taxed at statutory rates and discards the
   recursion state.

The federal share of the profit tax is never adjusted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Literal, NamedTuple

from taxsim.asset_ledger import FixedAssetPool, average_annual_cost
from taxsim.errors import ComparisonError, ScenarioValidationError
from taxsim.incentive_engine import (
    ClampSet,
    adjust_rate_single_asset,
    profitability_of_assets,
)
from taxsim.statutory_taxes import (
    StatutoryRates,
    VehicleTaxBase,
    income_tax_split,
    property_tax_period,
    vehicle_tax,
)

Mode = Literal["baseline", "adjusted"]


class RateSet(NamedTuple):
    property: float
    vehicle: float
    income_regional: float


class TaxAmounts(NamedTuple):
    property: float
    vehicle: float
    income_federal: float
    income_regional: float

    @property
    def income(self) -> float:
        return self.income_federal + self.income_regional

    @property
    def total(self) -> float:
        return self.property + self.vehicle + self.income_federal + self.income_regional


@dataclass(frozen=True)
class Scenario:
    pool: FixedAssetPool
    rates: StatutoryRates
    profits: tuple[float, ...]
    vehicle: VehicleTaxBase = field(default_factory=VehicleTaxBase)
    clamps: ClampSet | None = None

    def __post_init__(self):
        object.__setattr__(self, "profits", tuple(float(p) for p in self.profits))
        if self.clamps is None:
            object.__setattr__(self, "clamps", ClampSet.defaults(self.rates))
        problems = self.violations()
        if problems:
            raise ScenarioValidationError(problems)

    def violations(self) -> list[str]:
        problems = []
        n = self.pool.useful_life
        if not 1 <= len(self.profits) <= n:
            problems.append(f"profits: length {len(self.profits)} outside [1, {n}] (useful life)")
        for k, p in enumerate(self.profits):
            if not math.isfinite(p):
                problems.append(f"profits[{k}]: not a finite number")
        for name in RateSet._fields:
            rate = getattr(self.rates, name)
            clamp = getattr(self.clamps, name)
            if rate not in clamp:
                problems.append(
                    f"clamps.{name}: statutory rate {rate} outside [{clamp.floor}, {clamp.ceiling}]"
                )
        return problems

    @property
    def horizon(self) -> int:
        return len(self.profits)

    @property
    def statutory(self) -> RateSet:
        return RateSet(self.rates.property, self.rates.vehicle, self.rates.income_regional)


@dataclass(frozen=True)
class PeriodResult:
    year: int
    profit: float
    pra: float
    effective_rates: RateSet
    raw_rates: RateSet
    taxes: TaxAmounts
    adjustment_applied: bool
    reset_occurred: bool


@dataclass(frozen=True)
class ScheduleReport:
    scenario: Scenario
    mode: Mode
    periods: tuple[PeriodResult, ...]
    totals: TaxAmounts


@dataclass(frozen=True)
class SavingsReport:
    """Baseline total minus adjusted total, per tax.

    ``income`` is the saved profit tax (federal plus regional).
    """

    property: float
    vehicle: float
    income_federal: float
    income_regional: float

    @property
    def income(self) -> float:
        return self.income_federal + self.income_regional

    @property
    def grand_total(self) -> float:
        return self.property + self.vehicle + self.income_federal + self.income_regional


def lifetime_totals(periods) -> TaxAmounts:
    """Per-tax sums over the given periods (a report or a sequence of PeriodResult)."""
    if isinstance(periods, ScheduleReport):
        periods = periods.periods
    return TaxAmounts(*(math.fsum(getattr(p.taxes, name) for p in periods) for name in TaxAmounts._fields))


def _period(scenario: Scenario, i: int, rates: RateSet, raw: RateSet, applied: bool, reset: bool) -> PeriodResult:
    profit = scenario.profits[i - 1]
    taxes = income_tax_split(profit, scenario.rates.income_federal, rates.income_regional)
    return PeriodResult(
        year=i,
        profit=profit,
        pra=profitability_of_assets(profit, average_annual_cost(scenario.pool, i)),
        effective_rates=rates,
        raw_rates=raw,
        taxes=TaxAmounts(
            property=property_tax_period(scenario.pool, i, rates.property),
            vehicle=vehicle_tax(scenario.vehicle, rates.vehicle),
            income_federal=taxes.federal,
            income_regional=taxes.regional,
        ),
        adjustment_applied=applied,
        reset_occurred=reset,
    )


def _report(scenario: Scenario, mode: Mode, periods: list[PeriodResult]) -> ScheduleReport:
    periods = tuple(periods)
    return ScheduleReport(scenario, mode, periods, lifetime_totals(periods))


def run_baseline(scenario: Scenario) -> ScheduleReport:
    statutory = scenario.statutory
    periods = [
        _period(scenario, i, statutory, statutory, False, False)
        for i in range(1, scenario.horizon + 1)
    ]
    return _report(scenario, "baseline", periods)


def run_adjusted(scenario: Scenario) -> ScheduleReport:
    """Simulate with profitability-adjusted rates.

    ``reset_occurred`` marks loss years, where the recursion is dropped; the
    next profitable year restarts from statutory rates without adjustment.
    """
    statutory = scenario.statutory
    n = scenario.pool.useful_life
    periods = []
    # (effective rates, profit) of the last period that can seed an adjustment
    state: tuple[RateSet, float] | None = None
    for i in range(1, scenario.horizon + 1):
        profit = scenario.profits[i - 1]
        if profit <= 0:
            periods.append(_period(scenario, i, statutory, statutory, False, True))
            state = None
            continue
        if state is None:
            periods.append(_period(scenario, i, statutory, statutory, False, False))
            state = (statutory, profit)
            continue
        prev_rates, prev_profit = state
        adjusted = [
            adjust_rate_single_asset(
                getattr(prev_rates, name), prev_profit, profit, n, i, getattr(scenario.clamps, name)
            )
            for name in RateSet._fields
        ]
        effective = RateSet(*(a.effective for a in adjusted))
        raw = RateSet(*(a.raw for a in adjusted))
        periods.append(_period(scenario, i, effective, raw, True, False))
        state = (effective, profit)
    return _report(scenario, "adjusted", periods)


def run(scenario: Scenario, mode: Mode = "adjusted") -> ScheduleReport:
    if mode == "baseline":
        return run_baseline(scenario)
    if mode == "adjusted":
        return run_adjusted(scenario)
    raise ValueError(f"unknown mode {mode!r}")


def compute_savings(baseline: ScheduleReport, adjusted: ScheduleReport) -> SavingsReport:
    if baseline.scenario != adjusted.scenario or len(baseline.periods) != len(adjusted.periods):
        raise ComparisonError("reports cover different scenarios or horizons")
    b, a = baseline.totals, adjusted.totals
    return SavingsReport(*(getattr(b, name) - getattr(a, name) for name in TaxAmounts._fields))
