"""Regional tax simulation with rates adjusted by the profitability of fixed assets."""

from taxsim.asset_ledger import FixedAssetPool, annual_depreciation, average_annual_cost, residual_value
from taxsim.errors import (
    AdjustmentUndefinedError,
    ComparisonError,
    FullyDepreciatedError,
    OutOfLifeError,
    ScenarioValidationError,
    TaxSimError,
)
from taxsim.incentive_engine import (
    AdjustedRate,
    ClampSet,
    RateClampPolicy,
    adjust_rate,
    adjust_rate_single_asset,
    profitability_of_assets,
)
from taxsim.scenario_io import emit_comparison, emit_report, parse_scenario, scenario_to_document
from taxsim.simulator import (
    PeriodResult,
    RateSet,
    SavingsReport,
    Scenario,
    ScheduleReport,
    TaxAmounts,
    compute_savings,
    lifetime_totals,
    run,
    run_adjusted,
    run_baseline,
)
from taxsim.statutory_taxes import (
    IncomeTax,
    StatutoryRates,
    VehicleTaxBase,
    income_tax_split,
    property_tax_lifetime,
    property_tax_period,
    vehicle_tax,
)

__version__ = "0.1.0"
