"""Unadjusted regional taxes: property, vehicle, and the split profit tax."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import NamedTuple

from taxsim.asset_ledger import FixedAssetPool, average_annual_cost
from taxsim.errors import TaxSimError

FEDERAL_INCOME_RATE = 0.02
REGIONAL_INCOME_RATE = 0.18
REGIONAL_INCOME_FLOOR = 0.135


@dataclass(frozen=True)
class StatutoryRates:
    """Baseline rates.

    ``vehicle`` is an amount of currency per unit of the vehicle tax base
    (horsepower, tonnage, ...), not a fraction. The others are fractions.
    Income rates outside the usual 2% federal / 13.5-18% regional ranges are
    accepted with a warning.
    """

    property: float
    vehicle: float = 0.0
    income_federal: float = FEDERAL_INCOME_RATE
    income_regional: float = REGIONAL_INCOME_RATE

    def __post_init__(self):
        for name in ("property", "vehicle", "income_federal", "income_regional"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise TaxSimError(f"rate {name} must be finite and >= 0, got {value!r}")
        if self.property > 1:
            raise TaxSimError(f"property rate is a fraction, got {self.property}")
        if self.income_federal != FEDERAL_INCOME_RATE:
            warnings.warn(f"federal income rate {self.income_federal} differs from 0.02", stacklevel=3)
        if not REGIONAL_INCOME_FLOOR <= self.income_regional <= REGIONAL_INCOME_RATE:
            warnings.warn(
                f"regional income rate {self.income_regional} outside [0.135, 0.18]", stacklevel=3
            )

    @property
    def income_total(self) -> float:
        return self.income_federal + self.income_regional


@dataclass(frozen=True)
class VehicleTaxBase:
    base_quantity: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.base_quantity) or self.base_quantity < 0:
            raise TaxSimError(f"vehicle tax base must be finite and >= 0, got {self.base_quantity!r}")


class IncomeTax(NamedTuple):
    federal: float
    regional: float
    total: float


def property_tax_period(pool: FixedAssetPool, i: int, t: float) -> float:
    """Property tax for year ``i``: rate times the year's average asset value."""
    return t * average_annual_cost(pool, i)


def property_tax_lifetime(pool: FixedAssetPool, t: float) -> float:
    return t * pool.historical_cost * pool.useful_life / 2


def vehicle_tax(base: VehicleTaxBase, v: float) -> float:
    return v * base.base_quantity


def income_tax_split(profit: float, fy: float, ry: float) -> IncomeTax:
    """Split the profit tax into its federal and regional parts.

    Loss years (``profit <= 0``) owe nothing; no refund is ever produced.
    """
    if profit <= 0:
        return IncomeTax(0.0, 0.0, 0.0)
    federal = fy * profit
    regional = ry * profit
    return IncomeTax(federal, regional, federal + regional)
