"""Profitability-driven adjustment of regional tax rates.

Each period the previous effective rate is scaled by the ratio of the
previous profitability-of-fixed-assets coefficient to the current one, then
clamped into legal bounds. Rising profitability lowers the rate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from taxsim.errors import AdjustmentUndefinedError, FullyDepreciatedError, TaxSimError
from taxsim.statutory_taxes import REGIONAL_INCOME_FLOOR, REGIONAL_INCOME_RATE, StatutoryRates


@dataclass(frozen=True)
class RateClampPolicy:
    """Closed interval ``[floor, ceiling]`` for one adjusted rate.

    ``ceiling`` may be ``math.inf`` to leave the rate unbounded above.
    """

    floor: float
    ceiling: float

    def __post_init__(self):
        if math.isnan(self.floor) or math.isnan(self.ceiling):
            raise TaxSimError("clamp bounds must not be NaN")
        if not 0 <= self.floor <= self.ceiling:
            raise TaxSimError(f"clamp needs 0 <= floor <= ceiling, got [{self.floor}, {self.ceiling}]")

    @classmethod
    def wide_open(cls) -> RateClampPolicy:
        return cls(0.0, math.inf)

    @classmethod
    def pinned(cls, rate: float) -> RateClampPolicy:
        return cls(rate, rate)

    def __contains__(self, rate: float) -> bool:
        return self.floor <= rate <= self.ceiling

    def apply(self, rate: float) -> float:
        return min(max(rate, self.floor), self.ceiling)


@dataclass(frozen=True)
class ClampSet:
    property: RateClampPolicy
    vehicle: RateClampPolicy
    income_regional: RateClampPolicy

    @classmethod
    def defaults(cls, rates: StatutoryRates) -> ClampSet:
        """Property and vehicle may only fall (``[0, statutory]``); regional income stays in [13.5%, 18%]."""
        return cls(
            property=RateClampPolicy(0.0, rates.property),
            vehicle=RateClampPolicy(0.0, rates.vehicle),
            income_regional=RateClampPolicy(REGIONAL_INCOME_FLOOR, REGIONAL_INCOME_RATE),
        )

    @classmethod
    def wide_open(cls) -> ClampSet:
        return cls(RateClampPolicy.wide_open(), RateClampPolicy.wide_open(), RateClampPolicy.wide_open())

    @classmethod
    def pinned(cls, rates: StatutoryRates) -> ClampSet:
        return cls(
            RateClampPolicy.pinned(rates.property),
            RateClampPolicy.pinned(rates.vehicle),
            RateClampPolicy.pinned(rates.income_regional),
        )


class AdjustedRate(NamedTuple):
    raw: float
    effective: float


def profitability_of_assets(profit: float, average_cost: float) -> float:
    """Return-on-assets coefficient: profit over the average annual asset value."""
    if average_cost <= 0:
        raise FullyDepreciatedError(f"average annual cost must be > 0, got {average_cost}")
    return profit / average_cost


def adjust_rate(
    r_prev: float, pra_prev: float, pra_curr: float, clamp: RateClampPolicy
) -> AdjustedRate:
    if pra_prev <= 0 or pra_curr <= 0:
        raise AdjustmentUndefinedError(
            f"profitability coefficients must be > 0, got {pra_prev} and {pra_curr}"
        )
    if r_prev not in clamp:
        raise TaxSimError(f"previous rate {r_prev} outside [{clamp.floor}, {clamp.ceiling}]")
    raw = r_prev * (pra_prev / pra_curr)
    return AdjustedRate(raw, clamp.apply(raw))


def adjust_rate_single_asset(
    r_prev: float,
    p_prev: float,
    p_curr: float,
    useful_life: int,
    i: int,
    clamp: RateClampPolicy,
) -> AdjustedRate:
    """Adjust a rate for year ``i`` from profits alone, for a single straight-line pool.

    Equivalent to :func:`adjust_rate` with both coefficients taken against
    the pool's average annual cost; the historical cost cancels out.
    """
    if not 2 <= i <= useful_life:
        raise TaxSimError(f"adjustment needs 2 <= i <= {useful_life}, got {i}")
    if p_prev <= 0 or p_curr <= 0:
        raise AdjustmentUndefinedError(f"profits must be > 0, got {p_prev} and {p_curr}")
    if r_prev not in clamp:
        raise TaxSimError(f"previous rate {r_prev} outside [{clamp.floor}, {clamp.ceiling}]")
    n = useful_life
    raw = r_prev * (p_prev / p_curr) * (n - i + 0.5) / (n - i + 1.5)
    return AdjustedRate(raw, clamp.apply(raw))
