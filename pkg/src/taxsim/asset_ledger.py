"""Straight-line depreciation of a single fixed-asset pool.

Year ``i`` runs from 1 to ``useful_life``. ``residual_value(pool, i)`` is the
value at the *end* of year ``i``; ``i = 0`` is the start of year 1, when the
residual value still equals the historical cost.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from numbers import Integral

from taxsim.errors import OutOfLifeError, TaxSimError


@dataclass(frozen=True)
class FixedAssetPool:
    historical_cost: float
    useful_life: int

    def __post_init__(self):
        if isinstance(self.useful_life, bool) or not isinstance(self.useful_life, Integral):
            raise TaxSimError(f"useful_life must be an integer number of years, got {self.useful_life!r}")
        if self.useful_life < 1:
            raise TaxSimError(f"useful_life must be >= 1, got {self.useful_life}")
        if not math.isfinite(self.historical_cost) or self.historical_cost <= 0:
            raise TaxSimError(f"historical_cost must be finite and > 0, got {self.historical_cost!r}")

    @property
    def depreciation_fraction(self) -> float:
        """Share of historical cost written off each year (1/N)."""
        return 1.0 / self.useful_life


def _check_year(pool: FixedAssetPool, i: int, lowest: int) -> None:
    if not lowest <= i <= pool.useful_life:
        raise OutOfLifeError(f"year {i} outside [{lowest}, {pool.useful_life}]")


def annual_depreciation(pool: FixedAssetPool) -> float:
    return pool.historical_cost / pool.useful_life


def residual_value(pool: FixedAssetPool, i: int) -> float:
    """Residual value at the end of year ``i`` (``i = 0`` gives the historical cost)."""
    _check_year(pool, i, 0)
    return pool.historical_cost * (1 - i / pool.useful_life)


def average_annual_cost(pool: FixedAssetPool, i: int) -> float:
    """Mean of the start- and end-of-year residual values of year ``i``.

    This is the property tax base and the denominator of the profitability
    coefficient. It is strictly positive on ``[1, N]``.
    """
    _check_year(pool, i, 1)
    n = pool.useful_life
    return pool.historical_cost / n * (n - i + 0.5)
