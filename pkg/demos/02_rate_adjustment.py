"""
Adjusting rates by the profitability of fixed assets
====================================================

Each year the rate is rescaled by how much the return on the (shrinking)
asset base changed. Rising profitability lowers the rate, down to a floor.
"""

from taxsim import (
    FixedAssetPool,
    RateClampPolicy,
    adjust_rate,
    adjust_rate_single_asset,
    average_annual_cost,
    profitability_of_assets,
)

pool = FixedAssetPool(1000, 5)
income_bounds = RateClampPolicy(0.135, 0.18)

# Profit of 180 on an average asset value of 900 is a 20% return.
print("PrA year 1:", profitability_of_assets(180, average_annual_cost(pool, 1)))

# Doubling the return halves the regional income rate; the floor catches it.
print(adjust_rate(0.18, 0.2, 0.4, income_bounds))

# For a single pool the same step can be taken from profits directly:
# equal profits still cut the rate, since the asset base has shrunk.
print(adjust_rate_single_asset(0.022, 100, 100, 5, 2, RateClampPolicy(0, 0.022)))

# Following a rising profit path year by year.
profits = [100, 150, 200, 250, 300]
rate = 0.022
print("year  profit  PrA     property rate")
print(f"   1  {profits[0]:>6}  {profits[0] / average_annual_cost(pool, 1):.4f}  {rate:.6f}")
for i in range(2, 6):
    rate = adjust_rate_single_asset(rate, profits[i - 2], profits[i - 1], 5, i, RateClampPolicy(0, 0.022)).effective
    pra = profits[i - 1] / average_annual_cost(pool, i)
    print(f"{i:>4}  {profits[i - 1]:>6}  {pra:.4f}  {rate:.6f}")
