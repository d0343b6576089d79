"""
Straight-line depreciation and statutory regional taxes
=======================================================

A 1000-unit asset pool written off over five years, taxed at fixed rates.
"""

from taxsim import (
    FixedAssetPool,
    StatutoryRates,
    VehicleTaxBase,
    annual_depreciation,
    average_annual_cost,
    income_tax_split,
    property_tax_lifetime,
    property_tax_period,
    residual_value,
    vehicle_tax,
)

pool = FixedAssetPool(historical_cost=1000, useful_life=5)
rates = StatutoryRates(property=0.022, vehicle=5.0)

# The average annual cost is the midpoint of the start- and end-of-year
# residual values, and it is what the property tax is charged on.
print("year  start     end  average  property tax")
for i in range(1, pool.useful_life + 1):
    print(
        f"{i:>4}  {residual_value(pool, i - 1):>5.0f}  {residual_value(pool, i):>6.0f}"
        f"  {average_annual_cost(pool, i):>7.0f}  {property_tax_period(pool, i, rates.property):>12.2f}"
    )
print("depreciation per year:", annual_depreciation(pool))

# Over the full life the per-year amounts add up to t * F * N / 2.
print("lifetime property tax:", property_tax_lifetime(pool, rates.property))

# Vehicle tax is a per-unit charge on a physical base, here 150 horsepower.
print("vehicle tax:", vehicle_tax(VehicleTaxBase(150), rates.vehicle))

# Profit tax: 2% federal, 18% regional. Losses owe nothing.
for profit in (1000, -50):
    print(f"profit {profit}:", income_tax_split(profit, rates.income_federal, rates.income_regional))
