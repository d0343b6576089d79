"""
Baseline versus adjusted taxes for a whole scenario
===================================================

Loads the worked scenarios shipped in ``scenarios/`` and reports how much
regional tax the adjustment saves. Run from the repository root.
"""

from pathlib import Path

from taxsim import compute_savings, emit_comparison, emit_report, parse_scenario, run_adjusted, run_baseline

root = Path(__file__).resolve().parent.parent / "scenarios"

scenario = parse_scenario((root / "rising_profits.json").read_text())
baseline = run_baseline(scenario)
adjusted = run_adjusted(scenario)
print(emit_report(adjusted, "table"))

savings = compute_savings(baseline, adjusted)
print(emit_comparison(baseline, adjusted, savings, "table"))
print(f"saved income tax: {savings.income:.2f}")

# A loss year drops the recursion: that year and the next profitable one are
# taxed at statutory rates, then adjustment resumes.
loss = parse_scenario((root / "loss_year_reset.json").read_text())
for p in run_adjusted(loss).periods:
    print(p.year, p.profit, p.adjustment_applied, p.reset_occurred, round(p.effective_rates.property, 6))

# When profit tracks the asset base exactly, the return never changes and
# neither do the rates.
flat = run_adjusted(parse_scenario((root / "constant_pra.json").read_text()))
print({p.effective_rates for p in flat.periods})
