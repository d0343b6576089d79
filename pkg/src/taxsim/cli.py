"""Command-line entry point: ``taxsim simulate|compare|validate``."""

from __future__ import annotations

import argparse
import sys
import warnings
from pathlib import Path

from taxsim.errors import ScenarioValidationError, TaxSimError
from taxsim.scenario_io import FORMATS, emit_comparison, emit_report, parse_scenario
from taxsim.simulator import compute_savings, run, run_adjusted, run_baseline


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="taxsim", description="Regional tax simulation with profitability-adjusted rates."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    simulate = sub.add_parser("simulate", help="per-year tax schedule for one mode")
    simulate.add_argument("--scenario", required=True, type=Path)
    simulate.add_argument("--mode", choices=["baseline", "adjusted"], default="adjusted")
    simulate.add_argument("--format", choices=FORMATS, default="table")
    simulate.add_argument("--out", type=Path)

    compare = sub.add_parser("compare", help="baseline vs adjusted totals and savings")
    compare.add_argument("--scenario", required=True, type=Path)
    compare.add_argument("--format", choices=FORMATS, default="table")
    compare.add_argument("--out", type=Path)

    validate = sub.add_parser("validate", help="check a scenario file")
    validate.add_argument("--scenario", required=True, type=Path)
    return parser


def _load(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise TaxSimError(f"cannot read scenario {path}: {exc.strerror}") from None
    return parse_scenario(text)


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    # rate-range warnings go to stderr as plain lines
    warnings.showwarning = lambda message, *_args, **_kw: print(f"warning: {message}", file=sys.stderr)
    try:
        scenario = _load(args.scenario)
        if args.command == "validate":
            print(f"{args.scenario}: ok ({scenario.horizon} of {scenario.pool.useful_life} years)", file=sys.stderr)
            return 0
        if args.command == "simulate":
            _write(emit_report(run(scenario, args.mode), args.format), args.out)
        else:
            baseline, adjusted = run_baseline(scenario), run_adjusted(scenario)
            _write(emit_comparison(baseline, adjusted, compute_savings(baseline, adjusted), args.format), args.out)
    except ScenarioValidationError as exc:
        print(f"{args.scenario}: invalid scenario", file=sys.stderr)
        for problem in exc.violations:
            print(f"  {problem}", file=sys.stderr)
        return 1
    except (TaxSimError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
