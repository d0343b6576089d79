"""Exception hierarchy shared across the engine."""

from __future__ import annotations


class TaxSimError(ValueError):
    """Base class for all domain errors raised by taxsim."""


class OutOfLifeError(TaxSimError):
    """A year index falls outside the useful life of the asset pool."""


class AdjustmentUndefinedError(TaxSimError):
    """Rate adjustment requested with a non-positive profit or coefficient."""


class FullyDepreciatedError(TaxSimError):
    """Profitability requested against a non-positive asset base."""


class ComparisonError(TaxSimError):
    """Two reports do not describe the same scenario and horizon."""


class ScenarioValidationError(TaxSimError):
    """One or more scenario invariants are violated.

    ``violations`` holds every problem found, each as ``"<field path>: <message>"``.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("invalid scenario:\n  " + "\n  ".join(self.violations))
