import sys

import pytest

from taxsim import FixedAssetPool, Scenario, StatutoryRates, VehicleTaxBase


@pytest.fixture
def pool():
    return FixedAssetPool(1000.0, 5)


@pytest.fixture
def rising_scenario(pool):
    return Scenario(
        pool=pool,
        rates=StatutoryRates(property=0.022, vehicle=5.0),
        profits=(100, 150, 200, 250, 300),
        vehicle=VehicleTaxBase(150),
    )


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is not None and acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in acceptance.RESULTS:
            terminalreporter.write_line(line)
