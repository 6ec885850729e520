from pathlib import Path

import pytest

from effectlogic.enumeration import all_up_to

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "effectlogic" / "fixtures"


@pytest.fixture(scope="session")
def upto5():
    return all_up_to(5)


@pytest.fixture(scope="session")
def upto4(upto5):
    return [E for E in upto5 if E.size <= 4]


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES
