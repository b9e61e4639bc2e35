import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def fixture_lines(name: str) -> list[str]:
    return [line for line in (FIXTURES / name).read_text().splitlines() if line]


@pytest.fixture(scope="session")
def n4_nonempty() -> list[str]:
    return fixture_lines("n4_nonempty.g6")


@pytest.fixture(scope="session")
def n6_nonempty() -> list[str]:
    return fixture_lines("n6_nonempty.g6")


@pytest.fixture(scope="session")
def roundtrip_lines() -> list[str]:
    return fixture_lines("roundtrip.g6")
