"""Shared cone fixtures for the test suite."""
from __future__ import annotations

import pytest

from conesine import fixture_cone


@pytest.fixture(scope="session")
def std2():
    return fixture_cone("standard-2")


@pytest.fixture(scope="session")
def std3():
    return fixture_cone("standard-3")


@pytest.fixture(scope="session")
def w21():
    return fixture_cone("wedge21")


@pytest.fixture(scope="session")
def w53():
    return fixture_cone("wedge53")


@pytest.fixture(scope="session")
def square():
    return fixture_cone("cone-over-square")
