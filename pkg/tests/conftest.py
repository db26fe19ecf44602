"""Shared fixtures: the expensive groups are built once per session."""

from __future__ import annotations

import pytest

from toybit import analysis


@pytest.fixture(scope="session")
def tg1():
    return analysis._single_bit_group()


@pytest.fixture(scope="session")
def lvg1():
    return analysis._linear_group(1)


@pytest.fixture(scope="session")
def lvg2():
    return analysis._linear_group(2)


@pytest.fixture(scope="session")
def tg2():
    return analysis._two_bit_group()


@pytest.fixture(scope="session")
def spekkens2():
    return analysis._spekkens_two_bit_group()


@pytest.fixture(scope="session")
def c1():
    return analysis._clifford_group(1, False)


@pytest.fixture(scope="session")
def ec1():
    return analysis._clifford_group(1, True)


@pytest.fixture(scope="session")
def c2():
    return analysis._clifford_group(2, False)


@pytest.fixture(scope="session")
def ec2():
    return analysis._clifford_group(2, True)
