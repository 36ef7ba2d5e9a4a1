import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fractions import Fraction

from weakhopf.fields import Field
from weakhopf.fixtures import (m2q, m2qz2, qz, twisted_derivation_data, twisted_derivation_qz2,
                               sweedler_data)
from weakhopf.groupoid import GroupPresentation, matrix_algebra


@pytest.fixture(scope="session")
def M2():
    return m2q()


@pytest.fixture(scope="session")
def M3():
    return matrix_algebra(3)


@pytest.fixture(scope="session")
def QZ2():
    return qz(2)


@pytest.fixture(scope="session")
def QZ3():
    return qz(3)


@pytest.fixture(scope="session")
def QZ4():
    return qz(4)


@pytest.fixture(scope="session")
def M2Z2():
    return m2qz2()


@pytest.fixture(scope="session")
def sweedler():
    return sweedler_data()


@pytest.fixture(scope="session")
def s5_qz2():
    return twisted_derivation_qz2()


@pytest.fixture(scope="session")
def s5_m2qz2():
    return twisted_derivation_data(GroupPresentation.cyclic(2), 2,
                                   rho=[Fraction(1), Fraction(-1)],
                                   q=[Fraction(1), Fraction(1)])


@pytest.fixture(scope="session")
def M2F2():
    return matrix_algebra(2, Field.prime(2))


@pytest.fixture(scope="session")
def F2Z2():
    return qz(2, Field.prime(2))
