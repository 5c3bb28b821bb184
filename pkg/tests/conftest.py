import pytest

from hopfalg.fields import PrimeField, RationalField
from hopfalg.hopf import FiniteGroupTable, group_algebra
from hopfalg.classify import H4nSpec, h4n_matched_pair


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def F7():
    return PrimeField(7)


@pytest.fixture(scope="session")
def Q():
    return RationalField()


@pytest.fixture(scope="session", autouse=True)
def warm_kernels(F7):
    """Compile the numba kernels once so individual tests measure only
    runtime."""
    from hopfalg.hopf import verify_hopf_axioms
    from hopfalg.products import drinfeld_double

    H = group_algebra(FiniteGroupTable.cyclic(2), F7)
    mp, D = drinfeld_double(H)
    verify_hopf_axioms(D)
    yield


def omega_pair(n, t, field):
    return h4n_matched_pair(H4nSpec(n, t, field))
