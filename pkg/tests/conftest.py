import pytest

from eigenfactor.forms import QExpansionOracle, RecurrenceOracle, bundled_spec
from eigenfactor.numberfield import NumberField


def naive_delta(T):
    """q * prod (1 - q^n)^24 mod q^T by repeated sparse multiplication; independent of qseries."""
    c = [0] * T
    c[0] = 1
    for n in range(1, T):
        for _ in range(24):
            for i in range(T - 1, n - 1, -1):
                c[i] -= c[i - n]
    return [0] + c[: T - 1]


@pytest.fixture(scope="session")
def K():
    """Q(g) with g^2 + 2g - 1 = 0, g = sqrt(2) - 1."""
    return NumberField((-1, 2, 1), 0.414)


@pytest.fixture(scope="session")
def delta():
    return bundled_spec("delta.json")


@pytest.fixture(scope="session")
def g29():
    return bundled_spec("g29.json")


@pytest.fixture(scope="session")
def delta_rec(delta):
    return RecurrenceOracle(delta)


@pytest.fixture(scope="session")
def g29_rec(g29):
    return RecurrenceOracle(g29)


@pytest.fixture(scope="session")
def delta_qexp_1001():
    return QExpansionOracle(1001)


@pytest.fixture(scope="session")
def naive_tau():
    return naive_delta(230)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
