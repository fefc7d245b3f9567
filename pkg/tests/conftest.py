import pytest

from zdt import fixtures as fx


@pytest.fixture
def chain3():
    return fx.chain(3)


@pytest.fixture
def anti2():
    return fx.antichain(2)


@pytest.fixture
def vee():
    return fx.vee()


@pytest.fixture
def wedge():
    return fx.wedge()


@pytest.fixture
def diamond():
    return fx.diamond()


@pytest.fixture
def twin():
    return fx.twin()


@pytest.fixture
def fan3():
    return fx.fan3()


def all_posets(max_n, mode="up_to_iso"):
    from zdt import poset as ps

    for n in range(1, max_n + 1):
        yield from ps.enumerate_posets(n, mode)
