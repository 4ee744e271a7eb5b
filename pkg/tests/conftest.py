import pytest

from matroidkit import (
    Matroid,
    complete_graph,
    graphic_matroid,
    specific_matroid,
    uniform_matroid,
)


@pytest.fixture(scope="session")
def running_example() -> Matroid:
    """Rank-2 matroid on {a,b,c,d} with bases {0,1} and {0,2}."""
    return Matroid(4, [[0, 1], [0, 2]], labels=["a", "b", "c", "d"])


@pytest.fixture(scope="session")
def m5() -> Matroid:
    return graphic_matroid(complete_graph(5))


@pytest.fixture(scope="session")
def m4() -> Matroid:
    return graphic_matroid(complete_graph(4))


@pytest.fixture(scope="session")
def fano() -> Matroid:
    return specific_matroid("fano")


@pytest.fixture(scope="session")
def vamos() -> Matroid:
    return specific_matroid("vamos")


@pytest.fixture(scope="session")
def u24() -> Matroid:
    return uniform_matroid(2, 4)
