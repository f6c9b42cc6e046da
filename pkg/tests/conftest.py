import pytest

from hlnet.graph import build_crossed_cube_3, build_hypercube, build_random_hl


@pytest.fixture(scope="session")
def q3():
    return build_hypercube(3)


@pytest.fixture(scope="session")
def cq3():
    return build_crossed_cube_3()


@pytest.fixture(scope="session")
def q4():
    return build_hypercube(4)


@pytest.fixture(scope="session")
def hl4():
    return build_random_hl(4, 1)


@pytest.fixture(scope="session")
def small_hl(q3, cq3, q4, hl4):
    return {"Q3": q3, "CQ3": cq3, "Q4": q4, "HL4": hl4}
