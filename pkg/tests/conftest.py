import pytest

from camina.catalog import builtin


@pytest.fixture(scope="session")
def s3():
    return builtin("S3").group()


@pytest.fixture(scope="session")
def s4():
    return builtin("S4").group()


@pytest.fixture(scope="session")
def a4():
    return builtin("A4").group()


@pytest.fixture(scope="session")
def a5():
    return builtin("A5").group()


@pytest.fixture(scope="session")
def q8():
    return builtin("Q8").group()


@pytest.fixture(scope="session")
def frob21():
    return builtin("Frob(7:3)").group()


def subgroup_of_order(G, n, which=0):
    from camina.structure import subgroups

    matches = [H for H in subgroups(G) if len(H) == n]
    return matches[which]
