import pytest

from morsegps import molecule_params


@pytest.fixture(scope="session")
def h2():
    return molecule_params("H2")


@pytest.fixture(scope="session")
def lih():
    return molecule_params("LiH")


@pytest.fixture(scope="session")
def hcl():
    return molecule_params("HCl")


@pytest.fixture(scope="session")
def co():
    return molecule_params("CO")
