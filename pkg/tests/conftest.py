import pytest

from wittcap import cap as capmod
from wittcap import golay as golaymod
from wittcap.veronese import build_model, veronese_map


@pytest.fixture(scope="session")
def model():
    return build_model()


@pytest.fixture(scope="session")
def base(model):
    return veronese_map((1, 0, 0))


@pytest.fixture(scope="session")
def cap(model, base):
    return capmod.build_cap(model, base)


@pytest.fixture(scope="session")
def design(cap):
    return capmod.blocks(cap)


@pytest.fixture(scope="session")
def dual_cap(model, base):
    return capmod.build_dual_cap(model, base)


@pytest.fixture(scope="session")
def code(model):
    return golaymod.generator_matrix(capmod.build_cap_from_formula(model))
