import pytest
from hypothesis import HealthCheck, settings

from coxalg.coxring import embedding_ideal, load_case
from coxalg.cyclotomic import field

# every property runs on at least 100 instances
settings.register_profile(
    "coxalg",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("coxalg")


@pytest.fixture(scope="session")
def Q12():
    return field(12)


@pytest.fixture(scope="session")
def s3():
    return load_case("s3")


@pytest.fixture(scope="session")
def d8():
    return load_case("d8-wreath")


@pytest.fixture(scope="session")
def g4():
    return load_case("g4")


@pytest.fixture(scope="session")
def d8_kernel(d8):
    return embedding_ideal(d8)
