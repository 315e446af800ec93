import pytest
from hypothesis import HealthCheck, settings

from hennings.files import shipped_algebra, shipped_algebra_paths
from hennings.integral import check_unimodular, right_integral

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

ALGEBRAS = sorted(shipped_algebra_paths())
GROUP_ALGEBRAS = [a for a in ALGEBRAS if a.startswith("zn")]


def _normalisable(name):
    from hennings.invariant import normalization_data

    H = shipped_algebra(name)
    if not check_unimodular(H).ok:
        return False
    a, b = normalization_data(H, right_integral(H))
    return not a.is_zero() and not b.is_zero()


INVARIANT_ALGEBRAS = [a for a in ALGEBRAS if _normalisable(a)]


@pytest.fixture(scope="session")
def uq():
    return shipped_algebra("uq_sl2_i")


@pytest.fixture(scope="session")
def sweedler():
    return shipped_algebra("sweedler")


@pytest.fixture(scope="session")
def zn2():
    return shipped_algebra("zn2")


@pytest.fixture(params=ALGEBRAS, scope="session")
def algebra(request):
    H = shipped_algebra(request.param)
    return H, right_integral(H)


@pytest.fixture(params=INVARIANT_ALGEBRAS, scope="session")
def inv_algebra(request):
    H = shipped_algebra(request.param)
    return H, right_integral(H)
