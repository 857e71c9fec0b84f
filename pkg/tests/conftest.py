import pytest

from frobenius_fte import RingSpec


@pytest.fixture
def fermat():
    """F_2[x,y,z]/(x^3+y^3+z^3): a 2-dimensional Cohen-Macaulay, non F-pure ring."""
    return RingSpec.create(2, "x y z", ["x^3+y^3+z^3"], name="fermat")


@pytest.fixture
def noncm():
    """F_2[x,y]/(x^2, xy): embedded point at the origin, depth 0."""
    return RingSpec.create(2, "x y", ["x^2", "x*y"], name="noncm")


@pytest.fixture
def cross():
    """F_2[x,y]/(xy): the coordinate cross."""
    return RingSpec.create(2, "x y", ["x*y"], name="cross")


@pytest.fixture(params=[2, 3, 5])
def plane(request):
    return RingSpec.create(request.param, "x y", [], name=f"plane{request.param}")
