import pytest
from hypothesis import strategies as st

from bnbruhat import SignedPermutation, enumerate_bn


@st.composite
def windows(draw, min_n: int = 1, max_n: int = 6):
    """Strategy producing arbitrary elements of B_n for small n."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mags = draw(st.permutations(list(range(1, n + 1))))
    signs = draw(st.lists(st.booleans(), min_size=n, max_size=n))
    return SignedPermutation(tuple(m if s else -m for m, s in zip(mags, signs)))


@pytest.fixture(scope="session")
def b2():
    return list(enumerate_bn(2))


@pytest.fixture(scope="session")
def b3():
    return list(enumerate_bn(3))


@pytest.fixture(scope="session")
def b4():
    return list(enumerate_bn(4))
