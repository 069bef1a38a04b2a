import numpy as np
import pytest

from ddirac.lattice import BoundaryPolicy, LatticeBox


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def box4():
    return LatticeBox((4, 4, 4, 4))


@pytest.fixture
def zbox2():
    return LatticeBox((2, 2, 2, 2), BoundaryPolicy.ZERO_EXTEND)
