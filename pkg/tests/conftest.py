"""Shared fixtures: seeded random generators and small solvable instances."""

import numpy as np
import pytest

from qtsqrt.input_layer import create_profile, gen_example1, gen_example2
from qtsqrt.models import CorrectionBlock, LaurentSymbol, QtMatrix


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def random_symbol(rng):
    def make(q=3, p=3, scale=1.0, nonnegative=False):
        draw = rng.random if nonnegative else rng.standard_normal
        return LaurentSymbol(neg=scale * draw(q), pos=scale * draw(p + 1))

    return make


@pytest.fixture
def random_qt(rng, random_symbol):
    def make(q=3, p=3, rows=4, cols=5, scale=1.0, threshold=0.0):
        symbol = random_symbol(q, p, scale)
        E = scale * rng.standard_normal((rows, cols)) if rows and cols else np.zeros((0, 0))
        return QtMatrix(symbol, CorrectionBlock(E), threshold)

    return make


@pytest.fixture(scope="module")
def small_profile():
    """Example-1 shaped instance: band 4/3, 6 x 6 random correction."""
    A = gen_example1(seed=7, band_neg=4, band_pos=3, corr_dim=6)
    return create_profile(A)


@pytest.fixture(scope="module")
def toeplitz_profile():
    """Example-1 shaped instance without correction."""
    A = gen_example1(seed=11, band_neg=3, band_pos=3, corr_dim=0)
    return create_profile(A)


@pytest.fixture(scope="module")
def block_profile():
    """Scaled-down Example-2 instance (p = 2)."""
    return create_profile(gen_example2(0.5, m=10, n=20, p=2, q=10, seed=3))
