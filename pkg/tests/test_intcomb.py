import pytest
from hypothesis import given, strategies as st

from qkgrass.intcomb import binomial, kittens_identity_residual


def test_small_values():
    assert binomial(4, 2) == 6
    assert binomial(5, 0) == 1
    assert binomial(0, 0) == 1
    assert binomial(3, 5) == 0
    assert binomial(3, -1) == 0
    assert binomial(-1, 2) == 1
    assert binomial(-2, 3) == -4


def test_negative_upper_reflection():
    # C(-x, k) = (-1)^k C(x+k-1, k)
    for x in range(0, 10):
        for k in range(0, 10):
            assert binomial(-x, k) == (-1) ** k * binomial(x + k - 1, k)


@given(st.integers(-20, 20), st.integers(0, 20))
def test_pascal(x, k):
    assert binomial(x, k) == binomial(x - 1, k) + binomial(x - 1, k - 1)


@given(st.integers(-15, 15), st.integers(-15, 15), st.integers(0, 12))
def test_inclusion_exclusion_residual_vanishes(n, m, k):
    assert kittens_identity_residual(n, m, k) == 0


def test_residual_rejects_negative_k():
    with pytest.raises(ValueError):
        kittens_identity_residual(3, 2, -1)
