import pytest

from ringlab.blockalg import (
    augmentation_power_dimensions,
    expected_dimension,
    make_block_algebra,
    verify_example25,
)
from ringlab.errors import InvalidQuery


def test_dimensions_match_closed_form():
    # dim = 1 + sum_i (2^(i+1) - 2) - (n - 1): one relation per identification
    assert expected_dimension(1) == 3
    assert expected_dimension(2) == 8
    for n in range(1, 6):
        A = make_block_algebra(n)
        assert A.dimension == expected_dimension(n)


def test_monomial_products():
    A = make_block_algebra(2)
    x21, x22 = A.var(2, 1), A.var(2, 2)
    # distinct variables in one block multiply to the joint monomial
    assert A.mul(x21, x22) == frozenset({(2, 0b011)})
    # squares vanish
    assert A.mul(x21, x21) == A.zero()
    # cross-block products vanish
    assert A.mul(A.var(1, 1), x21) == A.zero()
    # a full block product vanishes
    x23 = A.var(2, 3)
    assert A.mul(A.mul(x21, x22), x23) == A.zero()


def test_sigma_identification():
    A = make_block_algebra(2)
    # the stage identifies the symmetric elements of consecutive blocks
    assert A.reduce(A.sigma(1)) == A.reduce(A.sigma(2))


def test_units_and_inverse():
    A = make_block_algebra(2)
    u = A.add(A.one(), A.var(1, 1))
    assert A.is_unit(u)
    assert A.mul(u, A.inverse(u)) == A.one()
    assert not A.is_unit(A.var(1, 1))
    with pytest.raises(InvalidQuery):
        A.inverse(A.var(1, 1))


def test_augmentation_nilpotent():
    A = make_block_algebra(3)
    dims = augmentation_power_dimensions(A, A.n + 2)
    assert dims[-1] == 0
    assert all(a >= b for a, b in zip(dims, dims[1:]))


def test_verify_stages():
    for stage in (2, 3, 4):
        report = verify_example25(stage)
        assert report["pass"], report
        assert report["lengths"] == list(range(2, stage + 2))
        assert report["sigmas_equal"]
        assert report["products_equal"]
        assert report["factors_nonunit"]
        assert report["m_nilpotent"]


def test_stage_bounds():
    with pytest.raises(InvalidQuery):
        verify_example25(1)
    with pytest.raises(InvalidQuery):
        verify_example25(7)
