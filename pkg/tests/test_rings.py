import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringlab.errors import CapacityExceeded, InvalidConstruction
from ringlab.rings import (
    all_ideals,
    annihilator,
    check_ring_axioms,
    generated_ideal,
    ideal_product,
    ideal_sum,
    is_field,
    is_local,
    is_prime_ideal,
    is_reduced,
    is_spir,
    jacobson_radical,
    make_polyquot,
    make_product,
    make_zn,
    maximal_ideal,
    maximal_ideals,
    min_primes,
    nilradical,
    principal_ideal,
    quotient_ring,
    units,
)


def test_zn_table():
    R = make_zn(6)
    assert R.size == 6
    assert R.add(4, 5) == 3
    assert R.mul(4, 5) == 2
    assert R.neg(2) == 4
    assert R.one == 1
    check_ring_axioms(R)


def test_zn_rejects_bad_modulus():
    with pytest.raises(InvalidConstruction):
        make_zn(0)
    with pytest.raises(InvalidConstruction):
        make_zn(-3)


def test_units_z6():
    assert units(make_zn(6)) == frozenset({1, 5})


def test_units_field():
    R = make_zn(7)
    assert units(R) == frozenset(range(1, 7))
    assert is_field(R)


def test_product_ring():
    R = make_product(make_zn(2), make_zn(3))
    assert R.size == 6
    check_ring_axioms(R)
    # component arithmetic: (1,2)*(1,2) = (1,1)
    a = 1 * 3 + 2
    assert R.mul(a, a) == 1 * 3 + 1
    assert not is_local(R)
    assert is_reduced(R)


def test_polyquot_f4():
    Z2 = make_zn(2)
    F4 = make_polyquot(Z2, [1, 1, 1])  # t^2 + t + 1
    assert F4.size == 4
    check_ring_axioms(F4)
    assert is_field(F4)


def test_polyquot_dual_numbers():
    Z2 = make_zn(2)
    R = make_polyquot(Z2, [0, 0, 1])  # t^2
    assert R.size == 4
    assert not is_field(R)
    assert is_local(R)
    # t * t = 0: t has index 2 (coeff vector [0,1])
    assert R.mul(2, 2) == 0


def test_polyquot_requires_monic():
    Z4 = make_zn(4)
    with pytest.raises(InvalidConstruction):
        make_polyquot(Z4, [1, 0, 2])


def test_ideals_z6():
    R = make_zn(6)
    ideals = {I.members for I in all_ideals(R)}
    assert ideals == {
        frozenset({0}),
        frozenset({0, 3}),
        frozenset({0, 2, 4}),
        frozenset(range(6)),
    }


def test_principal_vs_generated():
    R = make_zn(12)
    assert principal_ideal(R, 8).members == frozenset({0, 4, 8})
    assert generated_ideal(R, [8, 6]).members == frozenset({0, 2, 4, 6, 8, 10})


def test_ideal_arithmetic_z12():
    R = make_zn(12)
    I4 = principal_ideal(R, 4)
    I6 = principal_ideal(R, 6)
    assert ideal_sum(R, I4, I6).members == frozenset({0, 2, 4, 6, 8, 10})
    assert ideal_product(R, I4, I6).members == frozenset({0})


def test_prime_and_maximal_z12():
    R = make_zn(12)
    primes = {I.members for I in all_ideals(R) if is_prime_ideal(R, I)}
    assert primes == {
        frozenset({0, 2, 4, 6, 8, 10}),
        frozenset({0, 3, 6, 9}),
    }
    assert {I.members for I in maximal_ideals(R)} == primes
    assert {I.members for I in min_primes(R)} == primes


def test_nilradical_and_jacobson():
    R = make_zn(12)
    assert nilradical(R).members == frozenset({0, 6})
    assert jacobson_radical(R).members == frozenset({0, 6})
    assert not is_reduced(R)
    assert is_reduced(make_zn(30))


def test_annihilator():
    R = make_zn(12)
    assert annihilator(R, 4).members == frozenset({0, 3, 6, 9})
    assert annihilator(R, 1).members == frozenset({0})


def test_local_and_spir():
    assert is_local(make_zn(8))
    assert maximal_ideal(make_zn(8)).members == frozenset({0, 2, 4, 6})
    assert not is_local(make_zn(6))
    assert is_spir(make_zn(8))
    assert is_spir(make_zn(9))
    assert not is_spir(make_zn(6))


def test_quotient_ring():
    R = make_zn(12)
    Q = quotient_ring(R, principal_ideal(R, 4))
    assert Q.size == 4
    check_ring_axioms(Q)
    # Z12 / (4) has the arithmetic of Z4
    assert Q.mul(Q.from_int(2), Q.from_int(2)) == Q.from_int(4)


def test_size_cap():
    with pytest.raises(CapacityExceeded):
        make_product(make_zn(100), make_zn(100))


@settings(max_examples=30, deadline=None)
@given(n=st.integers(min_value=2, max_value=40))
def test_zn_maximal_equals_min_primes(n):
    R = make_zn(n)
    assert {I.members for I in maximal_ideals(R)} == {
        I.members for I in min_primes(R)
    }


@settings(max_examples=30, deadline=None)
@given(n=st.integers(min_value=2, max_value=40))
def test_zn_unit_group_size_is_totient(n):
    R = make_zn(n)
    from math import gcd

    assert len(units(R)) == sum(1 for k in range(1, n) if gcd(k, n) == 1)
