"""Field tower construction and arithmetic."""

import pytest

from skewcode.errors import DegreeOverflow, DivisionByZero, NotPrime, ZeroHasNoLog
from skewcode.fields import (
    FieldTower,
    PrimeField,
    make_tower,
    poly_is_irreducible,
    smallest_irreducible,
    smallest_prime_power_at_least,
)
from skewcode.rng import CounterRng


def test_make_tower_f2():
    tw = make_tower(2, 1, 1)
    assert tw.q == 2
    assert tw.generator == 1


def test_make_tower_f49():
    tw = make_tower(7, 1, 2)
    assert tw.q0 == 7 and tw.q == 49
    # generator has full multiplicative order
    seen = set()
    x = 1
    for _ in range(48):
        seen.add(x)
        x = tw.mul(x, tw.generator)
    assert x == 1 and len(seen) == 48
    # the chosen quadratic modulus is the smallest irreducible one
    f7 = PrimeField(7)
    assert tw.ext.modulus == smallest_irreducible(f7, 2)


def test_gf8_modulus_is_x3_plus_x_plus_1():
    tw = make_tower(2, 3, 1)
    assert tw.base.modulus == (1, 1, 0, 1)


def test_field_axioms_random():
    for (p, k, m) in [(2, 1, 6), (3, 2, 2), (7, 1, 2)]:
        tw = make_tower(p, k, m)
        rng = CounterRng(p * 1000 + k * 10 + m)
        for _ in range(400):
            x, y, z = (tw.random_element(rng) for _ in range(3))
            assert tw.mul(x, tw.mul(y, z)) == tw.mul(tw.mul(x, y), z)
            assert tw.mul(x, tw.add(y, z)) == tw.add(tw.mul(x, y), tw.mul(x, z))
            assert tw.add(x, tw.neg(x)) == 0
            if x:
                assert tw.mul(x, tw.inv(x)) == 1


def test_inverse_and_pow():
    tw = make_tower(2, 2, 1)  # GF(4)
    w = tw.generator
    assert tw.mul(w, tw.pow(w, 2)) == 1
    assert tw.pow(tw.generator, tw.q - 1) == 1
    with pytest.raises(DivisionByZero):
        tw.inv(0)


def test_frobenius_properties():
    tw = make_tower(7, 1, 2)
    rng = CounterRng(11)
    for _ in range(200):
        x, y = tw.random_element(rng), tw.random_element(rng)
        assert tw.frobenius(x, 0) == x
        assert tw.frobenius(x, tw.m) == x
        s = tw.frobenius
        assert s(tw.mul(x, y), 1) == tw.mul(s(x, 1), s(y, 1))
        assert s(tw.add(x, y), 1) == tw.add(s(x, 1), s(y, 1))
    assert tw.frobenius(tw.generator, 1) == tw.pow(tw.generator, 7)


def test_flatten_lift_roundtrip():
    tw = make_tower(3, 1, 4)
    rng = CounterRng(5)
    assert tw.flatten(0) == (0, 0, 0, 0)
    for _ in range(100):
        x = tw.random_element(rng)
        assert tw.lift(tw.flatten(x)) == x
        c = rng.randbelow(3)
        # flatten is linear over the base field
        scaled = tw.mul(tw.embed(c), x)
        assert tw.flatten(scaled) == tuple(
            tw.base.mul(c, d) for d in tw.flatten(x)
        )


def test_dlog():
    tw = make_tower(7, 1, 2)
    assert tw.dlog(1) == 0
    assert tw.dlog(tw.generator) == 1
    assert (
        tw.dlog(tw.mul(tw.pow(tw.generator, 5), tw.pow(tw.generator, 7))) == 12
    )
    with pytest.raises(ZeroHasNoLog):
        tw.dlog(0)


def test_tower_validation():
    with pytest.raises(NotPrime):
        make_tower(6, 1, 1)
    with pytest.raises(DegreeOverflow):
        make_tower(2, 1, 40)


def test_irreducibility_oracle():
    f2 = PrimeField(2)
    assert poly_is_irreducible(f2, [1, 1, 0, 1])  # x^3 + x + 1
    assert not poly_is_irreducible(f2, [1, 0, 0, 1])  # x^3 + 1 = (x+1)(...)


def test_smallest_prime_power():
    assert smallest_prime_power_at_least(6) == (7, 7, 1)
    assert smallest_prime_power_at_least(4) == (4, 2, 2)
    assert smallest_prime_power_at_least(2) == (2, 2, 1)


def test_tower_json_roundtrip():
    tw = make_tower(7, 1, 2)
    obj = tw.to_json()
    assert FieldTower.from_json(obj) is tw
