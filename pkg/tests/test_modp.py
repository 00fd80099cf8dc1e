from itertools import product
from math import factorial

import pytest
from hypothesis import given, strategies as st

from pdgwebster.modp import (
    ConfigurationError,
    PrimeConfig,
    add,
    compositions,
    inv_mod,
    mul_inverse,
    multinomial,
    multinomial_exact,
    weighted_multinomial_vanishes,
)

SMALL_PRIMES = [2, 3, 5, 7]


def test_prime_config_rejects_composites():
    for bad in (0, 1, 4, 9, 15):
        with pytest.raises(ConfigurationError):
            PrimeConfig(bad)


def test_add_examples():
    F3, F2, F5 = PrimeConfig(3), PrimeConfig(2), PrimeConfig(5)
    assert add(F3(2), F3(2)) == F3(1)
    assert add(F2(1), F2(1)) == F2(0)
    for x in F5.elements():
        assert add(F5(0), x) == x


def test_mixed_primes_raise():
    with pytest.raises(ConfigurationError):
        PrimeConfig(3)(1) + PrimeConfig(5)(1)


def test_inverse_examples():
    assert mul_inverse(PrimeConfig(5)(2)) == 3
    assert mul_inverse(PrimeConfig(3)(2)) == 2
    F7 = PrimeConfig(7)
    for x in F7.elements()[1:]:
        assert mul_inverse(x) * x == F7(1)
    with pytest.raises(ZeroDivisionError):
        mul_inverse(F7(0))
    with pytest.raises(ZeroDivisionError):
        inv_mod(0, 7)


def test_canonical_residue():
    F5 = PrimeConfig(5)
    assert F5(-1).value == 4
    assert F5(17).value == 2


def test_multinomial_frozen_values():
    # exact values from math.factorial, reduced by hand
    assert multinomial_exact(3, [1, 2]) == 3
    assert multinomial_exact(5, [2, 3]) == 10
    assert multinomial(3, [1, 2], PrimeConfig(3)) == 0
    assert multinomial(5, [2, 3], PrimeConfig(5)) == 0
    for p in SMALL_PRIMES:
        assert multinomial(p, [p], PrimeConfig(p)) == 1
    with pytest.raises(ValueError):
        multinomial(4, [1, 2], PrimeConfig(3))


def test_weighted_multinomial_examples():
    assert weighted_multinomial_vanishes(3, [1, 2], 1, PrimeConfig(3))
    # 1 * 3! = 6 is divisible by 3
    assert weighted_multinomial_vanishes(3, [3], 0, PrimeConfig(3))
    assert weighted_multinomial_vanishes(5, [1, 1, 3], 2, PrimeConfig(5))
    with pytest.raises(IndexError):
        weighted_multinomial_vanishes(3, [1, 2], 2, PrimeConfig(3))


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_weighted_multinomial_exhaustive(p):
    cfg = PrimeConfig(p)
    for parts in compositions(p, p):
        if sum(1 for k in parts if k) < 2:
            continue
        for i, k in enumerate(parts):
            if k:
                assert weighted_multinomial_vanishes(p, parts, i, cfg)


@pytest.mark.parametrize("p", SMALL_PRIMES)
def test_field_axioms_exhaustive(p):
    F = PrimeConfig(p)
    els = F.elements()
    for a, b, c in product(els, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a in els:
        assert a + (-a) == 0
        if a:
            assert a * a.inverse() == 1


@given(st.sampled_from([11, 13, 101, 7919]), st.integers(), st.integers(), st.integers())
def test_field_axioms_random(p, x, y, z):
    F = PrimeConfig(p)
    a, b, c = F(x), F(y), F(z)
    assert a * (b + c) == a * b + a * c
    assert a - b == a + (-b)
    if b:
        assert (a / b) * b == a


def test_compositions_count():
    # C(total + length - 1, length - 1)
    assert len(list(compositions(3, 3))) == factorial(5) // (factorial(3) * factorial(2))
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(1, 0)) == []
