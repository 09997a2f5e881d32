import itertools
import json
import math
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quadcf.core_cf import (
    FiniteCF,
    alt_representation,
    continuants,
    convergents,
    eval_cf,
    rational_cf,
)


def floor_reciprocal_digits(x: Fraction) -> list[int]:
    """Literal floor/reciprocal iteration, independent of divmod."""
    digits = []
    while True:
        a = math.floor(x)
        digits.append(a)
        if x == a:
            return digits
        x = 1 / (x - a)


def nested_value(digits) -> Fraction:
    if len(digits) == 1:
        return Fraction(digits[0])
    return digits[0] + 1 / nested_value(digits[1:])


def continuant_poly(xs) -> int:
    """K_n by the Euler rule: sum over deletions of adjacent pairs."""
    if not xs:
        return 1
    if len(xs) == 1:
        return xs[0]
    return xs[0] * continuant_poly(xs[1:]) + continuant_poly(xs[2:])


@pytest.mark.parametrize(
    "x, digits",
    [
        (Fraction(7), (7,)),
        (Fraction(415, 93), (4, 2, 6, 7)),
        (Fraction(-7, 2), (-4, 2)),
        (Fraction(0), (0,)),
        (Fraction(1, 3), (0, 3)),
    ],
)
def test_rational_cf_examples(x, digits):
    assert rational_cf(x).digits == digits
    assert list(digits) == floor_reciprocal_digits(x)


def test_round_trip_exhaustive():
    for num in range(-50, 51):
        for den in range(1, 51):
            x = Fraction(num, den)
            cf = rational_cf(x)
            assert eval_cf(cf) == x
            assert cf.is_canonical
            assert list(cf.digits) == floor_reciprocal_digits(x)


@pytest.mark.parametrize(
    "cf, alt",
    [
        ((4, 2, 6, 7), (4, 2, 6, 6, 1)),
        ((7,), (6, 1)),
        ((4, 2, 6, 6, 1), (4, 2, 6, 7)),
        ((3, 1), (4,)),
    ],
)
def test_alt_representation_examples(cf, alt):
    assert alt_representation(FiniteCF(cf)).digits == alt


def test_dual_representation_exhaustive():
    count = 0
    for length in range(1, 7):
        for tail in itertools.product(range(1, 10), repeat=length - 1):
            if tail and tail[-1] < 2:
                continue
            for a0 in (-2, 0, 3):
                cf = FiniteCF((a0,) + tail)
                twin = alt_representation(cf)
                assert eval_cf(twin) == eval_cf(cf)
                assert alt_representation(twin) == cf
                assert not twin.is_canonical
                count += 1
            if count > 20000:
                return


@pytest.mark.parametrize(
    "digits, value",
    [((4, 2, 6, 7), Fraction(415, 93)), ((9,), Fraction(9)), ((1, 1, 1, 1, 1), Fraction(8, 5))],
)
def test_eval_cf_examples(digits, value):
    assert eval_cf(FiniteCF(digits)) == value
    assert nested_value(digits) == value


def test_finite_cf_validation():
    with pytest.raises(ValueError):
        FiniteCF(())
    with pytest.raises(ValueError):
        FiniteCF((1, 0, 2))
    with pytest.raises(ValueError):
        FiniteCF((1, -2))


def test_finite_cf_json():
    cf = FiniteCF((4, 2, 6, 7))
    assert json.loads(cf.to_json()) == ["4", "2", "6", "7"]
    assert FiniteCF.from_json(cf.to_json()) == cf
    big = FiniteCF((10**40, 3))
    assert FiniteCF.from_json(big.to_json()) == big


def test_continuants_examples():
    assert continuants([]).values == (0, 1)
    table = continuants([2, 6, 7])
    assert table.values == (0, 1, 2, 13, 93)
    assert table.k(3) == 93 == continuant_poly([2, 6, 7])
    assert continuants([5]).k(1) == 5
    with pytest.raises(IndexError):
        table.k(4)


def test_continuant_symmetry_exhaustive_short():
    for length in range(0, 6):
        for xs in itertools.product(range(1, 6), repeat=length):
            assert continuants(xs).last == continuants(xs[::-1]).last


def test_continuant_symmetry_random_long():
    rng = random.Random(20240229)
    for _ in range(10_000):
        xs = [rng.randint(1, 5) for _ in range(rng.randint(0, 8))]
        assert continuants(xs).last == continuants(xs[::-1]).last == continuant_poly(xs)


def test_convergents_examples():
    golden = convergents(itertools.repeat(1), 5)
    assert golden == [Fraction(1), Fraction(2), Fraction(3, 2), Fraction(5, 3), Fraction(8, 5)]
    root2 = convergents(itertools.chain([1], itertools.repeat(2)), 4)
    assert root2 == [Fraction(1), Fraction(3, 2), Fraction(7, 5), Fraction(17, 12)]
    assert convergents(FiniteCF((4, 2, 6, 7)), 1) == [Fraction(4)]
    # asking past the end of a finite CF truncates
    assert len(convergents(FiniteCF((4, 2, 6, 7)), 10)) == 4


@given(st.integers(-20, 20), st.lists(st.integers(1, 30), max_size=12))
def test_convergents_match_prefixes_and_continuants(a0, tail):
    digits = [a0] + tail
    convs = convergents(digits, len(digits))
    for k, c in enumerate(convs):
        assert c == nested_value(digits[: k + 1])
        p = continuants(digits[: k + 1]).k(k + 1)
        q = continuants(digits[1 : k + 1]).k(k)
        assert c == Fraction(p, q)
        # the continuant quotient is already in lowest terms
        assert math.gcd(p, q) == 1 and q > 0
