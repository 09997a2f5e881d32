import itertools
import json
from decimal import Decimal
from fractions import Fraction

import pytest

from quadcf.errors import InvariantViolation, SquareInputError
from quadcf.sqrtn import (
    SqrtCF,
    SqrtDecomposition,
    decompose,
    palindrome_check,
    period_length,
    reconstruct_N,
    sqrt_cf,
)


def decimal_sqrt_digits(N: int, count: int) -> list[int]:
    x = Decimal(N).sqrt()
    digits = []
    for _ in range(count):
        a = int(x.to_integral_value(rounding="ROUND_FLOOR"))
        digits.append(a)
        x = 1 / (x - a)
    return digits


def periodic_value(n: int, period: tuple[int, ...]) -> Decimal:
    repeats = max(40, 200 // len(period))
    digits = [n] + list(period) * repeats
    value = Decimal(digits[-1])
    for a in reversed(digits[:-1]):
        value = a + 1 / value
    return value


@pytest.mark.parametrize(
    "N, n, j", [(1726, 41, 45), (5, 2, 1), (8, 2, 4), (2, 1, 1), (10**40 + 1, 10**20, 1)]
)
def test_decompose_examples(N, n, j):
    assert decompose(N) == SqrtDecomposition(N, n, j)


def test_decompose_errors():
    with pytest.raises(SquareInputError):
        decompose(49)
    with pytest.raises(ValueError):
        decompose(1)
    with pytest.raises(ValueError):
        decompose(-3)


def test_decompose_is_bijection():
    seen = set()
    for N in range(2, 5000):
        try:
            d = decompose(N)
        except SquareInputError:
            continue
        assert d.N == d.n**2 + d.j and 1 <= d.j <= 2 * d.n
        seen.add((d.n, d.j))
    n_top = 69  # 70^2 = 4900 < 5000 so every n <= 69 is complete
    assert {(n, j) for n in range(1, n_top + 1) for j in range(1, 2 * n + 1)} <= seen


@pytest.mark.parametrize(
    "N, n, body",
    [(41, 6, (2, 2)), (13, 3, (1, 1, 1, 1)), (7, 2, (1, 1, 1)), (2, 1, ()), (23, 4, (1, 3, 1))],
)
def test_sqrt_cf_examples(N, n, body):
    cf = sqrt_cf(N)
    assert (cf.n, cf.body, cf.last) == (n, body, 2 * n)
    L = 1 + 3 * cf.period_length
    assert [cf.n] + list(cf.period) * 3 == decimal_sqrt_digits(N, L)


def test_sqrt_cf_square_input():
    with pytest.raises(SquareInputError):
        sqrt_cf(36)


def test_sqrt_cf_shape_assertion():
    with pytest.raises(InvariantViolation):
        SqrtCF(41, 6, (2, 2), 11)


def test_sqrt_cf_json():
    data = json.loads(sqrt_cf(41).to_json())
    assert data == {"N": "41", "n": "6", "j": "5", "body": ["2", "2"], "last": "12", "period_length": 3}
    assert SqrtCF.from_json(sqrt_cf(41).to_json()) == sqrt_cf(41)


@pytest.mark.parametrize(
    "body, expected",
    [((1, 2, 1), True), ((), True), ((3, 20, 1, 4, 1, 20, 3), True), ((1, 2), False)],
)
def test_palindrome_check(body, expected):
    assert palindrome_check(body) is expected


@pytest.mark.parametrize(
    "n, body, N", [(6, (2, 2), 41), (1, (), 2), (2, (1, 1, 1), 7), (3, (1, 1, 1, 1), 13)]
)
def test_reconstruct_examples(n, body, N):
    assert reconstruct_N(n, body) == Fraction(N)


def test_reconstruct_rejects_non_palindrome():
    with pytest.raises(ValueError):
        reconstruct_N(3, (1, 2))


def test_reconstruct_synthetic_palindromes_numerically():
    """sqrt(M) equals the periodic continued fraction, whether or not M is an integer."""
    non_integer = 0
    for n in range(1, 6):
        for half in itertools.chain.from_iterable(
            itertools.product(range(1, 5), repeat=k) for k in range(0, 3)
        ):
            for middle in ((), (1,), (3,)):
                body = half + middle + half[::-1]
                M = reconstruct_N(n, body)
                if M.denominator != 1:
                    non_integer += 1
                target = (Decimal(M.numerator) / M.denominator).sqrt()
                assert abs(periodic_value(n, body + (2 * n,)) - target) < Decimal("1e-40")
    assert non_integer > 0


@pytest.mark.parametrize("N, length", [(1726, 88), (2, 1), (32, 4), (41, 3)])
def test_period_length_examples(N, length):
    assert period_length(N) == length


def test_shape_and_round_trip_small():
    for N in range(2, 3000):
        if int(N**0.5) ** 2 == N:
            continue
        cf = sqrt_cf(N)
        assert palindrome_check(cf.body)
        assert reconstruct_N(cf.n, cf.body) == N
        assert cf.period_length <= 2 * N
