"""Finite continued fractions of rationals, continuants and convergents.

Rationals are ``fractions.Fraction`` values, which are always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Iterable, Sequence


@dataclass(frozen=True)
class FiniteCF:
    """Digits ``a_0, ..., a_N`` of a finite continued fraction.

    ``a_0`` is any integer, every later digit is at least 1. A trailing 1 is
    allowed (the long twin form) but never produced by :func:`rational_cf`.
    """

    digits: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(d) for d in self.digits)
        object.__setattr__(self, "digits", digits)
        if not digits:
            raise ValueError("a continued fraction needs at least one digit")
        if any(d < 1 for d in digits[1:]):
            raise ValueError(f"digits after the first must be >= 1: {digits}")

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    @property
    def is_canonical(self) -> bool:
        return len(self.digits) == 1 or self.digits[-1] >= 2

    def to_json(self) -> str:
        return json.dumps([str(d) for d in self.digits])

    @classmethod
    def from_json(cls, text: str) -> FiniteCF:
        return cls(tuple(int(d) for d in json.loads(text)))


@dataclass(frozen=True)
class ContinuantTable:
    """Values ``K_{-1}, K_0, ..., K_n`` for one digit sequence.

    ``values[m + 1]`` holds ``K_m``; use :meth:`k` to index by ``m``.
    """

    values: tuple[int, ...]

    def k(self, m: int) -> int:
        if m < -1 or m + 1 >= len(self.values):
            raise IndexError(f"K_{m} not in table of order {len(self.values) - 2}")
        return self.values[m + 1]

    @property
    def last(self) -> int:
        return self.values[-1]


def rational_cf(x) -> FiniteCF:
    """Canonical continued fraction of a rational ``x``.

    This is the floor/reciprocal iteration, which on ``num/den`` is the
    Euclidean algorithm with floor division (so ``-7/2`` gives ``[-4, 2]``).
    """
    x = Fraction(x)
    num, den = x.numerator, x.denominator
    digits = []
    while den:
        a, r = divmod(num, den)
        digits.append(a)
        num, den = den, r
    return FiniteCF(tuple(digits))


def alt_representation(cf: FiniteCF) -> FiniteCF:
    """Return the other of the two digit sequences with the same value."""
    d = cf.digits
    if len(d) >= 2 and d[-1] == 1:
        return FiniteCF(d[:-2] + (d[-2] + 1,))
    return FiniteCF(d[:-1] + (d[-1] - 1, 1))


def eval_cf(cf: FiniteCF | Sequence[int]) -> Fraction:
    digits = cf.digits if isinstance(cf, FiniteCF) else tuple(cf)
    value = Fraction(digits[-1])
    for a in reversed(digits[:-1]):
        value = a + 1 / value
    return value


def continuants(xs: Sequence[int]) -> ContinuantTable:
    values = [0, 1]
    for x in xs:
        values.append(values[-2] + x * values[-1])
    return ContinuantTable(tuple(values))


def convergents(cf: FiniteCF | Iterable[int], upto: int) -> list[Fraction]:
    """First ``upto`` convergents ``p_k/q_k`` of a finite CF or a digit stream.

    A finite CF shorter than ``upto`` just yields all of its convergents.
    """
    digits = cf.digits if isinstance(cf, FiniteCF) else cf
    p_prev, p = 0, 1
    q_prev, q = 1, 0
    out = []
    for a in islice(digits, upto):
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        out.append(Fraction(p, q))
    return out
