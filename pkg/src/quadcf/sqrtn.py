"""Square roots of integers: ``N = n^2 + j`` and the palindromic period."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from quadcf.core_cf import continuants
from quadcf.errors import InvariantViolation, SquareInputError
from quadcf.surd import QuadraticSurd, expand, isqrt


@dataclass(frozen=True)
class SqrtDecomposition:
    N: int
    n: int
    j: int


@dataclass(frozen=True)
class SqrtCF:
    """``sqrt(N) = [n; body..., last]`` with the bracketed part repeating.

    Construction checks the shape: ``last == 2n`` and every body digit >= 1.
    """

    N: int
    n: int
    body: tuple[int, ...]
    last: int

    def __post_init__(self):
        object.__setattr__(self, "body", tuple(self.body))
        if self.last != 2 * self.n:
            raise InvariantViolation(
                f"sqrt({self.N}): period ends in {self.last}, expected 2n = {2 * self.n}"
            )
        if any(a < 1 for a in self.body):
            raise InvariantViolation(f"sqrt({self.N}): non-positive digit in {self.body}")

    @property
    def j(self) -> int:
        return self.N - self.n * self.n

    @property
    def period(self) -> tuple[int, ...]:
        return self.body + (self.last,)

    @property
    def period_length(self) -> int:
        return len(self.body) + 1

    def to_dict(self) -> dict:
        return {
            "N": str(self.N),
            "n": str(self.n),
            "j": str(self.j),
            "body": [str(a) for a in self.body],
            "last": str(self.last),
            "period_length": self.period_length,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> SqrtCF:
        d = json.loads(text)
        return cls(int(d["N"]), int(d["n"]), tuple(int(a) for a in d["body"]), int(d["last"]))


def decompose(N: int) -> SqrtDecomposition:
    if N <= 1:
        raise ValueError(f"N must be at least 2, got {N}")
    n = isqrt(N)
    j = N - n * n
    if j == 0:
        raise SquareInputError(f"{N} is a perfect square")
    return SqrtDecomposition(N, n, j)


@lru_cache(maxsize=4096)
def sqrt_cf(N: int) -> SqrtCF:
    n = decompose(N).n
    cf = expand(QuadraticSurd(0, N, 1))
    if cf.preperiod != (n,):
        raise InvariantViolation(f"sqrt({N}): preperiod {cf.preperiod}, expected ({n},)")
    return SqrtCF(N, n, cf.period[:-1], cf.period[-1])


def palindrome_check(body: Sequence[int]) -> bool:
    body = tuple(body)
    return body == body[::-1]


def reconstruct_N(n: int, body: Sequence[int]) -> Fraction:
    """The rational ``M`` with ``sqrt(M) = [n; body..., 2n]`` (repeating).

    ``M = n^2 + (2n K_{r-1}(a_1..a_{r-1}) + K_{r-2}(a_2..a_{r-1})) / K_r(a_1..a_r)``.
    An empty body means the period is just ``2n``, so ``M = n^2 + 1``.
    """
    body = tuple(body)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if any(a < 1 for a in body):
        raise ValueError(f"body digits must be >= 1: {body}")
    if not palindrome_check(body):
        raise ValueError(f"body {body} is not a palindrome")
    r = len(body)
    if r == 0:
        return Fraction(n * n + 1)
    k_full = continuants(body).k(r)
    k_head = continuants(body[:-1]).k(r - 1)
    # for r == 1 the inner sequence a_2..a_{r-1} has "length -1": K_{-1} = 0
    k_inner = continuants(body[1:-1]).k(r - 2) if r >= 2 else 0
    return n * n + Fraction(2 * n * k_head + k_inner, k_full)


def period_length(N: int) -> int:
    return sqrt_cf(N).period_length
