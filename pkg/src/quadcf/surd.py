"""Real quadratic irrationals ``(P + sqrt(D)) / Q`` and their periodic expansions.

Everything here is exact integer arithmetic. Signs of expressions
``u + v*sqrt(D)`` are decided by comparing squares, never by floats.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from enum import Enum
from itertools import chain, cycle, islice
from typing import Iterator

from quadcf.errors import (
    ComplexRootError,
    InvalidSurdError,
    IterationLimitError,
    NotPurelyPeriodicError,
    RationalRootError,
)

ITERATION_CAP_MIN = 10**6
ITERATION_CAP_PER_RADICAND = 4


def isqrt(m: int) -> int:
    """Largest ``t`` with ``t*t <= m``."""
    if m < 0:
        raise ValueError(f"isqrt of negative number {m}")
    t = math.isqrt(m)
    if not (t * t <= m < (t + 1) * (t + 1)):
        raise ArithmeticError(f"isqrt floor check failed for {m}")
    return t


def is_square(m: int) -> bool:
    return m >= 0 and isqrt(m) ** 2 == m


def sign_surd(u: int, v: int, D: int) -> int:
    """Sign of ``u + v*sqrt(D)`` for integers ``u, v`` and ``D >= 0``."""
    su = (u > 0) - (u < 0)
    sv = (v > 0) - (v < 0)
    if sv == 0 or D == 0:
        return su
    if su == 0 or su == sv:
        return sv
    # opposite signs: compare u^2 with v^2 D
    diff = u * u - v * v * D
    return su * ((diff > 0) - (diff < 0))


def floor_linear(u: int, v: int, D: int, w: int) -> int:
    """Exact ``floor((u + v*sqrt(D)) / w)`` for ``w != 0``."""
    if w < 0:
        u, v, w = -u, -v, -w
    # v*sqrt(D) = sign(v) * sqrt(v^2 D)
    r2 = v * v * D
    r = isqrt(r2)
    if v >= 0:
        return (u + r) // w
    if r * r == r2:
        return (u - r) // w
    # u - sqrt(r2) lies strictly between u - r - 1 and u - r
    return (u - r - 1) // w


@dataclass(frozen=True)
class QuadraticSurd:
    """The real number ``(P + sqrt(D)) / Q``.

    Construct through :func:`normalize` (or :meth:`make`) to get the
    canonical form with ``Q | D - P^2``.
    """

    P: int
    D: int
    Q: int

    @classmethod
    def make(cls, P: int, D: int, Q: int = 1) -> QuadraticSurd:
        return normalize(cls(P, D, Q))

    @property
    def is_canonical(self) -> bool:
        return self.Q != 0 and (self.D - self.P * self.P) % self.Q == 0

    @property
    def is_irrational(self) -> bool:
        return not is_square(self.D)

    def sign_minus(self, c: int) -> int:
        """Sign of ``self - c`` for an integer ``c``."""
        Qs = 1 if self.Q > 0 else -1
        return Qs * sign_surd(self.P - c * self.Q, 1, self.D)

    def decimal(self, digits: int = 50):
        from decimal import Decimal, localcontext

        with localcontext() as ctx:
            ctx.prec = digits + 10
            return (Decimal(self.P) + Decimal(self.D).sqrt()) / Decimal(self.Q)

    def __float__(self):
        return (self.P + math.sqrt(self.D)) / self.Q

    def __str__(self):
        return f"({self.P} + sqrt({self.D}))/{self.Q}"


@dataclass(frozen=True)
class QuadraticPolynomial:
    A: int
    B: int
    C: int

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C


class RootChoice(str, Enum):
    LARGER = "larger"
    SMALLER = "smaller"


@dataclass(frozen=True)
class PeriodicCF:
    """Eventually periodic expansion: ``preperiod`` then ``period`` repeated."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))

    @property
    def is_purely_periodic(self) -> bool:
        return not self.preperiod

    def digits(self) -> Iterator[int]:
        return chain(self.preperiod, cycle(self.period))

    def take(self, count: int) -> list[int]:
        return list(islice(self.digits(), count))

    def to_dict(self) -> dict:
        return {
            "preperiod": [str(a) for a in self.preperiod],
            "period": [str(a) for a in self.period],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> PeriodicCF:
        data = json.loads(text)
        return cls(
            tuple(int(a) for a in data["preperiod"]),
            tuple(int(a) for a in data["period"]),
        )


def normalize(s: QuadraticSurd) -> QuadraticSurd:
    """Scale ``s`` so that ``Q`` divides ``D - P^2``; value is unchanged."""
    P, D, Q = s.P, s.D, s.Q
    if Q == 0:
        raise InvalidSurdError(f"zero denominator in {s}")
    if D < 0:
        raise InvalidSurdError(f"negative radicand in {s}")
    if (D - P * P) % Q == 0:
        return s
    a = abs(Q)
    return QuadraticSurd(P * a, D * Q * Q, Q * a)


def from_polynomial(p: QuadraticPolynomial, root_choice="larger") -> QuadraticSurd:
    """Root of ``A x^2 + B x + C`` as a canonical surd."""
    if p.A == 0:
        raise ValueError("leading coefficient must be nonzero")
    disc = p.discriminant
    if disc <= 0:
        raise ComplexRootError(f"discriminant {disc} of {p} is not positive")
    if is_square(disc):
        raise RationalRootError(f"discriminant {disc} of {p} is a perfect square")
    larger = RootChoice(root_choice) is RootChoice.LARGER
    A, B = p.A, p.B
    if B % 2 == 0:
        # (-B +- sqrt(disc)) / 2A == (-B/2 +- sqrt(disc/4)) / A
        A, B, disc = A, B // 2, disc // 4
    else:
        A = 2 * A
    # both forms satisfy Q | D - P^2 already
    # (-B + sqrt(disc)) / A is the larger root exactly when A > 0
    if larger == (A > 0):
        return normalize(QuadraticSurd(-B, disc, A))
    return normalize(QuadraticSurd(B, disc, -A))


def conjugate(s: QuadraticSurd) -> QuadraticSurd:
    """``(P - sqrt(D)) / Q``, stored as ``(-P + sqrt(D)) / -Q``."""
    return normalize(QuadraticSurd(-s.P, s.D, -s.Q))


def floor_surd(s: QuadraticSurd) -> int:
    return floor_linear(s.P, 1, s.D, s.Q)


def cf_step(s: QuadraticSurd) -> tuple[int, QuadraticSurd]:
    """One floor/reciprocal step: ``a = floor(s)`` and ``1 / (s - a)``.

    With ``s = (P + sqrt D)/Q`` and ``P' = aQ - P`` the next state is
    ``(P' + sqrt D) / ((D - P'^2) / Q)``, already canonical.
    """
    a = floor_surd(s)
    P = a * s.Q - s.P
    Q, rem = divmod(s.D - P * P, s.Q)
    if rem:
        raise InvalidSurdError(f"cf_step needs a canonical surd, got {s}")
    return a, QuadraticSurd(P, s.D, Q)


def expand(s: QuadraticSurd) -> PeriodicCF:
    """Eventually periodic expansion of an irrational surd.

    The state ``(P, Q)`` at fixed ``D`` determines the whole tail, so the
    first repeated state splits preperiod from period, and both are minimal.
    """
    s = normalize(s)
    if not s.is_irrational:
        raise RationalRootError(f"{s} is rational; use rational_cf instead")
    cap = max(ITERATION_CAP_MIN, ITERATION_CAP_PER_RADICAND * s.D)
    seen: dict[tuple[int, int], int] = {}
    digits: list[int] = []
    P, D, Q = s.P, s.D, s.Q
    r = isqrt(D)
    # inlined cf_step; D is fixed and non-square throughout
    while (P, Q) not in seen:
        if len(digits) >= cap:
            raise IterationLimitError(f"no period found for {s} within {cap} steps")
        seen[(P, Q)] = len(digits)
        a = (P + r) // Q if Q > 0 else -((P + r) // -Q) - 1
        digits.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    start = seen[(P, Q)]
    return PeriodicCF(tuple(digits[:start]), tuple(digits[start:]))


def is_purely_periodic_by_criterion(s: QuadraticSurd) -> bool:
    """``s > 1`` and its conjugate lies in ``(-1, 0)``."""
    s = normalize(s)
    c = conjugate(s)
    return s.sign_minus(1) > 0 and c.sign_minus(0) < 0 and c.sign_minus(-1) > 0


def negative_reciprocal_conjugate(s: QuadraticSurd) -> QuadraticSurd:
    """``-1 / s'`` where ``s'`` is the conjugate of ``s``.

    ``-Q / (P - sqrt D) = (P + sqrt D) / ((D - P^2) / Q)``.
    """
    s = normalize(s)
    return QuadraticSurd(s.P, s.D, (s.D - s.P * s.P) // s.Q)


def reversal_pair(s: QuadraticSurd) -> tuple[PeriodicCF, PeriodicCF]:
    if not is_purely_periodic_by_criterion(s):
        raise NotPurelyPeriodicError(f"{s} does not have a purely periodic expansion")
    return expand(s), expand(negative_reciprocal_conjugate(s))
