"""Exact checks of the classical rational-approximation properties of convergents.

Distances ``|x - p/q|`` to a surd ``x = (P + sqrt D)/Q`` are kept in the form
``(u + v sqrt D) / w`` with ``w > 0`` and compared by integer arithmetic only.
None of the checks below reuse the continued-fraction engine except to list
the convergents being tested.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Optional

from quadcf.core_cf import convergents
from quadcf.surd import QuadraticSurd, expand, floor_linear, floor_surd, normalize, sign_surd


@dataclass(frozen=True)
class ApproxWitness:
    """``|target - fraction| = (u + v sqrt D) / w`` with ``w > 0``.

    ``side`` is the sign of ``target - fraction``.
    """

    target: QuadraticSurd
    fraction: Fraction
    side: int
    u: int
    v: int
    w: int

    @classmethod
    def of(cls, x: QuadraticSurd, r) -> ApproxWitness:
        r = Fraction(r)
        u = x.P * r.denominator - r.numerator * x.Q
        v = r.denominator
        w = x.Q * r.denominator
        if w < 0:
            u, v, w = -u, -v, -w
        side = sign_surd(u, v, x.D)
        return cls(x, r, side, side * u, side * v, w)

    def to_dict(self) -> dict:
        return {
            "fraction": f"{self.fraction.numerator}/{self.fraction.denominator}",
            "side": self.side,
            "distance": [str(self.u), str(self.v), str(self.w)],
        }


def cmp_abs_distance(x: QuadraticSurd, a, b) -> int:
    """Sign of ``|x - a| - |x - b|``: -1 when ``a`` is strictly closer."""
    x = normalize(x)
    wa, wb = ApproxWitness.of(x, a), ApproxWitness.of(x, b)
    return sign_surd(wa.u * wb.w - wb.u * wa.w, wa.v * wb.w - wb.v * wa.w, x.D)


def cmp_distance_bound(x: QuadraticSurd, r, bound) -> int:
    """Sign of ``|x - r| - bound`` for a rational ``bound``."""
    wit = ApproxWitness.of(normalize(x), r)
    bound = Fraction(bound)
    c, d = bound.numerator, bound.denominator
    return sign_surd(d * wit.u - c * wit.w, d * wit.v, x.D)


def cmp_distance_side(x: QuadraticSurd, r) -> int:
    """Sign of ``x - r``."""
    return ApproxWitness.of(normalize(x), r).side


def _floor_times(x: QuadraticSurd, q: int) -> int:
    """``floor(q * x)``."""
    return floor_linear(q * x.P, q, x.D, x.Q)


def _convergent_list(x: QuadraticSurd, count: int) -> list[Fraction]:
    return convergents(expand(x).digits(), count)


@dataclass
class ApproxReport:
    check: str
    target: str
    checked: int = 0
    violations: list[dict] = field(default_factory=list)
    # zeroth convergents beaten by a_0 + 1; see check_best_approximation
    zeroth_exceptions: list[dict] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "target": self.target,
            "checked": self.checked,
            "violations": self.violations,
            "zeroth_exceptions": self.zeroth_exceptions,
            "runtime": round(self.runtime, 6),
        }


def closer_fraction_brute(x: QuadraticSurd, c: Fraction, q_max: int) -> Optional[Fraction]:
    """Some ``p/q != c`` with ``q <= q_max`` at least as close to ``x`` as ``c``.

    Only ``p`` within one of ``q*x`` can compete; farther ``p`` are worse.
    """
    for q in range(1, q_max + 1):
        fl = _floor_times(x, q)
        for p in range(fl - 1, fl + 3):
            f = Fraction(p, q)
            if f != c and cmp_abs_distance(x, c, f) >= 0:
                return f
    return None


def closer_fraction_search(x: QuadraticSurd, c: Fraction, q_max: int) -> Optional[Fraction]:
    """Same question as :func:`closer_fraction_brute`, by Stern-Brocot descent.

    The fractions strictly closer to ``x`` than ``c`` form an open interval
    around ``x``; the first mediant to land in it has the least denominator
    of any fraction inside. ``c`` is an endpoint and the other endpoint is
    irrational, so ties cannot occur.
    """

    def inside(f):
        return cmp_abs_distance(x, f, c) < 0

    fl = floor_surd(x)
    for p in range(fl - 1, fl + 3):
        if inside(Fraction(p)):
            return Fraction(p)
    # interval lies in (fl, fl + 1)
    a, b, cc, d = fl, 1, fl + 1, 1
    while b + d <= q_max:
        m = Fraction(a + cc, b + d)
        if inside(m):
            return m
        if cmp_distance_side(x, m) > 0:
            a, b = a + cc, b + d
        else:
            cc, d = a + cc, b + d
    return None


def check_best_approximation(
    x: QuadraticSurd, upto_index: int, brute_force_limit: int = 2000
) -> ApproxReport:
    """Every convergent ``p_n/q_n`` beats all other ``p/q`` with ``q <= q_n``.

    Exhaustive enumeration is used while ``q_n <= brute_force_limit``,
    Stern-Brocot search beyond. For ``n = 0`` the statement fails whenever
    ``x - a_0 > 1/2`` (then ``a_0 + 1`` is closer with the same denominator
    1); such cases go to ``zeroth_exceptions``, everything else that fails
    is a violation.
    """
    t0 = time.perf_counter()
    x = normalize(x)
    report = ApproxReport("best_approximation", str(x))
    for n, c in enumerate(_convergent_list(x, upto_index + 1)):
        q_n = c.denominator
        if q_n <= brute_force_limit:
            rival = closer_fraction_brute(x, c, q_n)
        else:
            rival = closer_fraction_search(x, c, q_n)
        report.checked += 1
        if rival is None:
            continue
        entry = {
            "n": n,
            "convergent": f"{c.numerator}/{c.denominator}",
            "rival": f"{rival.numerator}/{rival.denominator}",
        }
        if n == 0 and rival == c + 1 and cmp_distance_bound(x, c, Fraction(1, 2)) > 0:
            report.zeroth_exceptions.append(entry)
        else:
            report.violations.append(entry)
    report.runtime = time.perf_counter() - t0
    return report


def check_half_q_squared(x: QuadraticSurd, upto_index: int) -> ApproxReport:
    """For each ``n``, convergent ``n`` or ``n + 1`` lies within ``1/(2 q^2)``."""
    t0 = time.perf_counter()
    x = normalize(x)
    report = ApproxReport("half_q_squared", str(x))
    convs = _convergent_list(x, upto_index + 2)
    close = [cmp_distance_bound(x, c, Fraction(1, 2 * c.denominator**2)) < 0 for c in convs]
    for n in range(upto_index + 1):
        report.checked += 1
        if not (close[n] or close[n + 1]):
            report.violations.append(
                {"n": n, "pair": [str(convs[n]), str(convs[n + 1])]}
            )
    report.runtime = time.perf_counter() - t0
    return report


def check_legendre(x: QuadraticSurd, q_max: int) -> ApproxReport:
    """Every reduced ``p/q`` (``q <= q_max``) within ``1/(2q^2)`` is a convergent."""
    t0 = time.perf_counter()
    x = normalize(x)
    report = ApproxReport("legendre", str(x))
    stream = expand(x).digits()
    known: set[Fraction] = set()
    p_prev, p, q_prev, q = 0, 1, 1, 0
    # every convergent with denominator <= q_max, plus one beyond
    while q <= q_max:
        a = next(stream)
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
        known.add(Fraction(p, q))
    for q in range(1, q_max + 1):
        fl = _floor_times(x, q)
        # |qx - p| < 1/(2q) <= 1/2 leaves only floor(qx) and floor(qx) + 1
        for p in (fl, fl + 1):
            if gcd(p, q) != 1:
                continue
            f = Fraction(p, q)
            if cmp_distance_bound(x, f, Fraction(1, 2 * q * q)) < 0:
                report.checked += 1
                if f not in known:
                    report.violations.append({"fraction": f"{p}/{q}"})
    report.runtime = time.perf_counter() - t0
    return report
