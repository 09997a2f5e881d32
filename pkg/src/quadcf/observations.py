"""Closed-form period predictions for classes of ``(n, j)`` and their verification.

Each :class:`ClassRule` predicts the full period (including the final ``2n``)
of ``sqrt(n^2 + j)`` whenever its applicability test holds. Rules come in
three modes:

``iff``
    applicability holds exactly when the period has the rule's length.
``implies``
    applicability implies the predicted period.
``necessary``
    only the converse direction is claimed: every period of the rule's
    length has the stated form (checked by ``necessary_check``).
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Optional

from quadcf.sqrtn import SqrtCF, sqrt_cf
from quadcf.surd import isqrt

Digits = tuple[int, ...]


def _exact(num: int, den: int) -> Optional[int]:
    q, r = divmod(num, den)
    return q if r == 0 else None


@dataclass(frozen=True)
class ClassRule:
    name: str
    description: str
    applies: Callable[[int, int], bool]
    length: Callable[[int, int], int]
    digits: Optional[Callable[[int, int], Digits]] = None
    mode: str = "implies"
    necessary_check: Optional[Callable[[SqrtCF], bool]] = None

    def predict(self, n: int, j: int) -> tuple[int, Optional[Digits]]:
        d = self.digits(n, j) if self.digits else None
        return self.length(n, j), d


def _row(name, modulus, residue, k_min, j_of_n, length, body_of_n):
    """One line of the class table: ``n = modulus*k + residue`` with ``k >= k_min``.

    ``j_of_n`` returns ``(numerator, denominator)`` so applicability can
    require the division to be exact.
    """

    def applies(n, j):
        k, r = divmod(n - residue, modulus)
        if r or k < k_min:
            return False
        num, den = j_of_n(n)
        return _exact(num, den) == j

    def digits(n, j):
        return tuple(body_of_n(n)) + (2 * n,)

    desc = f"n = {modulus}k+{residue}" + (f", k >= {k_min}" if k_min else "")
    return ClassRule(name, desc, applies, lambda n, j: length, digits)


def _length3_form(cf: SqrtCF) -> bool:
    if len(cf.body) != 2 or cf.body[0] != cf.body[1]:
        return False
    x = cf.body[0]
    n, j = cf.n, cf.j
    return j % 2 == 1 and x % 2 == 0 and j * (x * x + 1) == 2 * x * n + 1


def _length3_x(n, j):
    """Even ``x >= 2`` with ``j (x^2 + 1) = 2xn + 1``, or ``None``."""
    if j % 2 == 0:
        return None
    # j x^2 - 2n x + (j - 1) = 0
    disc = n * n - j * (j - 1)
    if disc < 0:
        return None
    r = isqrt(disc)
    if r * r != disc:
        return None
    for num in (n + r, n - r):
        x, rem = divmod(num, j)
        if rem == 0 and x >= 2 and x % 2 == 0:
            return x
    return None


def _length3_applies(n, j):
    return _length3_x(n, j) is not None


def _length3_digits(n, j):
    x = _length3_x(n, j)
    if x is None:
        raise ValueError(f"no length-3 form for n={n}, j={j}")
    return (x, x, 2 * n)


def _j4_digits(n, j):
    if n % 2 == 0:
        return (n // 2, 2 * n)
    h = (n - 1) // 2
    return (h, 1, 1, h, 2 * n)


def _j2n3_digits(n, j):
    if n % 2 == 1:
        return (1, (n - 3) // 2, 1, 2 * n)
    h = n // 2 - 1
    return (1, h, 2, h, 1, 2 * n)


def rule_catalogue() -> list[ClassRule]:
    rules = [
        ClassRule(
            "period-1",
            "j = 1",
            lambda n, j: j == 1,
            lambda n, j: 1,
            lambda n, j: (2 * n,),
            mode="iff",
        ),
        ClassRule(
            "period-2",
            "j divides 2n",
            lambda n, j: (2 * n) % j == 0,
            lambda n, j: 2,
            lambda n, j: (2 * n // j, 2 * n),
            mode="iff",
        ),
        ClassRule(
            "period-3",
            "period length 3 forces j odd, body (x, x), x even, j = (2xn+1)/(x^2+1)",
            _length3_applies,
            lambda n, j: 3,
            _length3_digits,
            mode="necessary",
            necessary_check=_length3_form,
        ),
        ClassRule(
            "j=4",
            "j = 4; length 2 for even n, 5 for odd n",
            lambda n, j: j == 4,
            lambda n, j: 2 if n % 2 == 0 else 5,
            _j4_digits,
        ),
        ClassRule(
            "j=2n-1",
            "j = 2n - 1, n > 1",
            lambda n, j: n > 1 and j == 2 * n - 1,
            lambda n, j: 4,
            lambda n, j: (1, n - 1, 1, 2 * n),
        ),
        ClassRule(
            "j=2n-3",
            "j = 2n - 3, n > 3; length 4 for odd n, 6 for even n",
            lambda n, j: n > 3 and j == 2 * n - 3,
            lambda n, j: 4 if n % 2 == 1 else 6,
            _j2n3_digits,
        ),
    ]
    rules += [
        _row("row-01", 5, 1, 1, lambda n: (4 * n + 1, 5), 3, lambda n: (2, 2)),
        _row("row-02", 6, 5, 0, lambda n: (2 * n - 1, 3), 4, lambda n: (3, (n - 1) // 2, 3)),
        _row("row-03", 9, 4, 1, lambda n: (n - 2, 1), 4, lambda n: (2, (2 * n - 8) // 9, 2)),
        _row("row-04", 5, 4, 0, lambda n: (8 * n + 3, 5), 4, lambda n: (1, 3, 1)),
        _row("row-05", 3, 2, 0, lambda n: (5 * n + 2, 3), 4, lambda n: (1, 4, 1)),
        _row("row-06", 3, 2, 1, lambda n: (2 * n - 2, 1), 4, lambda n: (1, (2 * n - 4) // 3, 1)),
        _row("row-07", 3, 2, 0, lambda n: (4 * n + 1, 3), 4, lambda n: (1, 1, 1)),
        _row("row-08", 2, 1, 1, lambda n: (3 * n + 1, 2), 4, lambda n: (1, 2, 1)),
        _row("row-09", 5, 2, 1, lambda n: (n - 1, 1), 4, lambda n: (2, (2 * n - 4) // 5, 2)),
        _row("row-10", 6, 1, 1, lambda n: (5 * n + 1, 6), 4, lambda n: (2, 2, 2)),
        _row("row-11", 5, 3, 0, lambda n: (6 * n + 2, 5), 5, lambda n: (1, 1, 1, 1)),
        _row("row-12", 10, 7, 0, lambda n: (2 * n + 1, 5), 6,
             lambda n: (4, 1, (n - 3) // 2, 1, 4)),
        _row("row-13", 3, 1, 1, lambda n: (2 * n + 1, 3), 6, lambda n: (2, 1, n - 1, 1, 2)),
        _row("row-14", 3, 1, 1, lambda n: (n + 1, 1), 6,
             lambda n: (1, 1, (2 * n - 2) // 3, 1, 1)),
        _row("row-15", 7, 3, 1, lambda n: (n + 2, 1), 6,
             lambda n: (1, 1, (2 * n - 6) // 7, 1, 1)),
        _row("row-16", 6, 4, 0, lambda n: (7 * n + 2, 6), 6, lambda n: (1, 1, 2, 1, 1)),
        _row("row-17", 3, 1, 1, lambda n: (4 * n + 2, 3), 6, lambda n: (1, 2, n, 2, 1)),
        _row("row-18", 7, 5, 0, lambda n: (8 * n + 2, 7), 8, lambda n: (1, 1, 3, n, 3, 1, 1)),
        _row("row-19", 6, 2, 1, lambda n: (2 * n - 1, 3), 8,
             lambda n: (3, (n - 2) // 2, 1, 4, 1, (n - 2) // 2, 3)),
    ]
    return rules


def applicable_rules(n: int, j: int, rules: Optional[list[ClassRule]] = None) -> list[ClassRule]:
    if rules is None:
        rules = rule_catalogue()
    return [r for r in rules if r.applies(n, j)]


def fibonacci(count: int) -> list[int]:
    """``[F_-1, F_0, ..., F_{count-2}]`` with ``F_-1 = 0, F_0 = 1``."""
    fib = [0, 1]
    while len(fib) < count:
        fib.append(fib[-2] + fib[-1])
    return fib[:count]


def fib_at(m: int) -> int:
    return fibonacci(m + 2)[m + 1]


def fibonacci_ones_j(p: int, n: int) -> Optional[int]:
    """The ``j`` for which ``sqrt(n^2 + j) = [n; 1 (p times), 2n]``, if any.

    ``j = (2n F_{p-1} + F_{p-2}) / F_p``; none when ``3 | p + 1`` or the value
    is not an integer in ``[1, 2n]``.
    """
    if p < 1 or n < 1 or (p + 1) % 3 == 0:
        return None
    j = _exact(2 * n * fib_at(p - 1) + fib_at(p - 2), fib_at(p))
    if j is None or not 1 <= j <= 2 * n:
        return None
    return j


@dataclass
class Disagreement:
    rule: str
    n: int
    j: int
    predicted: Optional[Digits]
    observed: Digits
    reason: str

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "n": str(self.n),
            "j": str(self.j),
            "predicted": None if self.predicted is None else [str(a) for a in self.predicted],
            "observed": [str(a) for a in self.observed],
            "reason": self.reason,
        }


@dataclass
class VerificationReport:
    n_max: int
    cells: int = 0
    coverage: Counter = field(default_factory=Counter)
    agreements: Counter = field(default_factory=Counter)
    disagreements: list[Disagreement] = field(default_factory=list)
    # (rule, n, j) where the template has a digit < 1; logged, not compared
    invalid_templates: list[tuple[str, int, int]] = field(default_factory=list)
    non_primitive: list[tuple[str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def merge(self, other: VerificationReport) -> VerificationReport:
        self.cells += other.cells
        self.coverage.update(other.coverage)
        self.agreements.update(other.agreements)
        self.disagreements.extend(other.disagreements)
        self.invalid_templates.extend(other.invalid_templates)
        self.non_primitive.extend(other.non_primitive)
        return self

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "cells": self.cells,
            "coverage": dict(sorted(self.coverage.items())),
            "agreements": dict(sorted(self.agreements.items())),
            "disagreements": [d.to_dict() for d in self.disagreements],
            "invalid_templates": [
                {"rule": r, "n": str(n), "j": str(j)} for r, n, j in self.invalid_templates
            ],
            "non_primitive": [
                {"rule": r, "n": str(n), "j": str(j)} for r, n, j in self.non_primitive
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_table(self) -> str:
        names = sorted(set(self.coverage) | set(self.agreements))
        lines = [f"{'rule':<10} {'applicable':>10} {'agree':>7}", "-" * 29]
        for name in names:
            lines.append(f"{name:<10} {self.coverage[name]:>10} {self.agreements[name]:>7}")
        lines.append(f"cells checked: {self.cells}; disagreements: {len(self.disagreements)}")
        for d in self.disagreements:
            lines.append(
                f"  {d.rule} n={d.n} j={d.j}: predicted {d.predicted} observed {d.observed} ({d.reason})"
            )
        return "\n".join(lines)


def primitive_root(word: Digits) -> Digits:
    """Shortest ``w`` with ``word == w * k``."""
    size = len(word)
    for d in range(1, size + 1):
        if size % d == 0 and word[:d] * (size // d) == word:
            return word[:d]
    return word


def check_cell(cf: SqrtCF, rules: list[ClassRule], report: VerificationReport) -> None:
    """Compare every rule against the true expansion of one ``sqrt(n^2 + j)``."""
    n, j = cf.n, cf.j
    observed = cf.period
    report.cells += 1
    for rule in rules:
        applies = rule.applies(n, j)
        if rule.mode == "necessary":
            if len(observed) == rule.length(n, j):
                report.coverage[rule.name] += 1
                if rule.necessary_check(cf):
                    report.agreements[rule.name] += 1
                else:
                    report.disagreements.append(
                        Disagreement(rule.name, n, j, None, observed, "observed period lacks stated form")
                    )
            continue
        if rule.mode == "iff" and not applies and len(observed) == rule.length(n, j):
            report.disagreements.append(
                Disagreement(rule.name, n, j, None, observed, "length observed but rule not applicable")
            )
        if not applies:
            continue
        report.coverage[rule.name] += 1
        length, digits = rule.predict(n, j)
        if digits is not None:
            if any(a < 1 for a in digits):
                report.invalid_templates.append((rule.name, n, j))
                continue
            root = primitive_root(digits)
            if root != digits:
                # same continued fraction, but the printed period repeats a shorter word
                report.non_primitive.append((rule.name, n, j))
                digits, length = root, len(root)
        if length != len(observed):
            report.disagreements.append(Disagreement(rule.name, n, j, digits, observed, "length"))
        elif digits is not None and digits != observed:
            report.disagreements.append(Disagreement(rule.name, n, j, digits, observed, "digits"))
        else:
            report.agreements[rule.name] += 1


def verify_rules(n_max: int, rules: Optional[list[ClassRule]] = None) -> VerificationReport:
    """Check every catalogued rule on every ``(n, j)`` with ``n <= n_max``."""
    if rules is None:
        rules = rule_catalogue()
    report = VerificationReport(n_max)
    for n in range(1, n_max + 1):
        for j in range(1, 2 * n + 1):
            check_cell(sqrt_cf(n * n + j), rules, report)
    return report
