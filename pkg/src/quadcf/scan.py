"""Range scans over N with theorem and conjecture predicates.

Reports are JSON lines: one ``config`` line, one ``record`` line per
non-square N, and a closing ``summary`` line. Only the summary carries a
timestamp, so two scans of the same range differ in that field alone.
"""

from __future__ import annotations

import json
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Callable, Iterable, Optional, TextIO

from quadcf.sqrtn import palindrome_check, reconstruct_N, sqrt_cf
from quadcf.surd import is_square

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class ScanRecord:
    N: int
    n: int
    j: int
    period_length: int
    body_max_digit: Optional[int]
    body: tuple[int, ...]
    period: Optional[tuple[int, ...]] = None

    def to_dict(self, checks: Optional[dict] = None) -> dict:
        d = {
            "type": "record",
            "N": str(self.N),
            "n": str(self.n),
            "j": str(self.j),
            "period_length": self.period_length,
            "body_max_digit": None if self.body_max_digit is None else str(self.body_max_digit),
        }
        if self.period is not None:
            d["period"] = [str(a) for a in self.period]
        if checks is not None:
            d["checks"] = checks
        return d


def make_record(N: int, emit_digits_max: int = 64) -> Optional[ScanRecord]:
    """Record for ``sqrt(N)``, or ``None`` for perfect squares."""
    if is_square(N):
        return None
    cf = sqrt_cf.__wrapped__(N)
    period = cf.period
    return ScanRecord(
        N=N,
        n=cf.n,
        j=cf.j,
        period_length=len(period),
        body_max_digit=max(cf.body) if cf.body else None,
        body=cf.body,
        period=period if len(period) <= emit_digits_max else None,
    )


def predicate_palindrome(rec: ScanRecord) -> str:
    return PASS if palindrome_check(rec.body) else FAIL


def predicate_period_le_2N(rec: ScanRecord) -> str:
    return PASS if rec.period_length <= 2 * rec.N else FAIL


def predicate_period_le_2n(rec: ScanRecord) -> str:
    return PASS if rec.period_length <= 2 * rec.n else FAIL


def predicate_body_bounded_by_n(rec: ScanRecord) -> str:
    if rec.body_max_digit is None:
        return PASS
    return PASS if rec.body_max_digit <= rec.n else FAIL


def predicate_no_odd_period_j3mod4(rec: ScanRecord) -> str:
    if rec.j % 4 != 3:
        return SKIP
    return PASS if rec.period_length % 2 == 0 else FAIL


def predicate_reconstruct(rec: ScanRecord) -> str:
    return PASS if reconstruct_N(rec.n, rec.body) == rec.N else FAIL


# name -> (predicate, is_theorem)
PREDICATES: dict[str, tuple[Callable[[ScanRecord], str], bool]] = {
    "palindrome": (predicate_palindrome, True),
    "reconstruct": (predicate_reconstruct, True),
    "period_le_2N": (predicate_period_le_2N, True),
    "period_le_2n": (predicate_period_le_2n, False),
    "body_bounded_by_n": (predicate_body_bounded_by_n, False),
    "no_odd_period_j3mod4": (predicate_no_odd_period_j3mod4, False),
}
THEOREM_CHECKS = tuple(k for k, (_, thm) in PREDICATES.items() if thm)
CONJECTURE_CHECKS = tuple(k for k, (_, thm) in PREDICATES.items() if not thm)


@dataclass(frozen=True)
class ScanConfig:
    N_min: int
    N_max: int
    checks: tuple[str, ...] = tuple(PREDICATES)
    out: Optional[str] = None
    emit_digits_max: int = 64
    jobs: int = 1
    strict: bool = False

    def __post_init__(self):
        if self.N_min < 2:
            raise ValueError(f"N_min must be >= 2, got {self.N_min}")
        if self.N_max < self.N_min:
            raise ValueError(f"empty range [{self.N_min}, {self.N_max}]")
        unknown = set(self.checks) - set(PREDICATES)
        if unknown:
            raise ValueError(f"unknown checks: {sorted(unknown)}")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")


@dataclass
class ScanReport:
    config: ScanConfig
    total: int = 0
    squares_skipped: int = 0
    counts: dict[str, Counter] = field(default_factory=dict)
    failures: dict[str, list[dict]] = field(default_factory=dict)
    max_period: Optional[dict] = None

    def __post_init__(self):
        for name in self.config.checks:
            self.counts.setdefault(name, Counter({PASS: 0, FAIL: 0, SKIP: 0}))
            self.failures.setdefault(name, [])

    def failed(self, names: Iterable[str]) -> bool:
        return any(self.counts[k][FAIL] for k in names if k in self.counts)

    @property
    def exit_status(self) -> int:
        if self.failed(THEOREM_CHECKS):
            return 1
        if self.config.strict and self.failed(CONJECTURE_CHECKS):
            return 1
        return 0

    def summary(self, timestamp: Optional[str] = None) -> dict:
        return {
            "type": "summary",
            "total": self.total,
            "squares_skipped": self.squares_skipped,
            "counts": {k: dict(v) for k, v in self.counts.items()},
            "failures": self.failures,
            "max_period": self.max_period,
            "exit_status": self.exit_status,
            "timestamp": timestamp,
        }

    def to_table(self) -> str:
        lines = [
            f"N in [{self.config.N_min}, {self.config.N_max}]: "
            f"{self.total - self.squares_skipped} non-square, {self.squares_skipped} squares skipped",
            f"{'check':<22} {'kind':<10} {'pass':>8} {'fail':>6} {'skip':>8}",
        ]
        for name in self.config.checks:
            c = self.counts[name]
            kind = "theorem" if PREDICATES[name][1] else "conjecture"
            lines.append(f"{name:<22} {kind:<10} {c[PASS]:>8} {c[FAIL]:>6} {c[SKIP]:>8}")
            for rec in self.failures[name][:20]:
                lines.append(f"    fails at N={rec['N']} (n={rec['n']}, period {rec['period_length']})")
            if len(self.failures[name]) > 20:
                lines.append(f"    ... {len(self.failures[name]) - 20} more")
        return "\n".join(lines)


def _scan_chunk(args: tuple[int, int, tuple[str, ...], int]) -> list[Optional[dict]]:
    lo, hi, checks, emit_max = args
    out: list[Optional[dict]] = []
    for N in range(lo, hi + 1):
        rec = make_record(N, emit_max)
        if rec is None:
            out.append(None)
            continue
        results = {name: PREDICATES[name][0](rec) for name in checks}
        out.append(rec.to_dict(results))
    return out


def _chunks(cfg: ScanConfig, size: int):
    for lo in range(cfg.N_min, cfg.N_max + 1, size):
        yield lo, min(lo + size - 1, cfg.N_max), cfg.checks, cfg.emit_digits_max


def run_scan(cfg: ScanConfig, stream: Optional[TextIO] = None, chunk_size: int = 2000) -> ScanReport:
    """Scan ``[N_min, N_max]``, writing JSON lines to ``cfg.out`` or ``stream``."""
    report = ScanReport(cfg)
    handle = open(cfg.out, "w") if cfg.out else stream
    try:
        if handle is not None:
            header = {
                "type": "config",
                "N_min": str(cfg.N_min),
                "N_max": str(cfg.N_max),
                "checks": list(cfg.checks),
                "emit_digits_max": cfg.emit_digits_max,
            }
            handle.write(json.dumps(header) + "\n")
        chunks = _chunks(cfg, chunk_size)
        if cfg.jobs > 1:
            with ProcessPoolExecutor(cfg.jobs) as pool:
                _merge(report, pool.map(_scan_chunk, chunks), handle)
        else:
            _merge(report, map(_scan_chunk, chunks), handle)
        if handle is not None:
            stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
            handle.write(json.dumps(report.summary(stamp)) + "\n")
    finally:
        if cfg.out and handle is not None:
            handle.close()
    return report


def _merge(report: ScanReport, results, handle) -> None:
    for chunk in results:
        for rec in chunk:
            report.total += 1
            if rec is None:
                report.squares_skipped += 1
                continue
            if report.max_period is None or rec["period_length"] > report.max_period["period_length"]:
                report.max_period = {"N": rec["N"], "period_length": rec["period_length"]}
            for name, outcome in rec["checks"].items():
                report.counts[name][outcome] += 1
                if outcome == FAIL:
                    report.failures[name].append(
                        {k: rec[k] for k in ("N", "n", "j", "period_length", "body_max_digit")}
                    )
            if handle is not None:
                handle.write(json.dumps(rec) + "\n")


def scan_records(N_min: int, N_max: int) -> Iterable[ScanRecord]:
    for N in range(N_min, N_max + 1):
        rec = make_record(N, emit_digits_max=0)
        if rec is not None:
            yield rec


def main_scan(cfg: ScanConfig) -> int:
    report = run_scan(cfg)
    print(report.to_table())
    if cfg.out:
        print(f"report written to {cfg.out}", file=sys.stderr)
    return report.exit_status
