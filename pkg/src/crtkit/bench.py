"""Benchmark of the constructive CRT strategies on random prime-moduli systems.

Every trial draws ``r`` distinct random ``k``-bit primes (seeded, so runs
are reproducible), solves the system with each strategy, checks that all
answers agree, and records wall time plus the largest operand bit length
seen at each instrumented checkpoint.  Timing runs are uninstrumented; the
operand sizes come from a second, probed run.
"""
from __future__ import annotations

import csv
import random
import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, TextIO

from .crt import (
    CongruenceSystem,
    OperandProbe,
    raw_euler_constant_bits,
    solve_euler,
    solve_fold,
    solve_garner,
)
from .errors import InvalidInput, InvariantViolation
from .integer_core import is_prime

STRATEGIES: dict[str, Callable] = {
    "euler-totient": lambda s, probe=None: solve_euler(s, "totient", probe),
    "euler-extgcd": lambda s, probe=None: solve_euler(s, "extgcd", probe),
    "garner": lambda s, probe=None: solve_garner(s, probe=probe),
    "fold": lambda s, probe=None: solve_fold(s, probe),
}

# Garner's Horner recombination builds the answer itself (bounded by m);
# it is reported per checkpoint but not counted as an intermediate operand.
OUTPUT_CHECKPOINTS = ("recombine",)

CSV_COLUMNS = ("strategy", "r", "k", "trial", "time_ns", "max_bits")


@dataclass
class BenchRow:
    strategy: str
    r: int
    k: int
    trial: int
    time_ns: int
    max_bits: int
    checkpoint_bits: dict[str, int] = field(default_factory=dict)


@dataclass
class StrategySummary:
    strategy: str
    moduli_count: int
    moduli_bits: int
    trials: int
    median_time_ns: int
    max_bits: int
    checkpoint_bits: dict[str, int]
    raw_constant_bits: int | None = None

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        if self.raw_constant_bits is None:
            del out["raw_constant_bits"]
        return out


@dataclass
class BenchReport:
    rows: list[BenchRow]
    summaries: list[StrategySummary]

    def summary(self, strategy: str) -> StrategySummary:
        return next(s for s in self.summaries if s.strategy == strategy)


def random_prime(rng: random.Random, bits: int) -> int:
    while True:
        n = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_prime(n):
            return n


def random_system(rng: random.Random, r: int, k: int, max_attempts: int = 10_000) -> CongruenceSystem:
    """``r`` distinct random ``k``-bit primes with uniform residues."""
    primes: list[int] = []
    for _ in range(max_attempts):
        p = random_prime(rng, k)
        if p not in primes:
            primes.append(p)
            if len(primes) == r:
                break
    else:
        raise InvalidInput(f"could not find {r} distinct {k}-bit primes")
    return CongruenceSystem(tuple(primes), tuple(rng.randrange(p) for p in primes))


def check_params(r: int, k: int, trials: int) -> None:
    if r < 2:
        raise InvalidInput("moduli count must be >= 2")
    if k < 8:
        raise InvalidInput("moduli bits must be >= 8")
    if trials < 1:
        raise InvalidInput("trials must be >= 1")


def run_bench(r: int, k: int, trials: int, seed: int) -> BenchReport:
    check_params(r, k, trials)
    rng = random.Random(seed)
    systems = [random_system(rng, r, k) for _ in range(trials)]

    # warm-up: builds the trial-division prime table outside the timed region
    for solve in STRATEGIES.values():
        solve(systems[0])

    rows: list[BenchRow] = []
    raw_bits = 0
    for trial, s in enumerate(systems):
        answers = {}
        for name, solve in STRATEGIES.items():
            start = time.perf_counter_ns()
            sol = solve(s)
            elapsed = time.perf_counter_ns() - start
            probe = OperandProbe()
            probed = solve(s, probe)
            if probed != sol:
                raise InvariantViolation(f"{name} gave different answers with and without probe")
            answers[name] = sol.u
            rows.append(
                BenchRow(name, r, k, trial, elapsed, probe.overall(OUTPUT_CHECKPOINTS), dict(probe.max_bits))
            )
        if len(set(answers.values())) != 1:
            raise InvariantViolation(f"strategies disagree on trial {trial}: {answers}")
        raw_bits = max(raw_bits, max(raw_euler_constant_bits(s)))

    summaries = []
    for name in STRATEGIES:
        mine = [row for row in rows if row.strategy == name]
        checkpoints: dict[str, int] = {}
        for row in mine:
            for label, bits in row.checkpoint_bits.items():
                checkpoints[label] = max(checkpoints.get(label, 0), bits)
        summaries.append(
            StrategySummary(
                strategy=name,
                moduli_count=r,
                moduli_bits=k,
                trials=trials,
                median_time_ns=int(statistics.median(row.time_ns for row in mine)),
                max_bits=max(row.max_bits for row in mine),
                checkpoint_bits=dict(sorted(checkpoints.items())),
                raw_constant_bits=raw_bits if name == "euler-totient" else None,
            )
        )
    return BenchReport(rows, summaries)


def write_csv(report: BenchReport, stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in report.rows:
        writer.writerow([getattr(row, col) for col in CSV_COLUMNS])
