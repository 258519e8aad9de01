"""Workload generation and wall-clock benchmarking of the two sorts."""

from __future__ import annotations

import csv
import gc
import random
import statistics
import time
from dataclasses import dataclass
from typing import IO, Iterable, Sequence

from .lattice import (
    BoundedLattice,
    DivisibilityLattice,
    FiniteLattice,
    OpCounter,
    PowersetLattice,
    TotalOrderLattice,
)
from .oracle import sort_spec
from .pascal import LITERAL, OPTIMIZED, sort_pascal

ALGORITHMS = ("spec", "pascal")
CSV_HEADER = ("algorithm", "lattice", "n", "rep", "wall_seconds", "meets", "joins", "mode")

DIV_RANGE = (1, 1000)
ORDER_RANGE = (-1000, 1000)


def random_sequence(lattice: BoundedLattice, n: int, rng: random.Random) -> list:
    """``n`` pseudo-random elements of ``lattice`` drawn with ``rng``."""
    if isinstance(lattice, DivisibilityLattice):
        return [rng.randint(*DIV_RANGE) for _ in range(n)]
    if isinstance(lattice, TotalOrderLattice):
        return [rng.randint(*ORDER_RANGE) for _ in range(n)]
    if isinstance(lattice, PowersetLattice):
        return [rng.getrandbits(lattice.universe) if lattice.universe else 0 for _ in range(n)]
    if isinstance(lattice, FiniteLattice):
        return [rng.choice(lattice.elements) for _ in range(n)]
    raise TypeError(f"no random generator for {lattice.name}")


def workload(lattice: BoundedLattice, n: int) -> list:
    """The sequence ``(1, ..., n)`` in ``lattice``.

    Finite lattices cycle through their elements in declaration order.
    """
    if isinstance(lattice, (DivisibilityLattice, TotalOrderLattice)):
        return list(range(1, n + 1))
    if isinstance(lattice, PowersetLattice):
        if n > lattice.top:
            raise ValueError(f"value {n} does not fit a {lattice.universe}-element universe")
        return list(range(1, n + 1))
    if isinstance(lattice, FiniteLattice):
        return [i % len(lattice) for i in range(n)]
    raise TypeError(f"no workload for {lattice.name}")


def run_sort(algorithm: str, lattice, x, mode: str = OPTIMIZED, counter: OpCounter | None = None):
    if algorithm == "spec":
        return sort_spec(lattice, x, counter)
    if algorithm == "pascal":
        return sort_pascal(lattice, x, mode=mode, counter=counter)
    raise ValueError(f"unknown algorithm {algorithm!r}")


@dataclass
class BenchRecord:
    algorithm: str
    lattice: str
    n: int
    rep: int
    wall_seconds: float
    meets: int | None = None
    joins: int | None = None
    mode: str = OPTIMIZED

    def row(self) -> list[str]:
        return [
            self.algorithm,
            self.lattice,
            str(self.n),
            str(self.rep),
            f"{self.wall_seconds:.6f}",
            "" if self.meets is None else str(self.meets),
            "" if self.joins is None else str(self.joins),
            self.mode,
        ]


def time_sort(
    algorithm: str,
    lattice: BoundedLattice,
    n: int,
    mode: str = OPTIMIZED,
    count: bool = False,
) -> tuple[float, OpCounter | None]:
    """Wall time of one sort of ``(1, ..., n)``.

    Input construction is not timed and garbage collection is paused while
    the sort runs.
    """
    x = workload(lattice, n)
    counter = OpCounter() if count else None
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        run_sort(algorithm, lattice, x, mode, counter)
        elapsed = time.perf_counter() - start
    finally:
        if gc_was_enabled:
            gc.enable()
    return elapsed, counter


def run_bench(
    algorithm: str,
    lattice: BoundedLattice,
    sizes: Iterable[int],
    reps: int = 1,
    mode: str = OPTIMIZED,
    count: bool = False,
    label: str | None = None,
) -> list[BenchRecord]:
    if algorithm == "spec":
        mode = LITERAL
    records = []
    for n in sizes:
        for rep in range(1, reps + 1):
            seconds, counter = time_sort(algorithm, lattice, n, mode, count)
            records.append(
                BenchRecord(
                    algorithm,
                    label or lattice.name,
                    n,
                    rep,
                    seconds,
                    counter.meets if counter else None,
                    counter.joins if counter else None,
                    mode,
                )
            )
    return records


def medians(records: Sequence[BenchRecord]) -> dict[int, float]:
    by_n: dict[int, list[float]] = {}
    for r in records:
        by_n.setdefault(r.n, []).append(r.wall_seconds)
    return {n: statistics.median(ts) for n, ts in by_n.items()}


def write_csv(records: Iterable[BenchRecord], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(r.row())
