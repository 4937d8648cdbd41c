"""Erdos-Woods intervals ``[e1, e1 + w]``.

An interval qualifies when every interior ``k`` shares a prime with
``e1`` or with ``e2 = e1 + w``. Partitions of the primes below ``w`` and
qualifying intervals convert into each other: a partition picks a prime
``p_j`` for each offset ``j`` and the congruences ``e1 + j = 0 (mod p_j)``
are solved by CRT; an interval hands its endpoint primes back as sides.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import kernels
from .numtheory import CongruenceSystem, crt_solve, primes_below
from .partition import PrimePartition, verify_partition


@dataclass(frozen=True)
class EWInterval:
    e1: int
    w: int

    def __post_init__(self):
        if self.e1 < 2:
            raise ValueError(f"intervals need e1 >= 2, got {self.e1}")
        if self.w < 1:
            raise ValueError(f"intervals need w >= 1, got {self.w}")

    @property
    def e2(self) -> int:
        return self.e1 + self.w


@dataclass(frozen=True)
class PrimeSelection:
    """For each offset ``j`` in ``1..n-1``, the prime that will cover ``e1 + j``."""

    n: int
    choices: dict[int, int]
    sides: dict[int, int]

    def congruences(self) -> list[tuple[int, int]]:
        return [(-j, p) for j, p in sorted(self.choices.items())]


def verify_interval(interval: EWInterval) -> bool:
    return kernels.interval_ok(interval.e1, interval.w)


def select_primes(partition: PrimePartition) -> PrimeSelection:
    """Prefer the smallest side-1 prime dividing ``j``, else the smallest
    side-2 prime dividing ``n - j``."""
    n = partition.n
    choices, sides = {}, {}
    for j in range(1, n):
        p = next((p for p in partition.p1 if j % p == 0), None)
        side = 1
        if p is None:
            p = next((p for p in partition.p2 if (n - j) % p == 0), None)
            side = 2
        if p is None:
            raise ValueError(f"partition {partition} leaves {j} + {n - j} unsupported")
        choices[j], sides[j] = p, side
    return PrimeSelection(n, choices, sides)


def covering_system(partition: PrimePartition) -> CongruenceSystem:
    return CongruenceSystem(select_primes(partition).congruences())


def interval_from_partition(partition: PrimePartition) -> EWInterval:
    """Least ``e1 >= 2`` solving the covering congruences; ``w = n``."""
    x, modulus = crt_solve(covering_system(partition))
    if x < 2:
        x += modulus
    return EWInterval(x, partition.n)


def partition_from_interval(interval: EWInterval) -> PrimePartition:
    """Primes below ``w`` dividing ``e1`` go to side 1, those dividing only
    ``e2`` to side 2; primes dividing neither endpoint join side 1."""
    if interval.w < 4:
        raise ValueError(f"partitions need w >= 4, got {interval.w}")
    if not verify_interval(interval):
        raise ValueError(f"[{interval.e1}, {interval.e2}] is not an Erdos-Woods interval")
    e1, e2 = interval.e1, interval.e2
    primes = primes_below(interval.w)
    p2 = [p for p in primes if e2 % p == 0 and e1 % p]
    p1 = [p for p in primes if p not in p2]
    partition = PrimePartition(interval.w, tuple(p1), tuple(p2))
    if not verify_partition(partition):
        raise AssertionError(f"recovered partition {partition} fails verification")
    return partition


def min_interval_start(w: int, bound: int) -> Optional[int]:
    """Smallest ``e1`` in ``[2, bound]`` starting a qualifying interval of width ``w``."""
    if w < 1:
        raise ValueError(f"w must be >= 1, got {w}")
    if bound < 2:
        raise ValueError(f"bound must be >= 2, got {bound}")
    return kernels.min_interval_start(w, 2, bound)
