"""Witness pairs ``(n1, n2)`` with ``gcd(n1, n2) = d``.

A pair witnesses ``d`` when every split ``d = d1 + d2`` with positive
parts has ``gcd(n1, d1) != 1`` or ``gcd(n2, d2) != 1``. Integers are
Python ints throughout, so user-supplied witnesses may be arbitrarily
large; only primes below ``d`` are ever tested for divisibility, so
nothing here factors a witness.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, prod

from .numtheory import primes_below
from .partition import PrimePartition, verify_partition


class InvalidWitnessShape(ValueError):
    """``gcd(n1, n2)`` differs from the declared ``d``."""


class NotAWitness(ValueError):
    """An operation that needs a verified witness pair was given another."""


@dataclass(frozen=True)
class WitnessPair:
    d: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.d < 2:
            raise ValueError(f"witness pairs need d >= 2, got {self.d}")
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("witness integers must be positive")

    @property
    def k1(self) -> int:
        return self.n1 // self.d

    @property
    def k2(self) -> int:
        return self.n2 // self.d


def verify_witness(pair: WitnessPair) -> bool:
    d, n1, n2 = pair.d, pair.n1, pair.n2
    if gcd(n1, n2) != d:
        raise InvalidWitnessShape(f"gcd({n1}, {n2}) = {gcd(n1, n2)}, not {d}")
    return all(gcd(n1, d1) != 1 or gcd(n2, d - d1) != 1 for d1 in range(1, d))


def _require_witness(pair: WitnessPair) -> None:
    if not verify_witness(pair):
        raise NotAWitness(f"({pair.d}, {pair.n1}, {pair.n2}) is not a witness pair")


def witness_from_partition(partition: PrimePartition) -> WitnessPair:
    """``(d, d*k1, d*k2)`` with ``k_j`` the primes of side ``j`` not dividing ``d``."""
    if not verify_partition(partition):
        raise ValueError(f"partition {partition} does not satisfy n = {partition.n}")
    d = partition.n
    k1 = prod(p for p in partition.p1 if d % p)
    k2 = prod(p for p in partition.p2 if d % p)
    return WitnessPair(d, d * k1, d * k2)


def enrich_witness(pair: WitnessPair) -> WitnessPair:
    """Multiply every prime below ``d`` that divides neither side into ``n1``."""
    _require_witness(pair)
    missing = prod(p for p in primes_below(pair.d) if pair.n1 % p and pair.n2 % p)
    return WitnessPair(pair.d, pair.n1 * missing, pair.n2)


def partition_from_witness(pair: WitnessPair) -> PrimePartition:
    """Side 1 gets the primes of ``n1`` below ``d``, side 2 those of ``n2/d``.

    The pair is enriched first so every prime below ``d`` lands somewhere.
    """
    if pair.d < 4:
        raise ValueError(f"partitions need d >= 4, got {pair.d}")
    _require_witness(pair)
    rich = enrich_witness(pair)
    primes = primes_below(rich.d)
    p1 = [p for p in primes if rich.n1 % p == 0]
    p2 = [p for p in primes if rich.k2 % p == 0 and p not in p1]
    return PrimePartition(rich.d, tuple(p1), tuple(p2))


def complete_partner(d: int, n1: int) -> int:
    """``d`` times the product of the primes below ``d`` that do not divide ``n1``."""
    if d < 2:
        raise ValueError(f"d must be >= 2, got {d}")
    if n1 < 1 or n1 % d:
        raise ValueError(f"{d} does not divide {n1}")
    return d * prod(p for p in primes_below(d) if n1 % p)


def normalize_witness(pair: WitnessPair) -> WitnessPair:
    """Reduce each ``k_j`` to its distinct primes below ``d`` that do not divide ``d``."""
    _require_witness(pair)
    d = pair.d
    keep = [p for p in primes_below(d) if d % p]
    k1 = prod(p for p in keep if pair.k1 % p == 0)
    k2 = prod(p for p in keep if pair.k2 % p == 0)
    return WitnessPair(d, d * k1, d * k2)
