"""Prime partitions, ordered decompositions and the clauses they induce."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from ..numtheory import prime_factors, primes_below

SIDES = (1, 2)


class PartitionError(ValueError):
    """An integer or partition outside the domain of the definition."""


def require_n(n: int) -> None:
    if n < 4:
        raise PartitionError(f"prime partitions need n >= 4, got {n}")


@dataclass(frozen=True)
class PrimePartition:
    """Two-coloring of the primes below ``n``, stored with 2 on side 1.

    Construction canonicalizes: if 2 is given in ``p2`` the sides are
    swapped. The primes must cover ``primes_below(n)`` exactly and both
    sides must be nonempty.
    """

    n: int
    p1: tuple[int, ...]
    p2: tuple[int, ...]

    def __post_init__(self):
        require_n(self.n)
        p1, p2 = tuple(sorted(set(self.p1))), tuple(sorted(set(self.p2)))
        if 2 in p2:
            p1, p2 = p2, p1
        if set(p1) & set(p2):
            raise PartitionError(f"primes on both sides: {sorted(set(p1) & set(p2))}")
        if sorted(p1 + p2) != primes_below(self.n):
            raise PartitionError(f"sides do not cover exactly the primes below {self.n}")
        if not p1 or not p2:
            raise PartitionError("both sides must be nonempty")
        object.__setattr__(self, "p1", p1)
        object.__setattr__(self, "p2", p2)

    @classmethod
    def from_sides(cls, n: int, side: Mapping[int, int]) -> "PrimePartition":
        p1 = [p for p, s in side.items() if s == 1]
        p2 = [p for p, s in side.items() if s == 2]
        if len(p1) + len(p2) != len(side):
            raise PartitionError("side labels must be 1 or 2")
        return cls(n, tuple(p1), tuple(p2))

    @classmethod
    def from_mask(cls, n: int, ones: int) -> "PrimePartition":
        """Bit ``i`` of ``ones`` puts the ``i``-th prime below ``n`` on side 1."""
        primes = primes_below(n)
        p1 = tuple(p for i, p in enumerate(primes) if ones >> i & 1)
        p2 = tuple(p for i, p in enumerate(primes) if not ones >> i & 1)
        return cls(n, p1, p2)

    def side(self, p: int) -> int:
        if p in self.p1:
            return 1
        if p in self.p2:
            return 2
        raise KeyError(p)

    def side_vector(self) -> tuple[int, ...]:
        return tuple(self.side(p) for p in primes_below(self.n))

    def as_dict(self) -> dict[int, int]:
        return {p: self.side(p) for p in primes_below(self.n)}

    def __str__(self):
        fmt = lambda ps: "{" + ",".join(map(str, ps)) + "}"
        return f"{fmt(self.p1)}|{fmt(self.p2)}"


@dataclass(frozen=True, order=True)
class Decomposition:
    n: int
    n1: int
    n2: int

    def __post_init__(self):
        if self.n1 < 1 or self.n2 < 1 or self.n1 + self.n2 != self.n:
            raise PartitionError(f"bad decomposition {self.n1} + {self.n2} of {self.n}")

    def swapped(self) -> "Decomposition":
        return Decomposition(self.n, self.n2, self.n1)

    def __str__(self):
        return f"{self.n1}+{self.n2}"


@dataclass(frozen=True)
class Clause:
    """Disjunction of ``(prime, side)`` literals for one ordered decomposition."""

    decomposition: Decomposition
    literals: frozenset[tuple[int, int]]

    def satisfied_by(self, side: Mapping[int, int]) -> bool:
        return any(side[p] == s for p, s in self.literals)

    def primes(self) -> set[int]:
        return {p for p, _ in self.literals}


@lru_cache(maxsize=256)
def _factor_sets(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(prime_factors(m) if m > 1 else () for m in range(n))


def clause_of(d: Decomposition) -> Clause:
    factors = _factor_sets(d.n)
    literals = {(p, 1) for p in factors[d.n1]} | {(p, 2) for p in factors[d.n2]}
    return Clause(d, frozenset(literals))


def clauses_for(n: int) -> list[Clause]:
    """One clause per ordered decomposition ``n1 + n2 = n``, ``n1 = 1..n-1``."""
    require_n(n)
    return [clause_of(Decomposition(n, n1, n - n1)) for n1 in range(1, n)]


def clause_masks(n: int) -> list[tuple[int, int]]:
    """Clauses as ``(pos1, pos2)`` bitmasks indexed by ``primes_below(n)``."""
    index = {p: i for i, p in enumerate(primes_below(n))}
    masks = []
    for clause in clauses_for(n):
        pos1 = pos2 = 0
        for p, s in clause.literals:
            if s == 1:
                pos1 |= 1 << index[p]
            else:
                pos2 |= 1 << index[p]
        masks.append((pos1, pos2))
    return masks


def verify_partition(partition: PrimePartition) -> bool:
    """True iff every decomposition of ``partition.n`` is supported."""
    side = partition.as_dict()
    return all(c.satisfied_by(side) for c in clauses_for(partition.n))


def violated_clauses(n: int, side: Mapping[int, int]) -> list[Clause]:
    return [c for c in clauses_for(n) if not c.satisfied_by(side)]


def swap_labels(side: Mapping[int, int]) -> dict[int, int]:
    return {p: 3 - s for p, s in side.items()}


def partition_of(n: int, p1: Iterable[int]) -> PrimePartition:
    """Partition with ``p1`` on side 1 and every other prime below ``n`` on side 2."""
    p1 = tuple(sorted(set(p1)))
    return PrimePartition(n, p1, tuple(p for p in primes_below(n) if p not in p1))
