"""Deciding prime partitionability: propagating search and exhaustive oracle."""
from __future__ import annotations

from typing import Optional

from .. import kernels
from ..numtheory import primes_below
from .constraints import ParityUnionFind, derive_binary_constraints
from .model import PartitionError, PrimePartition, clause_masks, clauses_for, require_n

ORACLE_MAX_PRIMES = 26

SOLVER_CONFIG = {
    "search": "dpll",
    "seed": "parity-union-find",
    "variable_order": "primes-ascending",
    "canonical_side_of_2": 1,
}


class OracleBoundError(PartitionError):
    """The exhaustive oracle was asked for more primes than it allows."""


def solve(n: int) -> Optional[PrimePartition]:
    """A canonical partition witnessing ``n``, or None if none exists.

    Binary constraints seed a parity union-find; every prime is then
    replaced by its class root (flipping literal sides for odd parity) and
    a DPLL search with unit propagation runs over the class variables,
    branching on the classes of the smallest primes first. A prime above
    ``n/2`` occurs in only two clauses and is always forced once the small
    primes are fixed, so branching on it early only multiplies the tree.
    """
    require_n(n)
    derived = derive_binary_constraints(n)
    if derived.immediately_unsat:
        return None
    uf = ParityUnionFind()
    primes = primes_below(n)
    for p in primes:
        uf.add(p)
    for c in derived.constraints:
        if not uf.union(c.p, c.q, c.parity):
            return None

    where = {p: uf.find(p) for p in primes}
    least_member: dict[int, int] = {}
    for p in reversed(primes):
        least_member[where[p][0]] = p
    # the kernel branches on the highest index first: small primes go there
    roots = sorted(least_member, key=least_member.__getitem__, reverse=True)
    index = {root: i for i, root in enumerate(roots)}
    nvars = len(roots)

    masks = []
    for clause in clauses_for(n):
        pos1 = pos2 = 0
        for p, s in clause.literals:
            root, parity = where[p]
            bit = 1 << index[root]
            if (s == 1) != bool(parity):
                pos1 |= bit
            else:
                pos2 |= bit
        if pos1 & pos2:
            continue
        masks.append((pos1, pos2))

    root2, parity2 = where[2]
    assigned = 1 << index[root2]
    ones = 0 if parity2 else assigned

    # class assignment that would put every prime on side 1, if reachable
    forbidden = 0
    for root in roots:
        parities = {where[p][1] for p in primes if where[p][0] == root}
        if len(parities) == 2:
            forbidden = 1 << nvars
            break
        if parities == {0}:
            forbidden |= 1 << index[root]

    hit = kernels.dpll(nvars, masks, assigned, ones, forbidden)
    if hit is None:
        return None
    side = {}
    for p, (root, parity) in where.items():
        root_side = 1 if hit >> index[root] & 1 else 2
        side[p] = root_side if not parity else 3 - root_side
    return PrimePartition.from_sides(n, side)


def _side_rank(partition: PrimePartition) -> tuple[int, ...]:
    return tuple(-s for s in partition.side_vector())


def enumerate_partitions(n: int) -> list[PrimePartition]:
    """Every canonical satisfying partition, found by exhaustive enumeration.

    Ordered by side vector (over ascending primes) in descending
    lexicographic order, so partitions putting 3 on side 2 come first.
    """
    require_n(n)
    k = len(primes_below(n))
    if k > ORACLE_MAX_PRIMES:
        raise OracleBoundError(
            f"exhaustive oracle handles at most {ORACLE_MAX_PRIMES} primes; "
            f"{n} has {k} primes below it"
        )
    found = [PrimePartition.from_mask(n, ones) for ones in kernels.oracle_solutions(k, clause_masks(n))]
    return sorted(found, key=_side_rank)


def oracle_decides(n: int) -> bool:
    require_n(n)
    k = len(primes_below(n))
    if k > ORACLE_MAX_PRIMES:
        raise OracleBoundError(f"{n} exceeds the oracle cutoff of {ORACLE_MAX_PRIMES} primes")
    return bool(kernels.oracle_solutions(k, clause_masks(n), limit=1))


def is_prime_partitionable(n: int, oracle: bool = False) -> bool:
    if n < 4:
        return False
    if oracle:
        return oracle_decides(n)
    return solve(n) is not None


def enumerate_pp(limit: int, oracle: bool = False) -> list[int]:
    """Prime partitionable numbers in ``[4, limit]``, ascending."""
    return [n for n in range(4, limit + 1) if is_prime_partitionable(n, oracle=oracle)]
