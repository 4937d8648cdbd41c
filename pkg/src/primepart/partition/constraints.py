"""Binary same-side / different-side constraints and a parity union-find.

Two clause shapes collapse to a binary relation:

* ``n = p**a + q**b`` gives the clause pair ``(p,1) v (q,2)`` and
  ``(q,1) v (p,2)``, which together force ``p`` and ``q`` onto one side.
* ``n - 1 = q1**a * q2**b`` gives ``(q1,2) v (q2,2)`` from ``1 + (n-1)``
  and ``(q1,1) v (q2,1)`` from ``(n-1) + 1``, forcing them apart.

When ``n - 1`` is a prime power those two clauses are opposite unit
clauses on one prime, so ``n`` is refuted outright.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, NamedTuple, Optional

from ..numtheory import factorize, is_prime_power
from .model import Decomposition, require_n

SAME = "same-side"
DIFFERENT = "different-side"


@dataclass(frozen=True)
class BinaryConstraint:
    kind: str
    p: int
    q: int
    provenance: tuple[Decomposition, ...]

    def __post_init__(self):
        if self.kind not in (SAME, DIFFERENT):
            raise ValueError(f"unknown constraint kind {self.kind!r}")
        if self.p == self.q:
            raise ValueError("a constraint needs two distinct primes")
        if self.p > self.q:
            p, q = self.q, self.p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)

    @property
    def parity(self) -> int:
        return 0 if self.kind == SAME else 1

    def holds(self, side) -> bool:
        return (side[self.p] != side[self.q]) == bool(self.parity)

    def __str__(self):
        via = ", ".join(map(str, self.provenance))
        return f"{self.kind}({self.p},{self.q}) via {via}"


class DerivedConstraints(NamedTuple):
    constraints: list[BinaryConstraint]
    immediately_unsat: bool


def derive_binary_constraints(n: int) -> DerivedConstraints:
    require_n(n)
    found = []
    for n1 in range(1, n // 2 + 1):
        n2 = n - n1
        a, b = is_prime_power(n1) if n1 > 1 else None, is_prime_power(n2)
        if a and b and a[0] != b[0]:
            pair = (Decomposition(n, n1, n2),)
            if n1 != n2:
                pair += (Decomposition(n, n2, n1),)
            found.append(BinaryConstraint(SAME, a[0], b[0], pair))
    outer = (Decomposition(n, 1, n - 1), Decomposition(n, n - 1, 1))
    primes = factorize(n - 1).primes
    if len(primes) == 2:
        found.append(BinaryConstraint(DIFFERENT, primes[0], primes[1], outer))
    return DerivedConstraints(found, len(primes) == 1)


class ParityUnionFind:
    """Disjoint sets where each member carries a parity relative to its root.

    ``union(a, b, parity)`` records ``side(a) xor side(b) == parity`` and
    returns False if that contradicts what is already known.
    """

    def __init__(self):
        self.parent: dict[Hashable, Hashable] = {}
        self.parity: dict[Hashable, int] = {}
        self.rank: dict[Hashable, int] = {}

    def add(self, x: Hashable) -> None:
        if x not in self.parent:
            self.parent[x] = x
            self.parity[x] = 0
            self.rank[x] = 0

    def find(self, x: Hashable) -> tuple[Hashable, int]:
        self.add(x)
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root = x
        # compress, accumulating parity from the top down
        acc = 0
        for node in reversed(path):
            acc ^= self.parity[node]
            self.parity[node] = acc
            self.parent[node] = root
        return root, (self.parity[path[0]] if path else 0)

    def relation(self, a: Hashable, b: Hashable) -> Optional[int]:
        """Parity between ``a`` and ``b`` if they share a class, else None."""
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        return pa ^ pb if ra == rb else None

    def union(self, a: Hashable, b: Hashable, parity: int) -> bool:
        ra, pa = self.find(a)
        rb, pb = self.find(b)
        if ra == rb:
            return pa ^ pb == parity
        if self.rank[ra] < self.rank[rb]:
            ra, rb, pa, pb = rb, ra, pb, pa
        self.parent[rb] = ra
        self.parity[rb] = pa ^ pb ^ parity
        if self.rank[ra] == self.rank[rb]:
            self.rank[ra] += 1
        return True
