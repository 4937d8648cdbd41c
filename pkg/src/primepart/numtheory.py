"""Exact integer primitives: primes, factorization, radicals and CRT.

Everything here works on Python ints, so arbitrary precision comes for
free. Factorization is plain trial division; callers only ever factor
integers below the enumeration bound or products of known small primes.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt, prod
from typing import Iterable, Optional


@dataclass(frozen=True)
class Factorization:
    """``value`` written as a product of ``prime ** exponent`` pairs."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.value < 1:
            raise ValueError(f"factorization of non-positive value {self.value}")
        primes = [p for p, _ in self.factors]
        if any(a >= b for a, b in zip(primes, primes[1:])):
            raise ValueError("primes must be strictly increasing")
        if any(e < 1 for _, e in self.factors):
            raise ValueError("exponents must be >= 1")
        if self.reconstruct() != self.value:
            raise ValueError("factors do not multiply back to value")

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def reconstruct(self) -> int:
        return prod(p**e for p, e in self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


class InconsistentCongruences(ValueError):
    """Two different residues were given for the same modulus."""


@dataclass(frozen=True)
class CongruenceSystem:
    """Congruences ``x = residue (mod modulus)`` with prime moduli.

    Exact duplicates are dropped on construction; two different residues
    for one modulus raise :class:`InconsistentCongruences`.
    """

    congruences: tuple[tuple[int, int], ...]

    def __init__(self, congruences: Iterable[tuple[int, int]]):
        seen: dict[int, int] = {}
        for residue, modulus in congruences:
            if modulus < 1:
                raise ValueError(f"modulus must be positive, got {modulus}")
            residue %= modulus
            if modulus in seen:
                if seen[modulus] != residue:
                    raise InconsistentCongruences(
                        f"x = {seen[modulus]} and x = {residue} (mod {modulus})"
                    )
                continue
            seen[modulus] = residue
        object.__setattr__(
            self, "congruences", tuple((r, m) for m, r in sorted(seen.items()))
        )

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.congruences)

    def __len__(self):
        return len(self.congruences)


def primes_below(n: int) -> list[int]:
    """Sorted list of the primes strictly less than ``n`` (sieve)."""
    if n <= 2:
        return []
    sieve = bytearray(b"\x01") * n
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, n, p)))
    return [i for i in range(n) if sieve[i]]


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def factorize(m: int) -> Factorization:
    """Trial-division factorization of ``m >= 1``."""
    if m < 1:
        raise ValueError(f"cannot factorize {m}")
    factors = []
    rest = m
    f = 2
    while f * f <= rest:
        if rest % f == 0:
            e = 0
            while rest % f == 0:
                rest //= f
                e += 1
            factors.append((f, e))
        f += 1 if f == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Factorization(m, tuple(factors))


def prime_factors(m: int) -> tuple[int, ...]:
    return factorize(m).primes


def is_prime_power(m: int) -> Optional[tuple[int, int]]:
    """Return ``(q, l)`` with ``q**l == m`` if ``m`` is a prime power, else None."""
    if m < 1:
        raise ValueError(f"expected a positive integer, got {m}")
    factors = factorize(m).factors
    if len(factors) == 1:
        return factors[0]
    return None


def radical(m: int) -> int:
    """Product of the distinct primes dividing ``m``; ``radical(1) == 1``."""
    return prod(factorize(m).primes)


def crt_solve(system: CongruenceSystem) -> tuple[int, int]:
    """Least non-negative solution of ``system`` and the modulus product.

    Congruences are merged pairwise with the extended Euclidean inverse,
    so the product of the moduli may be arbitrarily large.
    """
    x, modulus = 0, 1
    for residue, m in system.congruences:
        if gcd(modulus, m) != 1:
            raise ValueError(f"modulus {m} is not coprime to the running product")
        # x + modulus * t = residue (mod m)
        t = (residue - x) * pow(modulus, -1, m) % m
        x += modulus * t
        modulus *= m
    return x % modulus, modulus
