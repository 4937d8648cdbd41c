"""Pure-Python versions of the hot loops.

Clauses are ``(pos1, pos2)`` bitmask pairs over variables ``0..nvars-1``.
Bit ``i`` of an assignment mask ``ones`` is set when variable ``i`` sits on
side 1. A clause holds iff ``pos1 & ones`` or ``pos2 & ~ones`` is nonzero.
"""
from __future__ import annotations

from math import gcd
from typing import Optional, Sequence

Clauses = Sequence[tuple[int, int]]

BACKEND = "python"


def oracle_solutions(nvars: int, clauses: Clauses, limit: int = 0) -> list[int]:
    """All satisfying masks with bit 0 set, excluding the all-ones mask.

    Masks are produced in increasing numeric order. ``limit > 0`` stops
    after that many hits.
    """
    if nvars < 1:
        return []
    full = (1 << nvars) - 1
    found = []
    for rest in range(1 << (nvars - 1)):
        ones = (rest << 1) | 1
        if ones == full:
            continue
        off = full ^ ones
        for pos1, pos2 in clauses:
            if not (pos1 & ones or pos2 & off):
                break
        else:
            found.append(ones)
            if limit and len(found) >= limit:
                break
    return found


def _propagate(clauses: Clauses, assigned: int, ones: int):
    changed = True
    while changed:
        changed = False
        for pos1, pos2 in clauses:
            if pos1 & assigned & ones or pos2 & assigned & ~ones:
                continue
            free = (pos1 | pos2) & ~assigned
            if not free:
                return None
            if free & (free - 1) == 0:
                assigned |= free
                if free & pos1:
                    ones |= free
                changed = True
    return assigned, ones


def dpll(
    nvars: int, clauses: Clauses, assigned: int, ones: int, forbidden: int
) -> Optional[int]:
    """Complete a partial assignment so every clause holds.

    Branches on the highest unassigned variable, side 1 first. A complete
    assignment equal to ``forbidden`` is rejected. Returns the ``ones``
    mask or None.
    """
    # a variable on both sides makes the clause a tautology, and keeping it
    # would let propagation treat the clause as a unit
    live = [(a, b) for a, b in clauses if not a & b]
    return _search(nvars, live, assigned, ones, forbidden)


def _search(nvars: int, clauses: Clauses, assigned: int, ones: int, forbidden: int) -> Optional[int]:
    full = (1 << nvars) - 1
    state = _propagate(clauses, assigned, ones & assigned)
    if state is None:
        return None
    assigned, ones = state
    if assigned == full:
        return None if ones == forbidden else ones
    var = (full & ~assigned).bit_length() - 1
    bit = 1 << var
    for value in (bit, 0):
        hit = _search(nvars, clauses, assigned | bit, ones | value, forbidden)
        if hit is not None:
            return hit
    return None


def interval_ok(e1: int, w: int) -> bool:
    e2 = e1 + w
    for k in range(e1 + 1, e2):
        if gcd(k, e1) == 1 and gcd(k, e2) == 1:
            return False
    return True


def min_interval_start(w: int, lo: int, hi: int) -> Optional[int]:
    """Smallest ``e1`` in ``[lo, hi]`` whose width-``w`` interval is covered."""
    for e1 in range(lo, hi + 1):
        if interval_ok(e1, w):
            return e1
    return None
