"""Human-readable refutations built from binary and unit reasoning.

Propagation keeps a parity union-find over the primes plus an anchor node
standing for side 1. Every accepted relation becomes an edge in an
explanation forest labelled with the step that produced it. Clause pairs
``n1 + n2`` / ``n2 + n1`` are re-simplified modulo the known classes until
nothing changes; once a relation closes an odd cycle (or a clause loses
every literal) the steps on that cycle, together with everything they
leaned on, form the chain.

Propagation is not complete: many non-partitionable ``n`` survive it, and
``contradiction_chain`` then returns None.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Optional, Sequence

from ..numtheory import primes_below
from .constraints import DIFFERENT, SAME, ParityUnionFind, derive_binary_constraints
from .model import Clause, Decomposition, PartitionError, clause_of, require_n

FORCED_1 = "forced-side-1"
FORCED_2 = "forced-side-2"
FALSIFIED = "clause-falsified"
STEP_KINDS = (SAME, DIFFERENT, FORCED_1, FORCED_2, FALSIFIED)

ANCHOR = 1  # not a prime; fixed on side 1


@dataclass(frozen=True)
class ChainStep:
    """One derivation step.

    ``same-side`` puts all of ``primes`` on one side, ``different-side``
    splits its two primes, ``forced-side-s`` pins ``primes`` to side ``s``
    and ``clause-falsified`` reports that the clause of ``decomposition``
    has no literal left.
    """

    kind: str
    primes: tuple[int, ...]
    decomposition: Decomposition

    def __post_init__(self):
        if self.kind not in STEP_KINDS:
            raise ValueError(f"unknown step kind {self.kind!r}")
        if self.kind == DIFFERENT and len(self.primes) != 2:
            raise ValueError("different-side steps relate exactly two primes")

    def describe(self) -> str:
        d = self.decomposition
        ps = ", ".join(map(str, self.primes))
        if self.kind == SAME:
            return f"{d.n} = {d.n1} + {d.n2} puts {ps} on the same side"
        if self.kind == DIFFERENT:
            return f"{d.n} = {d.n1} + {d.n2} puts {ps} on different sides"
        if self.kind == FALSIFIED:
            return f"{d.n} = {d.n1} + {d.n2} has no supporting prime left ({ps})"
        side = 1 if self.kind == FORCED_1 else 2
        return f"{d.n} = {d.n1} + {d.n2} forces {ps} onto side {side}"

    def key(self) -> tuple:
        return (self.kind, tuple(sorted(self.primes)), self.decomposition)


class _Conflict(Exception):
    def __init__(self, steps: set[int]):
        self.steps = steps


class _Refuter:
    def __init__(self, n: int):
        self.n = n
        self.uf = ParityUnionFind()
        self.uf.add(ANCHOR)
        for p in primes_below(n):
            self.uf.add(p)
        self.steps: list[ChainStep] = []
        self.deps: list[set[int]] = []
        self.forest: dict[int, list[tuple[int, int]]] = {}

    # explanation forest -------------------------------------------------

    def _path(self, a: int, b: int) -> set[int]:
        if a == b:
            return set()
        prev: dict[int, tuple[int, int]] = {a: (a, -1)}
        queue = deque([a])
        while queue:
            x = queue.popleft()
            if x == b:
                break
            for y, step in self.forest.get(x, ()):
                if y not in prev:
                    prev[y] = (x, step)
                    queue.append(y)
        used = set()
        while b != a:
            b, step = prev[b]
            used.add(step)
        return used

    def _relate(self, a: int, b: int, parity: int, step: ChainStep, deps: set[int]) -> bool:
        known = self.uf.relation(a, b)
        if known == parity:
            return False
        idx = len(self.steps)
        self.steps.append(step)
        self.deps.append(deps)
        if known is None:
            self.uf.union(a, b, parity)
            self.forest.setdefault(a, []).append((b, idx))
            self.forest.setdefault(b, []).append((a, idx))
            return True
        raise _Conflict({idx} | self._path(a, b))

    # clause simplification ----------------------------------------------

    def _reduce(self, clause: Clause):
        """Simplify ``clause`` modulo the known classes.

        Returns None when some literal is already true or two literals are
        complementary, else ``(groups, deps)`` where ``groups`` maps each
        class root to ``(root side required, literal primes)``.
        """
        groups: dict[int, tuple[int, list[int]]] = {}
        deps: set[int] = set()
        anchor_root, _ = self.uf.find(ANCHOR)
        for p, s in sorted(clause.literals):
            root, parity = self.uf.find(p)
            want = s if not parity else 3 - s
            if root == anchor_root:
                anchor_parity = self.uf.relation(p, ANCHOR)
                if (1 if not anchor_parity else 2) == s:
                    return None
                deps |= self._path(p, ANCHOR)
                continue
            if root in groups:
                if groups[root][0] != want:
                    return None
                head = groups[root][1][0]
                deps |= self._path(head, p)
                groups[root][1].append(p)
            else:
                groups[root] = (want, [p])
        return groups, deps

    def _aligned(self, head: int, members: Iterable[int]) -> list[int]:
        return [m for m in members if self.uf.relation(head, m) == 0]

    def _block(self, primes: Sequence[int]) -> Optional[set[int]]:
        """Path steps tying ``primes`` to one side, or None if they are not tied."""
        head = primes[0]
        if any(self.uf.relation(head, p) != 0 for p in primes[1:]):
            return None
        deps: set[int] = set()
        for p in primes[1:]:
            deps |= self._path(head, p)
        return deps

    def _process_blocks(self, first: Clause) -> Optional[bool]:
        """Both parts of the decomposition as single blocks.

        If the primes of ``n1`` are all known to share a side, and likewise
        those of ``n2``, the clause pair forces the two blocks together.
        With ``n1 = 1`` and the primes of ``n - 1`` falling into exactly two
        blocks, the pair forces those blocks apart.
        """
        d = first.decomposition
        xs = sorted(p for p, s in first.literals if s == 1)
        ys = sorted(p for p, s in first.literals if s == 2)
        if xs and ys:
            dx, dy = self._block(xs), self._block(ys)
            if dx is None or dy is None:
                return None
            step = ChainStep(SAME, tuple(sorted(set(xs) | set(ys))), d)
            return self._relate(xs[0], ys[0], 0, step, dx | dy)
        blocks: list[list[int]] = []
        for p in ys:
            for block in blocks:
                if self.uf.relation(block[0], p) == 0:
                    block.append(p)
                    break
            else:
                blocks.append([p])
        if len(blocks) != 2:
            return None
        deps = self._block(blocks[0]) | self._block(blocks[1])
        a, b = blocks[0][0], blocks[1][0]
        step = ChainStep(DIFFERENT, (min(a, b), max(a, b)), d)
        return self._relate(a, b, 1, step, deps)

    def _process(self, n1: int) -> bool:
        n = self.n
        first = clause_of(Decomposition(n, n1, n - n1))
        by_blocks = self._process_blocks(first)
        if by_blocks is not None:
            return by_blocks
        clauses = [first] if 2 * n1 == n else [first, clause_of(first.decomposition.swapped())]
        progress = False
        binaries = []
        # reduce both clauses against the same state, then act on them
        reduced = [(c, self._reduce(c)) for c in clauses]
        for clause, red in reduced:
            if red is None:
                continue
            groups, deps = red
            if not groups:
                idx = len(self.steps)
                self.steps.append(ChainStep(FALSIFIED, tuple(sorted(clause.primes())), clause.decomposition))
                self.deps.append(deps)
                raise _Conflict({idx})
        for clause, red in reduced:
            if red is None:
                continue
            groups, deps = red
            if len(groups) == 1:
                ((_, members),) = groups.values()
                p = members[0]
                side = next(s for q, s in clause.literals if q == p)
                kind = FORCED_1 if side == 1 else FORCED_2
                step = ChainStep(kind, tuple(sorted(self._aligned(p, members))), clause.decomposition)
                progress |= self._relate(p, ANCHOR, 0 if side == 1 else 1, step, deps)
            elif len(groups) == 2:
                binaries.append((groups, deps))
        if len(binaries) < 2:
            return progress
        (g1, d1), (g2, d2) = binaries
        # complementary two-class clauses: exactly one of the two literals holds
        if set(g1) != set(g2) or any(g1[r][0] == g2[r][0] for r in g1):
            return progress
        rx, ry = sorted(g1)
        (vx, xs), (vy, ys) = g1[rx], g1[ry]
        px, py = xs[0], ys[0]
        deps = d1 | d2 | self._path(px, g2[rx][1][0]) | self._path(py, g2[ry][1][0])
        parity = (vx == vy) ^ self.uf.find(px)[1] ^ self.uf.find(py)[1]
        if parity == 0:
            xs_all = self._aligned(px, xs + g2[rx][1])
            ys_all = self._aligned(py, ys + g2[ry][1])
            step = ChainStep(SAME, tuple(sorted(set(xs_all + ys_all))), first.decomposition)
        else:
            step = ChainStep(DIFFERENT, tuple(sorted((px, py))), first.decomposition)
        return self._relate(px, py, parity, step, deps) or progress

    # driver -------------------------------------------------------------

    def run(self) -> Optional[set[int]]:
        try:
            for c in derive_binary_constraints(self.n).constraints:
                first = min(c.provenance, key=lambda d: d.n1)
                step = ChainStep(c.kind, (c.p, c.q), first)
                self._relate(c.p, c.q, c.parity, step, set())
            changed = True
            while changed:
                changed = False
                for n1 in range(1, self.n // 2 + 1):
                    changed |= self._process(n1)
        except _Conflict as conflict:
            return conflict.steps
        return None

    def closure(self, seeds: Iterable[int]) -> set[int]:
        seen: set[int] = set()
        stack = list(seeds)
        while stack:
            i = stack.pop()
            if i not in seen:
                seen.add(i)
                stack.extend(self.deps[i])
        return seen


def contradiction_chain(n: int) -> Optional[list[ChainStep]]:
    """Refute ``n`` by propagation alone, or return None if that falls short.

    The chain lists the steps the final conflict depends on: what the
    closing step leaned on, the closing step, then the rest of the cycle.
    A closing step that leans on nothing goes last.

    Raises PartitionError if ``n`` is prime partitionable.
    """
    require_n(n)
    refuter = _Refuter(n)
    cycle = refuter.run()
    if cycle is None:
        from .solver import solve

        if solve(n) is not None:
            raise PartitionError(f"{n} is prime partitionable; there is nothing to refute")
        return None
    closing = max(cycle)
    head = sorted(refuter.closure(refuter.deps[closing]))
    tail = sorted(refuter.closure(cycle) - set(head) - {closing})
    order = head + [closing] + tail if head else tail + [closing]
    return [refuter.steps[i] for i in order]


# replay -------------------------------------------------------------------


def _implied(uf: ParityUnionFind, clauses: Sequence[Clause], claim) -> bool:
    """Does every assignment consistent with ``uf`` and ``clauses`` satisfy ``claim``?"""
    primes = sorted({p for c in clauses for p, _ in c.literals} | set(claim.primes))
    anchor_root, _ = uf.find(ANCHOR)
    roots = sorted({uf.find(p)[0] for p in primes} - {anchor_root})
    for values in product((1, 2), repeat=len(roots)):
        root_side = dict(zip(roots, values))
        root_side[anchor_root] = 1 if uf.find(ANCHOR)[1] == 0 else 2
        side = {}
        for p in primes:
            root, parity = uf.find(p)
            side[p] = root_side[root] if not parity else 3 - root_side[root]
        if all(c.satisfied_by(side) for c in clauses) and not claim.holds(side):
            return False
    return True


@dataclass(frozen=True)
class _Claim:
    step: ChainStep

    @property
    def primes(self):
        return self.step.primes

    def holds(self, side) -> bool:
        ps, kind = self.step.primes, self.step.kind
        if kind == SAME:
            return len({side[p] for p in ps}) == 1
        if kind == DIFFERENT:
            return side[ps[0]] != side[ps[1]]
        if kind in (FORCED_1, FORCED_2):
            return all(side[p] == (1 if kind == FORCED_1 else 2) for p in ps)
        return False  # a falsified clause claims there is no model at all


def check_chain(n: int, steps: Sequence[ChainStep]) -> bool:
    """Replay ``steps`` from scratch and confirm they refute ``n``.

    Each step must follow from its decomposition's clause pair plus the
    steps before it, and the last step (only the last) must produce a
    contradiction.
    """
    require_n(n)
    primes = set(primes_below(n))
    uf = ParityUnionFind()
    uf.add(ANCHOR)
    for i, step in enumerate(steps):
        d = step.decomposition
        if d.n != n or not set(step.primes) <= primes or not step.primes:
            return False
        last = i == len(steps) - 1
        if step.kind == FALSIFIED:
            return last and _implied(uf, [clause_of(d)], _Claim(step))
        pair = [clause_of(d)] if d.n1 == d.n2 else [clause_of(d), clause_of(d.swapped())]
        if not _implied(uf, pair, _Claim(step)):
            return False
        ok = True
        if step.kind == SAME:
            head = step.primes[0]
            for p in step.primes[1:]:
                ok &= uf.union(head, p, 0)
        elif step.kind == DIFFERENT:
            ok = uf.union(step.primes[0], step.primes[1], 1)
        else:
            parity = 0 if step.kind == FORCED_1 else 1
            for p in step.primes:
                ok &= uf.union(p, ANCHOR, parity)
        if not ok:
            return last
    return False
