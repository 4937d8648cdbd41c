import itertools
from math import gcd

import pytest

from primepart.kernels import _fallback

try:
    from primepart.kernels import _core
except ImportError:
    _core = None

BACKENDS = [_fallback] + ([_core] if _core is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda m: m.BACKEND)
def backend(request):
    return request.param


def brute_primes_below(n):
    return [p for p in range(2, n) if all(p % d for d in range(2, p))]


def brute_satisfies(n, side):
    """Direct reading of the definition: every n1 + n2 = n is supported."""
    for n1 in range(1, n):
        n2 = n - n1
        if not any(
            (s == 1 and gcd(n1, p) > 1) or (s == 2 and gcd(n2, p) > 1) for p, s in side.items()
        ):
            return False
    return True


def brute_assignments(n):
    """Every satisfying two-coloring of the primes below n, both orientations,
    both sides nonempty."""
    primes = brute_primes_below(n)
    found = []
    for labels in itertools.product((1, 2), repeat=len(primes)):
        if len(set(labels)) < 2:
            continue
        side = dict(zip(primes, labels))
        if brute_satisfies(n, side):
            found.append(side)
    return found


# acceptance reporting: one line per criterion in the terminal summary
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
