"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat R]

Workloads are the raw clause sets of several n (no union-find seeding) and
interval scans of the kind ``ew-min`` runs. Each row reports the best of R
runs per backend and the speedup.
"""
from __future__ import annotations

import argparse
import sys
import time

from primepart.kernels import _fallback
from primepart.numtheory import primes_below
from primepart.partition import clause_masks

try:
    from primepart.kernels import _core
except ImportError:
    _core = None


def best_of(repeat, func, *args):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = func(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def dpll_sweep(backend, sweep):
    """Decide every clause set in ``sweep``; returns the satisfiable count."""
    hits = 0
    for k, masks in sweep:
        hits += backend.dpll(k, masks, 1, 1, (1 << k) - 1) is not None
    return hits


def kernel(backend, name):
    if name == "dpll_sweep":
        return lambda sweep: dpll_sweep(backend, sweep)
    return getattr(backend, name)


def workloads():
    for n in (40, 52, 60):
        k = len(primes_below(n))
        yield f"oracle n={n} ({k} vars)", "oracle_solutions", (k, clause_masks(n), 0)
    sweep = [(len(primes_below(n)), clause_masks(n)) for n in range(4, 241)]
    yield "dpll raw sweep n=4..240", "dpll_sweep", (sweep,)
    yield "dpll raw n=271 (57 vars)", "dpll_sweep", ([(57, clause_masks(271))],)
    for w, hi in ((16, 10**5), (17, 10**5), (22, 10**5)):
        yield f"interval scan w={w} to {hi}", "min_interval_start", (w, 2, hi)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if _core is None:
        print("compiled kernel not built; nothing to compare", file=sys.stderr)
        return 1
    print(f"{'workload':34} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, name, call in workloads():
        t_py, r_py = best_of(args.repeat, kernel(_fallback, name), *call)
        t_c, r_c = best_of(args.repeat, kernel(_core, name), *call)
        flag = "" if r_py == r_c else "  MISMATCH"
        print(f"{label:34} {t_py:9.4f}s {t_c:9.4f}s {t_py / max(t_c, 1e-9):7.1f}x{flag}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
