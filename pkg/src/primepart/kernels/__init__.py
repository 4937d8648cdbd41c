"""Hot loops behind a backend switch.

The compiled extension ``_core`` is used when it was built and imports
cleanly; otherwise the pure-Python ``_fallback`` serves every call. Set
``PRIMEPART_PURE_PYTHON=1`` to force the fallback. Inputs too wide for the
compiled 64-bit paths are routed to the fallback automatically.
"""
from __future__ import annotations

import os
from typing import Optional

from . import _fallback

_compiled = None
if not os.environ.get("PRIMEPART_PURE_PYTHON"):
    try:
        from . import _core as _compiled
    except ImportError:  # extension not built
        _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _fallback.BACKEND

_MAX_ENDPOINT = (1 << 63) - 1


def oracle_solutions(nvars: int, clauses, limit: int = 0) -> list[int]:
    if _compiled is not None and nvars <= 63:
        return _compiled.oracle_solutions(nvars, clauses, limit)
    return _fallback.oracle_solutions(nvars, clauses, limit)


def dpll(nvars: int, clauses, assigned: int, ones: int, forbidden: int) -> Optional[int]:
    if _compiled is not None and nvars <= 63:
        return _compiled.dpll(nvars, clauses, assigned, ones, forbidden)
    return _fallback.dpll(nvars, clauses, assigned, ones, forbidden)


def interval_ok(e1: int, w: int) -> bool:
    if _compiled is not None and e1 + w <= _MAX_ENDPOINT:
        return _compiled.interval_ok(e1, w)
    return _fallback.interval_ok(e1, w)


def min_interval_start(w: int, lo: int, hi: int) -> Optional[int]:
    if _compiled is not None and hi + w <= _MAX_ENDPOINT:
        return _compiled.min_interval_start(w, lo, hi)
    return _fallback.min_interval_start(w, lo, hi)
