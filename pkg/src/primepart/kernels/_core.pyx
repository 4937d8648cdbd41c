# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in :mod:`primepart.kernels._fallback`.

Same conventions and results; masks are limited to 64 variables and
interval endpoints to 63 bits. The dispatcher in
:mod:`primepart.kernels` routes larger inputs to the fallback.
"""
from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free

BACKEND = "cython"
MAX_VARS = 64
MAX_ENDPOINT = (1 << 63) - 1


cdef inline uint64_t _low_mask(int nvars):
    if nvars >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << nvars) - 1


cdef int _load(clauses, uint64_t **pos1, uint64_t **pos2) except -1:
    cdef Py_ssize_t n = len(clauses), i
    pos1[0] = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    pos2[0] = <uint64_t *> malloc(max(n, 1) * sizeof(uint64_t))
    if pos1[0] == NULL or pos2[0] == NULL:
        free(pos1[0])
        free(pos2[0])
        raise MemoryError()
    for i in range(n):
        a, b = clauses[i]
        pos1[0][i] = <uint64_t> a
        pos2[0][i] = <uint64_t> b
    return n


def oracle_solutions(int nvars, clauses, long limit=0):
    if nvars < 1:
        return []
    if nvars > 63:
        raise ValueError("oracle limited to 63 variables")
    cdef uint64_t *p1
    cdef uint64_t *p2
    cdef Py_ssize_t nc = _load(clauses, &p1, &p2), i
    cdef uint64_t full = _low_mask(nvars), rest, ones, off
    cdef uint64_t top = (<uint64_t>1) << (nvars - 1)
    cdef bint ok
    found = []
    try:
        rest = 0
        while rest < top:
            ones = (rest << 1) | 1
            rest += 1
            if ones == full:
                continue
            off = full ^ ones
            ok = True
            for i in range(nc):
                if not ((p1[i] & ones) or (p2[i] & off)):
                    ok = False
                    break
            if ok:
                found.append(ones)
                if limit and len(found) >= limit:
                    break
    finally:
        free(p1)
        free(p2)
    return found


cdef bint _propagate(uint64_t *p1, uint64_t *p2, Py_ssize_t nc,
                     uint64_t *assigned, uint64_t *ones):
    cdef bint changed = True
    cdef Py_ssize_t i
    cdef uint64_t a = assigned[0], o = ones[0], free_
    while changed:
        changed = False
        for i in range(nc):
            if (p1[i] & a & o) or (p2[i] & a & ~o):
                continue
            free_ = (p1[i] | p2[i]) & ~a
            if free_ == 0:
                return False
            if free_ & (free_ - 1) == 0:
                a |= free_
                if free_ & p1[i]:
                    o |= free_
                changed = True
    assigned[0] = a
    ones[0] = o
    return True


cdef bint _search(uint64_t *p1, uint64_t *p2, Py_ssize_t nc, uint64_t full,
                  uint64_t assigned, uint64_t ones, uint64_t forbidden,
                  uint64_t *out):
    cdef uint64_t bit, todo
    cdef int var
    if not _propagate(p1, p2, nc, &assigned, &ones):
        return False
    if assigned == full:
        if ones == forbidden:
            return False
        out[0] = ones
        return True
    todo = full & ~assigned
    var = 63
    while not (todo >> var) & 1:
        var -= 1
    bit = (<uint64_t>1) << var
    if _search(p1, p2, nc, full, assigned | bit, ones | bit, forbidden, out):
        return True
    return _search(p1, p2, nc, full, assigned | bit, ones & ~bit, forbidden, out)


def dpll(int nvars, clauses, assigned, ones, forbidden):
    if nvars > MAX_VARS:
        raise ValueError(f"compiled search limited to {MAX_VARS} variables")
    cdef uint64_t *p1
    cdef uint64_t *p2
    cdef Py_ssize_t nc = _load([c for c in clauses if not c[0] & c[1]], &p1, &p2)
    cdef uint64_t full = _low_mask(nvars), out = 0
    cdef uint64_t a = <uint64_t> assigned
    cdef bint hit
    try:
        hit = _search(p1, p2, nc, full, a, (<uint64_t> ones) & a,
                      <uint64_t> forbidden, &out)
    finally:
        free(p1)
        free(p2)
    return out if hit else None


cdef inline uint64_t _gcd(uint64_t a, uint64_t b):
    cdef uint64_t t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef bint _interval_ok(uint64_t e1, uint64_t w):
    cdef uint64_t e2 = e1 + w, k
    for k in range(e1 + 1, e2):
        if _gcd(k, e1) == 1 and _gcd(k, e2) == 1:
            return False
    return True


def interval_ok(e1, w):
    if e1 + w > MAX_ENDPOINT:
        raise OverflowError("endpoint exceeds 63 bits")
    return bool(_interval_ok(<uint64_t> e1, <uint64_t> w))


def min_interval_start(w, lo, hi):
    if hi + w > MAX_ENDPOINT:
        raise OverflowError("endpoint exceeds 63 bits")
    cdef uint64_t e1 = <uint64_t> lo, end = <uint64_t> hi, width = <uint64_t> w
    if lo > hi:
        return None
    while True:
        if _interval_ok(e1, width):
            return e1
        if e1 == end:
            return None
        e1 += 1
