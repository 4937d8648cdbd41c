import random
from math import gcd

import pytest

from primepart.erdoswoods import (
    EWInterval,
    covering_system,
    interval_from_partition,
    min_interval_start,
    partition_from_interval,
    select_primes,
    verify_interval,
)
from primepart.numtheory import CongruenceSystem, crt_solve, primes_below
from primepart.partition import enumerate_partitions, partition_of, solve, verify_partition

SIXTEEN_A = partition_of(16, [2, 5, 11])
SIXTEEN_B = partition_of(16, [2, 3, 7, 13])


def brute_interval(e1, w):
    e2 = e1 + w
    return all(gcd(k, e1) > 1 or gcd(k, e2) > 1 for k in range(e1, e2 + 1))


def test_verify_interval_examples():
    assert verify_interval(EWInterval(2184, 16))
    # 2186 = 2 * 1093 is coprime to 2185 = 5 * 19 * 23 and to 2201 = 31 * 71
    assert gcd(2186, 2185) == 1 and gcd(2186, 2201) == 1
    assert not verify_interval(EWInterval(2185, 16))
    assert verify_interval(EWInterval(2, 1))


def test_verify_interval_matches_brute_force():
    rng = random.Random(7)
    for _ in range(2000):
        e1, w = rng.randrange(2, 5000), rng.randrange(1, 30)
        assert verify_interval(EWInterval(e1, w)) == brute_interval(e1, w)


def test_interval_rejects_bad_shape():
    with pytest.raises(ValueError):
        EWInterval(1, 5)
    with pytest.raises(ValueError):
        EWInterval(5, 0)


def test_select_primes_examples():
    a = select_primes(SIXTEEN_A).choices
    assert (a[1], a[2], a[9], a[11]) == (3, 2, 7, 11)
    assert select_primes(SIXTEEN_B).choices[1] == 5


def test_select_primes_rejects_bad_partition():
    with pytest.raises(ValueError):
        select_primes(partition_of(16, [2]))


def test_interval_from_partition_examples():
    system = covering_system(SIXTEEN_A)
    assert system == CongruenceSystem([(0, 2), (2, 3), (0, 5), (5, 7), (0, 11), (10, 13)])
    itv = interval_from_partition(SIXTEEN_A)
    assert itv == EWInterval(27830, 16) and verify_interval(itv)
    assert brute_interval(27830, 16)
    assert verify_interval(interval_from_partition(SIXTEEN_B))
    assert verify_interval(interval_from_partition(solve(22)))


def test_partition_from_interval_examples():
    assert partition_from_interval(EWInterval(2184, 16)) == SIXTEEN_B
    p = partition_from_interval(EWInterval(27830, 16))
    assert verify_partition(p) and {2, 5, 11} <= set(p.p1)
    with pytest.raises(ValueError):
        partition_from_interval(EWInterval(2185, 16))
    with pytest.raises(ValueError):
        partition_from_interval(EWInterval(2, 3))


def test_no_interval_of_width_17_at_small_scale():
    assert not any(verify_interval(EWInterval(e1, 17)) for e1 in range(2, 5000))


def test_min_interval_start_examples():
    assert min_interval_start(16, 10000) == 2184
    assert min_interval_start(16, 2000) is None
    assert min_interval_start(17, 10**5) is None
    assert min_interval_start(16, 2184) == 2184


def test_min_interval_start_matches_brute_force():
    first = next(e1 for e1 in range(2, 10**4) if brute_interval(e1, 16))
    assert first == 2184


def test_intervals_and_partitions_agree_to_40():
    for n in range(4, 41):
        p = solve(n)
        if p is not None:
            assert verify_interval(interval_from_partition(p))
    for w in range(4, 41):
        e1 = min_interval_start(w, 10**6)
        if e1 is not None:
            assert verify_partition(partition_from_interval(EWInterval(e1, w)))
            assert solve(w) is not None


def test_crt_consistency_and_endpoint_cover():
    for n in range(4, 61):
        for p in enumerate_partitions(n):
            sel = select_primes(p)
            residues = {}
            for j, q in sel.choices.items():
                assert residues.setdefault(q, -j % q) == -j % q
            itv = interval_from_partition(p)
            for j, q in sel.choices.items():
                k = itv.e1 + j
                assert k % q == 0
                if sel.sides[j] == 1:
                    assert j % q == 0 and itv.e1 % q == 0
                else:
                    assert (n - j) % q == 0 and itv.e2 % q == 0


def test_constructed_start_is_least_crt_representative():
    for n in (16, 22, 34, 36, 46):
        p = solve(n)
        x, modulus = crt_solve(covering_system(p))
        assert interval_from_partition(p).e1 == (x if x >= 2 else x + modulus)


def test_enriching_an_endpoint_keeps_covered_points():
    rng = random.Random(11)
    primes = primes_below(50)
    for _ in range(500):
        e1, w = rng.randrange(2, 3000), rng.randrange(2, 20)
        q = rng.choice(primes)
        covered = [k for k in range(e1 + 1, e1 + w) if gcd(k, e1) > 1]
        assert all(gcd(k, e1 * q) > 1 for k in covered)
