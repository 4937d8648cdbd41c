"""Prime partitionable numbers, witness pairs and Erdos-Woods intervals."""
__version__ = "0.1.0"

from .numtheory import crt_solve, factorize, is_prime_power, primes_below, radical
from .partition import (
    PrimePartition,
    clauses_for,
    contradiction_chain,
    derive_binary_constraints,
    enumerate_partitions,
    enumerate_pp,
    is_prime_partitionable,
    solve,
    verify_partition,
)
from .witness import (
    WitnessPair,
    complete_partner,
    enrich_witness,
    normalize_witness,
    partition_from_witness,
    verify_witness,
    witness_from_partition,
)
from .erdoswoods import (
    EWInterval,
    interval_from_partition,
    min_interval_start,
    partition_from_interval,
    select_primes,
    verify_interval,
)
from .certify import Certificate, certify, cross_check
