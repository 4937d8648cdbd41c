"""Prime partitions of the primes below ``n``: clauses, search and refutation."""
from .constraints import (
    DIFFERENT,
    SAME,
    BinaryConstraint,
    DerivedConstraints,
    ParityUnionFind,
    derive_binary_constraints,
)
from .model import (
    Clause,
    Decomposition,
    PartitionError,
    PrimePartition,
    clause_masks,
    clauses_for,
    partition_of,
    require_n,
    verify_partition,
)
from .solver import (
    ORACLE_MAX_PRIMES,
    SOLVER_CONFIG,
    OracleBoundError,
    enumerate_partitions,
    enumerate_pp,
    is_prime_partitionable,
    oracle_decides,
    solve,
)
from .chain import ChainStep, check_chain, contradiction_chain
