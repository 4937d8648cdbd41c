"""Self-contained certificates tying the three characterizations together."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Union

from . import __version__
from .erdoswoods import (
    EWInterval,
    interval_from_partition,
    min_interval_start,
    partition_from_interval,
    verify_interval,
)
from .numtheory import primes_below
from .partition import (
    SOLVER_CONFIG,
    ChainStep,
    Decomposition,
    PrimePartition,
    check_chain,
    contradiction_chain,
    enumerate_partitions,
    oracle_decides,
    require_n,
    solve,
    verify_partition,
)
from .witness import WitnessPair, partition_from_witness, verify_witness, witness_from_partition

POSITIVE = "prime-partitionable"
NEGATIVE = "not-prime-partitionable"
EXHAUSTIVE = "exhaustive-search"

# negative certificates re-run the oracle when it is cheap on either backend
ORACLE_RECHECK_MAX_PRIMES = 20

Refutation = Union[list[ChainStep], str]


class VerificationFailure(RuntimeError):
    """A verifier rejected an object this package constructed."""

    def __init__(self, message: str, certificate: "Certificate"):
        super().__init__(message)
        self.certificate = certificate


@dataclass
class Certificate:
    n: int
    verdict: str
    partition: Optional[PrimePartition] = None
    witness: Optional[WitnessPair] = None
    interval: Optional[EWInterval] = None
    refutation: Optional[Refutation] = None
    checks: list[tuple[str, bool]] = field(default_factory=list)
    config: dict = field(default_factory=dict)
    version: str = __version__

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.checks)

    def to_dict(self) -> dict:
        out: dict = {"n": self.n, "verdict": self.verdict}
        if self.partition is not None:
            out["partition"] = {"p1": list(self.partition.p1), "p2": list(self.partition.p2)}
        if self.witness is not None:
            w = self.witness
            out["witness"] = {"d": str(w.d), "n1": str(w.n1), "n2": str(w.n2)}
        if self.interval is not None:
            out["interval"] = {"e1": str(self.interval.e1), "w": self.interval.w}
        if self.refutation is not None:
            if isinstance(self.refutation, str):
                out["refutation"] = self.refutation
            else:
                out["refutation"] = [
                    {
                        "kind": s.kind,
                        "primes": list(s.primes),
                        "decomposition": [s.decomposition.n1, s.decomposition.n2],
                    }
                    for s in self.refutation
                ]
        out["checks"] = [{"name": name, "pass": passed} for name, passed in self.checks]
        out["tool"] = {"version": self.version, "config": self.config}
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        n = int(data["n"])
        cert = cls(n, data["verdict"])
        if "partition" in data:
            part = data["partition"]
            cert.partition = PrimePartition(n, tuple(part["p1"]), tuple(part["p2"]))
        if "witness" in data:
            w = data["witness"]
            cert.witness = WitnessPair(int(w["d"]), int(w["n1"]), int(w["n2"]))
        if "interval" in data:
            cert.interval = EWInterval(int(data["interval"]["e1"]), int(data["interval"]["w"]))
        if "refutation" in data:
            ref = data["refutation"]
            if isinstance(ref, str):
                cert.refutation = ref
            else:
                cert.refutation = [
                    ChainStep(s["kind"], tuple(s["primes"]), Decomposition(n, *s["decomposition"]))
                    for s in ref
                ]
        cert.checks = [(c["name"], bool(c["pass"])) for c in data.get("checks", [])]
        tool = data.get("tool", {})
        cert.config = tool.get("config", {})
        cert.version = tool.get("version", __version__)
        return cert

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


def run_checks(cert: Certificate) -> list[tuple[str, bool]]:
    """Re-run every verifier on the evidence carried by ``cert``."""
    n = cert.n
    checks = []
    if cert.verdict == POSITIVE:
        part, wit, itv = cert.partition, cert.witness, cert.interval
        checks.append(("partition-verifies", part is not None and verify_partition(part)))
        checks.append(("witness-verifies", wit is not None and wit.d == n and _safe(verify_witness, wit)))
        checks.append(("witness-recovers-partition", wit is not None and _recovers(partition_from_witness, wit)))
        checks.append(("interval-verifies", itv is not None and itv.w == n and verify_interval(itv)))
        checks.append(("interval-recovers-partition", itv is not None and _recovers(partition_from_interval, itv)))
        if part is not None and checks[0][1]:
            checks.append(("witness-built-from-partition", witness_from_partition(part) == wit))
            checks.append(("interval-built-from-partition", interval_from_partition(part) == itv))
    elif cert.verdict == NEGATIVE:
        checks.append(("solver-finds-no-partition", solve(n) is None))
        if isinstance(cert.refutation, list):
            checks.append(("refutation-replays", check_chain(n, cert.refutation)))
        else:
            checks.append(("refutation-present", cert.refutation == EXHAUSTIVE))
        if len(primes_below(n)) <= ORACLE_RECHECK_MAX_PRIMES:
            checks.append(("oracle-finds-no-partition", not oracle_decides(n)))
    else:
        checks.append(("verdict-known", False))
    return checks


def _safe(verifier, obj) -> bool:
    try:
        return verifier(obj)
    except ValueError:
        return False


def _recovers(convert, obj) -> bool:
    try:
        return verify_partition(convert(obj))
    except ValueError:
        return False


def certify(n: int, oracle: bool = False) -> Certificate:
    """Decide ``n`` and attach all evidence, verified.

    Raises VerificationFailure if any recorded check fails.
    """
    require_n(n)
    config = dict(SOLVER_CONFIG, oracle=oracle)
    if oracle:
        found = enumerate_partitions(n)
        partition = found[0] if found else None
    else:
        partition = solve(n)
    if partition is not None:
        cert = Certificate(
            n,
            POSITIVE,
            partition=partition,
            witness=witness_from_partition(partition),
            interval=interval_from_partition(partition),
            config=config,
        )
    else:
        chain = contradiction_chain(n)
        cert = Certificate(n, NEGATIVE, refutation=chain if chain is not None else EXHAUSTIVE, config=config)
    cert.checks = run_checks(cert)
    if not cert.ok:
        failed = [name for name, passed in cert.checks if not passed]
        raise VerificationFailure(f"certificate for {n} failed checks: {', '.join(failed)}", cert)
    return cert


@dataclass(frozen=True)
class CrossCheck:
    n: int
    by_partition: bool
    by_witness: bool
    by_interval: bool
    scanned_start: Optional[int] = None
    scan_consistent: bool = True

    @property
    def agree(self) -> bool:
        return self.by_partition == self.by_witness == self.by_interval and self.scan_consistent


def cross_check_report(n: int, scan_bound: int = 0) -> CrossCheck:
    """Decide ``n`` through partitions, witness pairs and intervals.

    With ``scan_bound`` the minimal interval of width ``n`` is also searched
    for directly. Finding one is consistent only if the solver accepts ``n``
    and the interval gives back a verified partition; finding none proves
    nothing either way.
    """
    require_n(n)
    partition = solve(n)
    by_witness = by_interval = False
    if partition is not None:
        witness = witness_from_partition(partition)
        by_witness = _safe(verify_witness, witness) and _recovers(partition_from_witness, witness)
        interval = interval_from_partition(partition)
        by_interval = verify_interval(interval) and _recovers(partition_from_interval, interval)
    scanned, consistent = None, True
    if scan_bound >= 2:
        scanned = min_interval_start(n, scan_bound)
        if scanned is not None:
            consistent = partition is not None and _recovers(partition_from_interval, EWInterval(scanned, n))
    return CrossCheck(n, partition is not None, by_witness, by_interval, scanned, consistent)


def cross_check(n: int, scan_bound: int = 0) -> bool:
    return cross_check_report(n, scan_bound).agree
