"""Bulk verification sweeps over primes.

The per-prime recurrences of the modular module are vectorized here across
chunks of primes (int64, double-width products stay below 2^63), so a
desk-scale sweep to 10^5 takes seconds and the 10^6 tier minutes. Work may
be partitioned across processes; chunk boundaries depend only on the range,
so the emitted record stream is identical for every worker count.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from typing import Iterator, Protocol

import numpy as np

from .exact import gcd_pair, iter_left_factorials
from .modular import VerificationRecord, residue_direct
from .primes import PrimeSieve, build_sieve

__all__ = [
    "MAX_SWEEP_PRIME",
    "CHUNK_PRIMES",
    "batch_residues",
    "CheckpointSink",
    "MemorySink",
    "kh_sweep",
    "kh2_scan",
    "a_set_scan",
    "h4_witness_search",
    "residue_summatory",
]

log = logging.getLogger(__name__)

# Largest prime whose square fits below 2^63 (int64 product bound).
MAX_SWEEP_PRIME = 3_037_000_499
# chunk = unit of vectorization, checkpoint cadence, and work distribution;
# must stay fixed or old checkpoints land mid-chunk and resumed ledgers
# would interleave differently
CHUNK_PRIMES = 1024

_KERNEL_METHODS = ("forward_v", "forward_t", "backward_s")


def batch_residues(primes: np.ndarray, method: str = "forward_v") -> np.ndarray:
    """rest(!q, q) for an ascending array of odd primes, vectorized.

    All three recurrences walk one shared index i while peeling finished
    primes off the sorted front (forward) or admitting them at the back
    (backward), so each prime sees exactly its own recurrence steps.
    """
    if method not in _KERNEL_METHODS:
        raise ValueError(f"method must be one of {_KERNEL_METHODS}, got {method!r}")
    q = np.ascontiguousarray(primes, dtype=np.int64)
    if q.size == 0:
        return np.zeros(0, dtype=np.int64)
    if q[0] < 3 or int(q.max()) > MAX_SWEEP_PRIME:
        raise ValueError(f"primes must lie in [3, {MAX_SWEEP_PRIME}]")
    if np.any(np.diff(q) <= 0):
        raise ValueError("primes must be strictly ascending")
    out = np.zeros(q.size, dtype=np.int64)
    top = int(q[-1])

    if method == "backward_s":
        # s_{q-1} = 0; s_i = 1 + i*s_{i+1} for i = q-2 .. 1; result s_1.
        # Prime q is active once i <= q-2.
        start = q.size
        for i in range(top - 2, 0, -1):
            while start > 0 and q[start - 1] >= i + 2:
                start -= 1
            vv = out[start:]
            np.multiply(vv, i, out=vv)
            np.add(vv, 1, out=vv)
            np.remainder(vv, q[start:], out=vv)
        return out

    # forward_v: v_1 = 0; v_i = 1 - i*v_{i-1};      result v_{q-1}
    # forward_t: t_1 = 0; t_i = (-1)^i + i*t_{i-1}; result t_{q-1}
    lo = 0  # primes q[:lo] are finished (q - 1 < i)
    for i in range(2, top):
        while lo < q.size and q[lo] <= i:
            lo += 1
        vv = out[lo:]
        if method == "forward_v":
            np.multiply(vv, -i, out=vv)
            np.add(vv, 1, out=vv)
        else:
            np.multiply(vv, i, out=vv)
            np.add(vv, 1 if i % 2 == 0 else -1, out=vv)
        np.remainder(vv, q[lo:], out=vv)
    return out


class CheckpointSink(Protocol):
    """Receives completed-prefix notifications from a sweep.

    frontier is the largest prime through which all work is already
    recorded (None for a fresh sweep); advance is called after every
    completed chunk, in ascending order, and must persist before returning
    if the sink is durable.
    """

    @property
    def frontier(self) -> int | None: ...

    def advance(self, frontier: int, counters: dict[str, int]) -> None: ...


@dataclass
class MemorySink:
    """In-memory checkpoint sink; handy default and test double."""

    frontier: int | None = None
    counters: dict[str, int] = field(default_factory=dict)
    advances: int = 0

    def advance(self, frontier: int, counters: dict[str, int]) -> None:
        if self.frontier is not None and frontier < self.frontier:
            raise ValueError(f"frontier regressed: {frontier} < {self.frontier}")
        self.frontier = frontier
        self.counters = dict(counters)
        self.advances += 1


def _kernel_task(args: tuple[np.ndarray, str]) -> tuple[np.ndarray, int]:
    chunk, method = args
    t0 = time.perf_counter_ns()
    residues = batch_residues(chunk, method)
    return residues, time.perf_counter_ns() - t0


def kh_sweep(
    prime_range: tuple[int, int],
    worker_count: int = 1,
    checkpoint_sink: CheckpointSink | None = None,
    *,
    method: str = "forward_v",
    sieve: PrimeSieve | None = None,
) -> Iterator[VerificationRecord]:
    """Verify p ∤ !p for every odd prime in [lo, hi], streaming records.

    Records come out in ascending prime order whatever the worker count;
    chunking is a pure function of the range, so two sweeps over the same
    range are record-for-record identical (timing fields aside). A zero
    residue is flagged loudly on the log and in the record, and the sweep
    carries on; a violation is a result, not an error. The sink's frontier
    suppresses re-emission of already-recorded primes on resume; progress
    is reported to the sink after each completed chunk.
    """
    lo, hi = prime_range
    if lo < 3:
        raise ValueError(f"kh_sweep requires lo >= 3, got {lo}")
    if hi > MAX_SWEEP_PRIME:
        raise ValueError(f"hi {hi} exceeds vectorized bound {MAX_SWEEP_PRIME}")
    if worker_count < 1:
        raise ValueError(f"worker_count must be >= 1, got {worker_count}")
    if hi < lo:
        return
    if sieve is None:
        sieve = build_sieve(hi)
    primes = sieve.primes_up_to(hi)
    primes = primes[primes >= max(lo, 3)]
    if primes.size == 0:
        return

    frontier = checkpoint_sink.frontier if checkpoint_sink is not None else None
    counters = {"records": 0, "violations": 0}
    chunks = [primes[s : s + CHUNK_PRIMES] for s in range(0, primes.size, CHUNK_PRIMES)]
    if frontier is not None:
        restored = dict(getattr(checkpoint_sink, "counters", None) or {})
        if restored:
            counters.update(restored)
        else:
            counters["records"] = sum(
                int(c.size) for c in chunks if int(c[-1]) <= frontier
            )
        chunks = [c for c in chunks if int(c[-1]) > frontier]

    def emit(
        chunk: np.ndarray, residues: np.ndarray, elapsed_ns: int
    ) -> Iterator[VerificationRecord]:
        per_prime_ns = elapsed_ns // max(int(chunk.size), 1)
        for p, r in zip(chunk.tolist(), residues.tolist()):
            if frontier is not None and p <= frontier:
                continue
            violation = r == 0
            if violation:
                log.warning("violation: prime %d divides its left factorial", p)
            counters["records"] += 1
            counters["violations"] += int(violation)
            yield VerificationRecord(
                prime=p,
                residue=r,
                violates_kh=violation,
                elapsed_ns=per_prime_ns,
                method=method,
            )

    if worker_count == 1 or len(chunks) <= 1:
        for chunk in chunks:
            residues, elapsed = _kernel_task((chunk, method))
            yield from emit(chunk, residues, elapsed)
            if checkpoint_sink is not None:
                checkpoint_sink.advance(int(chunk[-1]), dict(counters))
        return

    import multiprocessing

    with multiprocessing.Pool(processes=worker_count) as pool:
        tasks = ((chunk, method) for chunk in chunks)
        for chunk, (residues, elapsed) in zip(chunks, pool.imap(_kernel_task, tasks)):
            yield from emit(chunk, residues, elapsed)
            if checkpoint_sink is not None:
                checkpoint_sink.advance(int(chunk[-1]), dict(counters))


def kh2_scan(
    p_range: tuple[int, int], n_bound: int, sieve: PrimeSieve | None = None
) -> list[tuple[int, int]]:
    """All (p, n) with p in the range, n <= n_bound, and p^2 | !n.

    Odd primes run the mod-p^2 accumulation over every n up to n_bound
    (exhaustively, below p as well, where a hit would contradict nothing).
    p = 2 is handled through residue_direct mod 4 and surfaces the one
    known hit, !3 = 2^2.
    """
    lo, hi = p_range
    if n_bound < 2:
        raise ValueError(f"kh2_scan requires n_bound >= 2, got {n_bound}")
    if lo < 2:
        raise ValueError(f"kh2_scan requires lo >= 2, got {lo}")
    hits: list[tuple[int, int]] = []
    if lo <= 2 <= hi:
        for n in range(2, n_bound + 1):
            if residue_direct(n, 4).residue == 0:
                hits.append((2, n))
    if hi >= 3:
        if sieve is None:
            sieve = build_sieve(hi)
        for p in sieve.primes_up_to(hi).tolist():
            if p < max(lo, 3):
                continue
            m = p * p
            if m > (1 << 63) - 1:
                raise ValueError(f"p^2 overflows machine width at p = {p}")
            fact, kn = 1, 0
            for n in range(1, n_bound + 1):
                kn = (kn + fact) % m
                if kn == 0 and n >= 2:
                    hits.append((p, n))
                fact = fact * n % m
    return hits


def a_set_scan(r: int, n_bound: int, primes_only: bool = False) -> list[int]:
    """Members of A(r) up to n_bound: all n in (r, n_bound] with !n ≡ r (mod n).

    primes_only restricts to odd primes (n > 2), the conjectural domain,
    where r = 0 membership would be a divisibility violation. The full scan
    keeps the whole interval, including the trivial 2 ∈ A(0).
    """
    if r < 0:
        raise ValueError(f"a_set_scan requires r >= 0, got {r}")
    if n_bound < r + 1:
        raise ValueError(f"n_bound must be at least r+1 = {r + 1}, got {n_bound}")
    members = []
    if primes_only:
        sieve = build_sieve(max(n_bound, 3))
        candidates = [int(p) for p in sieve.primes_up_to(n_bound) if p > max(r, 2)]
    else:
        candidates = list(range(max(r + 1, 2), n_bound + 1))
    for n in candidates:
        if residue_direct(n, n).residue == r % n:
            members.append(n)
    return members


def h4_witness_search(n_bound: int, s_bound: int) -> list[tuple[int, int, int]]:
    """All (n, s, g) with 2 <= n < n+s <= n_bound, 1 <= s <= s_bound, and
    g = gcd(K(n), K(n+s)) != 2.

    Any hit falsifies the claim that consecutive-ish left factorials stay
    coprime apart from the shared factor 2.
    """
    if n_bound < 2 or s_bound < 1:
        raise ValueError("h4_witness_search requires n_bound >= 2, s_bound >= 1")
    kvals = {n: kn for n, _fact, kn in iter_left_factorials(n_bound)}
    out = []
    for n in range(2, n_bound):
        for s in range(1, min(s_bound, n_bound - n) + 1):
            g = gcd_pair(kvals[n], kvals[n + s])
            if g != 2:
                out.append((n, s, g))
    return out


def residue_summatory(x: int, sieve: PrimeSieve | None = None) -> tuple[int, float]:
    """(sum of rest(!p, p) over odd primes p <= x, that sum / (x^2/ln x)).

    The ratio is published as an empirical observation; whether it tends to
    a constant is open, and none is asserted.
    """
    if x < 3:
        raise ValueError(f"residue_summatory requires x >= 3, got {x}")
    if sieve is None:
        sieve = build_sieve(x)
    primes = sieve.primes_up_to(x)
    primes = primes[primes >= 3]
    total = 0
    for s in range(0, primes.size, CHUNK_PRIMES):
        total += int(batch_residues(primes[s : s + CHUNK_PRIMES]).sum())
    return total, total / (x * x / math.log(x))
